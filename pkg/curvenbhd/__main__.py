import sys

from curvenbhd.cli import main

sys.exit(main())
