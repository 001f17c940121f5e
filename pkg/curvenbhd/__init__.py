"""curvenbhd: curve neighborhoods of Schubert varieties and cosmall roots."""

from curvenbhd.cosmall import (CosmallReport, Verdict, cosmall_report, cosmall_roots,
                               is_cosmall, is_P_cosmall, is_P_cosmall_criterion,
                               is_P_cosmall_definitional, p_cosmall_roots)
from curvenbhd.curves import (SchubertClass, curve_neighborhood, point_neighborhood,
                              z_P_d)
from curvenbhd.degrees import (Degree, DegreeContextError, greedy_decomposition,
                               maximal_roots, project)
from curvenbhd.rootsys import (Coroot, DynkinType, DynkinTypeError, LiteralError,
                               NotARootError, ParabolicError, ParabolicSubset, Root,
                               RootSystem, RootSystemError, build)
from curvenbhd.weyl import WeylElement, Word, hecke_product, reflection

__version__ = "0.1.0"
