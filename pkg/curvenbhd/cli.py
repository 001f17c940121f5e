#!/usr/bin/env python3
# File       : cli.py
# Description: cli: command line front end for queries, tables and verification
# Copyright 2022 The curvenbhd developers
"""Command line interface.

Examples
--------
    $ python -m curvenbhd cosmall --type B2 --root 1,1 --parabolic ""
    $ python -m curvenbhd curve-nbhd --type B2 --word "1" --degree 2,1
    $ python -m curvenbhd hecke --type A2 --word "1" --word "1 2"
    $ python -m curvenbhd table --type D4 --format json
    $ python -m curvenbhd verify --max-rank 3 --suite theorem3 -v

Every simple-root index is 1-based. Exit status is 0 on success, 1 when
verify finds a counterexample and 2 on invalid input.
"""

import argparse
import dataclasses
import json
import logging
import sys

from curvenbhd.cosmall import cosmall_report
from curvenbhd.curves import curve_neighborhood, z_P_d
from curvenbhd.degrees import Degree, greedy_decomposition
from curvenbhd.rootsys import (DynkinType, DynkinTypeError, LiteralError,
                               ParabolicSubset, Root, RootSystemError, build)
from curvenbhd.tables import emit_table, render_table_json, render_table_text
from curvenbhd.verify import DEFAULT_SAMPLES, DEFAULT_SEED, SUITES, run_suites
from curvenbhd.weyl import WeylElement, Word

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'


@dataclasses.dataclass(frozen=True)
class QueryConfig:
    """Validated-on-use view of the command line

    Literals stay as text until a command asks for them, so each parse
    error names the flag it came from.
    """

    command: str
    dynkin: str = None
    rank: int = None
    parabolic: str = ""
    root: str = None
    words: tuple = ()
    degree: str = None
    fmt: str = "text"
    max_rank: int = 3
    suites: tuple = ()
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    workers: int = 1

    @classmethod
    def from_namespace(cls, args):
        """Collect the parsed arguments of any subcommand

        Parameters
        ----------
        args: argparse.Namespace
            result of build_parser().parse_args; flags a subcommand lacks
            take the field defaults

        Returns
        -------
        QueryConfig
        """

        return cls(command=args.command,
                   dynkin=getattr(args, "type", None),
                   rank=getattr(args, "rank", None),
                   parabolic=getattr(args, "parabolic", ""),
                   root=getattr(args, "root", None),
                   words=tuple(getattr(args, "word", None) or ()),
                   degree=getattr(args, "degree", None),
                   fmt=getattr(args, "format", "text"),
                   max_rank=getattr(args, "max_rank", 3),
                   suites=tuple(getattr(args, "suite", None) or ()),
                   seed=getattr(args, "seed", DEFAULT_SEED),
                   samples=getattr(args, "samples", DEFAULT_SAMPLES),
                   workers=getattr(args, "workers", 1))

    def dynkin_type(self):
        """Parse --type (and --rank); raises DynkinTypeError if missing."""
        if self.dynkin is None:
            raise DynkinTypeError(f"{self.command}: --type is required")
        return DynkinType.parse(self.dynkin, rank=self.rank)

    def root_system(self):
        return build(self.dynkin_type())

    def parabolic_subset(self, rs):
        """Parse --parabolic against the rank of rs."""
        return ParabolicSubset.parse(self.parabolic, rs.rank)

    def root_value(self, rs):
        """Parse --root and check that it lies in rs

        Raises
        ------
        LiteralError
            missing flag, bad entry or wrong number of entries
        NotARootError
            a well-formed vector that is not a root
        """

        if self.root is None:
            raise LiteralError(f"{self.command}: --root is required")
        alpha = Root.parse(self.root, flag="root")
        if len(alpha) != rs.rank:
            raise LiteralError(
                f"root: {len(alpha)} entries given, {rs.dynkin} needs {rs.rank}")
        return rs.check_root(alpha)

    def weyl_elements(self, rs, count=None):
        """Parse every --word into a WeylElement of rs

        Parameters
        ----------
        rs: RootSystem
        count: int, optional
            exact number of --word values required

        Returns
        -------
        list of WeylElement
        """

        if count is not None and len(self.words) != count:
            raise LiteralError(
                f"{self.command}: expected {count} --word values, got {len(self.words)}")
        return [WeylElement.from_word(rs, Word.parse(text).check(rs.rank))
                for text in self.words]

    def degree_value(self, rs, parabolic):
        """Parse --degree; the zero degree when the flag is absent."""
        if self.degree is None:
            return Degree.zero(rs, parabolic)
        return Degree.parse(self.degree, rs, parabolic)


def _emit(config, data, lines):
    """Print data as JSON or lines as text, following --format."""
    if config.fmt == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _yes_no(value):
    if value is None:
        return "n/a (root lies in R^+_P)"
    return "true" if value else "false"


def cmd_cosmall(config):
    """Classify --root as cosmall and P-cosmall

    Parameters
    ----------
    config: QueryConfig

    Returns
    -------
    int
        exit status, always 0; input errors propagate as RootSystemError
    """

    rs = config.root_system()
    parabolic = config.parabolic_subset(rs)
    alpha = config.root_value(rs)
    report = cosmall_report(rs, alpha, parabolic)
    witness = "none" if report.witness is None else report.witness.literal()
    lines = [f"type: {rs.dynkin}",
             f"root: {alpha.literal()}",
             f"parabolic: {{{parabolic.literal()}}}",
             f"cosmall: {_yes_no(report.is_cosmall)}",
             f"delta_set: {{{','.join(str(i) for i in sorted(report.delta_set))}}}",
             f"P-cosmall: {_yes_no(report.is_P_cosmall)}",
             f"witness: {witness}"]
    _emit(config, report.to_dict(), lines)
    return 0


def cmd_curve_nbhd(config):
    """Print the greedy decomposition of --degree, z^P_d and the curve
    neighborhood of X(w), where w is the single --word (identity if absent)

    Returns
    -------
    int
        exit status 0
    """

    rs = config.root_system()
    parabolic = config.parabolic_subset(rs)
    if len(config.words) > 1:
        raise LiteralError("curve-nbhd: at most one --word value")
    w = (config.weyl_elements(rs)[0] if config.words
         else WeylElement.identity(rs))
    d = config.degree_value(rs, parabolic)
    greedy = greedy_decomposition(rs, d, parabolic)
    z = z_P_d(rs, d, parabolic)
    nbhd = curve_neighborhood(rs, w, d, parabolic)
    data = {
        "dynkin": str(rs.dynkin),
        "parabolic": sorted(parabolic.members),
        "w": list(w.reduced_word().letters),
        "degree": list(d.coeffs),
        "greedy": [a.literal() for a in greedy],
        "z": list(z.reduced_word().letters),
        "neighborhood": nbhd.to_dict(),
    }
    lines = [f"type: {rs.dynkin}",
             f"parabolic: {{{parabolic.literal()}}}",
             f"w: {w}",
             f"degree: {d.literal()}",
             "greedy: " + (" ".join(f"({a.literal()})" for a in greedy) or "none"),
             f"z: {z}",
             f"neighborhood: {nbhd.rep}"]
    _emit(config, data, lines)
    return 0


def cmd_greedy(config):
    """Print the greedy decomposition of --degree and its residual."""
    rs = config.root_system()
    parabolic = config.parabolic_subset(rs)
    d = config.degree_value(rs, parabolic)
    greedy = greedy_decomposition(rs, d, parabolic)
    data = {"dynkin": str(rs.dynkin),
            "parabolic": sorted(parabolic.members),
            "degree": list(d.coeffs),
            "parts": [a.literal() for a in greedy],
            "residual": list(greedy.residual.coeffs)}
    lines = [f"degree: {d.literal()}"]
    lines += [f"part {k}: {a.literal()}" for k, a in enumerate(greedy, start=1)]
    lines.append(f"residual: {greedy.residual.literal()}")
    _emit(config, data, lines)
    return 0


def cmd_hecke(config):
    """Print the Hecke product of exactly two --word values

    Returns
    -------
    int
        exit status 0
    """

    rs = config.root_system()
    u, v = config.weyl_elements(rs, count=2)
    product = u.hecke(v)
    data = {"dynkin": str(rs.dynkin),
            "u": list(u.reduced_word().letters),
            "v": list(v.reduced_word().letters),
            "product": list(product.reduced_word().letters),
            "length": product.length()}
    lines = [f"u: {u}", f"v: {v}", f"u . v: {product}"]
    _emit(config, data, lines)
    return 0


def cmd_table(config):
    """Print the table of cosmall roots of a classical --type."""
    table = emit_table(config.dynkin_type())
    if config.fmt == "json":
        print(render_table_json(table))
    else:
        print(render_table_text(table), end="")
    return 0


def cmd_verify(config):
    """Run the selected verification suites and print one summary per suite

    Parameters
    ----------
    config: QueryConfig
        max_rank, suites, seed, samples and workers are used

    Returns
    -------
    int
        0 when every suite passed, 1 when any counterexample was found
    """

    if config.max_rank < 2:
        raise LiteralError("max-rank: must be at least 2")
    if config.samples < 0 or config.workers < 1:
        raise LiteralError("verify: --samples must be >= 0 and --workers >= 1")
    results = run_suites(config.suites, max_rank=config.max_rank,
                         seed=config.seed, samples=config.samples,
                         workers=config.workers)
    if config.fmt == "json":
        print(json.dumps([{"suite": r.name, "cases": r.cases,
                           "counterexamples": r.counterexamples,
                           "notes": r.notes, "seconds": round(r.seconds, 3)}
                          for r in results], indent=2, ensure_ascii=False))
    else:
        for r in results:
            print(r.summary())
            for message in r.counterexamples:
                print(f"  counterexample: {message}")
            for note in r.notes:
                print(f"  note: {note}")
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "cosmall": cmd_cosmall,
    "curve-nbhd": cmd_curve_nbhd,
    "greedy": cmd_greedy,
    "hecke": cmd_hecke,
    "table": cmd_table,
    "verify": cmd_verify,
}


def build_parser():
    """Argument parser with one subparser per entry of COMMANDS

    Returns
    -------
    argparse.ArgumentParser
    """

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for INFO, -vv for DEBUG logging.")
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="Output format (default: text).")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", help='Dynkin type, e.g. "B4", or "B" with --rank.')
    typed.add_argument("--rank", type=int, default=None,
                       help="Number of simple roots, if not part of --type.")

    located = argparse.ArgumentParser(add_help=False)
    located.add_argument("--parabolic", default="",
                         help='Delta_P as 1-based indices, e.g. "1,3"; "" is the Borel.')

    ap = argparse.ArgumentParser(
        prog="curvenbhd",
        description="Curve neighborhoods of Schubert varieties and cosmall roots.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosmall", parents=[common, typed, located],
                       help="Classify a root as cosmall / P-cosmall.")
    p.add_argument("--root", required=True,
                   help='Root over the simple roots, e.g. "1,2" for b1+2b2.')

    p = sub.add_parser("curve-nbhd", parents=[common, typed, located],
                       help="Curve neighborhood of X(w) in degree d.")
    p.add_argument("--word", action="append",
                   help='Reduced or unreduced word of w, e.g. "1 2 1" (default identity).')
    p.add_argument("--degree", default=None,
                   help='Degree over the indices outside Delta_P, e.g. "2,1".')

    p = sub.add_parser("greedy", parents=[common, typed, located],
                       help="Greedy decomposition of a degree.")
    p.add_argument("--degree", default=None,
                   help='Degree over the indices outside Delta_P, e.g. "2,1".')

    p = sub.add_parser("hecke", parents=[common, typed],
                       help="Hecke product of two words.")
    p.add_argument("--word", action="append",
                   help="Give exactly twice: the left and right factors.")

    sub.add_parser("table", parents=[common, typed],
                   help="Table of cosmall roots for a classical type.")

    p = sub.add_parser("verify", parents=[common],
                       help="Run the verification sweeps.")
    p.add_argument("--max-rank", type=int, default=3,
                   help="Largest rank swept (default: 3).")
    p.add_argument("--suite", action="append", choices=list(SUITES),
                   help="Run only this suite; may be repeated.")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"Seed of the sampled sweeps (default: {DEFAULT_SEED}).")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                   help=f"Random recursion cases at rank 4 (default: {DEFAULT_SAMPLES}).")
    p.add_argument("--workers", type=int, default=1,
                   help="Worker threads, one suite per worker (default: 1).")
    return ap


def configure_logging(verbose):
    """Set up the root handler and the package log level

    Parameters
    ----------
    verbose: int
        count of -v flags: 0 WARNING, 1 INFO, 2 or more DEBUG
    """

    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger("curvenbhd").setLevel(level)


def main(argv=None):
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    config = QueryConfig.from_namespace(args)
    logger.debug("%r", config)
    try:
        return COMMANDS[config.command](config)
    except RootSystemError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
