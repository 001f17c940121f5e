#!/usr/bin/env python3
# File       : cosmall.py
# Description: cosmall: classification of cosmall and P-cosmall roots
# Copyright 2022 The curvenbhd developers
"""Cosmall and P-cosmall roots.

A root alpha in R^+ minus R^+_P is P-cosmall when it is a maximal root of
its own degree alpha^vee + Z Delta^vee_P; cosmall means P-cosmall for the
Borel subgroup. Two independent P-cosmall tests are provided: the
definitional one, which searches for a dominating root, and the fast
criterion for cosmall roots, Delta(alpha) and Delta_P are disjoint. They
must never disagree.
"""

import logging

from curvenbhd.degrees import maximal_roots, root_degree
from curvenbhd.rootsys import NotARootError, ParabolicSubset, Root

logger = logging.getLogger(__name__)


class Verdict:
    """Boolean answer with an optional witness

    Truthiness is the answer, and a Verdict compares equal to its bool.
    Negative cosmall verdicts carry the lex-smallest dominating root gamma;
    failures of check_lemma4 carry the pair (alpha, beta).
    """

    def __init__(self, holds, witness=None):
        self.holds = bool(holds)
        self.witness = witness

    def __bool__(self):
        return self.holds

    def __eq__(self, other):
        if isinstance(other, bool):
            return self.holds == other
        if not isinstance(other, Verdict):
            return NotImplemented
        return (self.holds, self.witness) == (other.holds, other.witness)

    def __hash__(self):
        # must agree with the bool equality above
        return hash(self.holds)

    def __repr__(self):
        return f"Verdict({self.holds}, witness={self.witness!r})"


def _borel(rs):
    return ParabolicSubset((), rs.rank)


def _dominating_roots(rs, alpha, parabolic):
    """gamma > alpha outside R^+_P with gamma^vee <= alpha^vee mod Z Delta^vee_P."""
    d = root_degree(rs, alpha, parabolic)
    return [g for g in rs.positive_roots_outside(parabolic)
            if g > alpha and root_degree(rs, g, parabolic) <= d]


def is_cosmall(rs, alpha):
    """True iff no gamma > alpha has gamma^vee <= alpha^vee.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("B", 2))
    >>> is_cosmall(rs, Root((1, 1)))
    Verdict(False, witness=Root(1,2))
    """

    rs.check_positive(alpha)
    dominating = _dominating_roots(rs, alpha, _borel(rs))
    if dominating:
        return Verdict(False, dominating[0])
    return Verdict(True)


def is_P_cosmall_definitional(rs, alpha, parabolic):
    """alpha is a maximal root of project(alpha^vee).

    Raises
    ------
    NotARootError
        if alpha is not positive or lies in R^+_P
    """

    rs.check_positive(alpha)
    rs.check_parabolic(parabolic)
    if parabolic.contains_root(alpha):
        raise NotARootError(f"{alpha} lies in R^+_P for P = {{{parabolic.literal()}}}")
    d = root_degree(rs, alpha, parabolic)
    if alpha in maximal_roots(rs, d, parabolic):
        return Verdict(True)
    return Verdict(False, _dominating_roots(rs, alpha, parabolic)[0])


def is_P_cosmall_criterion(rs, alpha, parabolic):
    """Delta(alpha) and Delta_P are disjoint; alpha must be cosmall.

    Raises
    ------
    NotARootError
        if alpha lies in R^+_P or is not cosmall
    """

    rs.check_positive(alpha)
    rs.check_parabolic(parabolic)
    if parabolic.contains_root(alpha):
        raise NotARootError(f"{alpha} lies in R^+_P for P = {{{parabolic.literal()}}}")
    if not is_cosmall(rs, alpha):
        raise NotARootError(f"{alpha} is not cosmall")
    return not (rs.delta_set(alpha) & parabolic.members)


def is_P_cosmall(rs, alpha, parabolic):
    """Cosmall and Delta(alpha) disjoint from Delta_P, for any alpha outside R^+_P."""
    cosmall = is_cosmall(rs, alpha)
    if not cosmall:
        return cosmall
    if is_P_cosmall_criterion(rs, alpha, parabolic):
        return Verdict(True)
    return Verdict(False, _dominating_roots(rs, alpha, parabolic)[0])


def cosmall_roots(rs):
    """Cosmall positive roots of rs in lex order."""
    return tuple(a for a in rs.positive_roots if is_cosmall(rs, a))


def p_cosmall_roots(rs, parabolic):
    """P-cosmall roots of R^+ minus R^+_P in lex order

    Parameters
    ----------
    rs: RootSystem
    parabolic: ParabolicSubset

    Returns
    -------
    tuple of Root
    """

    return tuple(a for a in rs.positive_roots_outside(parabolic)
                 if is_P_cosmall(rs, a, parabolic))


def check_lemma4(rs):
    """No short cosmall alpha has some beta in Delta(alpha) with beta <= alpha.

    Returns
    -------
    Verdict
        witness (alpha, beta) of the first failure in lex order
    """

    for alpha in rs.short_roots:
        if not is_cosmall(rs, alpha):
            continue
        for index in sorted(rs.delta_set(alpha)):
            beta = rs.simple_root(index)
            if beta <= alpha:
                return Verdict(False, (alpha, beta))
    return Verdict(True)


class CosmallReport:
    """Everything known about one root relative to a parabolic subset

    Attributes
    ----------
    root: Root
    parabolic: ParabolicSubset
    is_cosmall: bool
    delta_set: frozenset of int
    is_P_cosmall: bool or None
        None when the root lies in R^+_P
    witness: Root or None
        dominating root for a negative verdict
    """

    def __init__(self, root, parabolic, is_cosmall, delta_set, is_P_cosmall,
                 witness=None):
        self.root = root
        self.parabolic = parabolic
        self.is_cosmall = is_cosmall
        self.delta_set = frozenset(delta_set)
        self.is_P_cosmall = is_P_cosmall
        self.witness = witness

    def to_dict(self):
        """JSON-ready form; roots are written as coefficient literals."""
        return {
            "root": self.root.literal(),
            "parabolic": sorted(self.parabolic.members),
            "rank": self.parabolic.rank,
            "is_cosmall": self.is_cosmall,
            "delta_set": sorted(self.delta_set),
            "is_P_cosmall": self.is_P_cosmall,
            "witness": None if self.witness is None else self.witness.literal(),
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of to_dict."""
        witness = data["witness"]
        return cls(Root.parse(data["root"]),
                   ParabolicSubset(data["parabolic"], data["rank"]),
                   data["is_cosmall"],
                   data["delta_set"],
                   data["is_P_cosmall"],
                   None if witness is None else Root.parse(witness))

    def __eq__(self, other):
        if not isinstance(other, CosmallReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"CosmallReport({self.to_dict()})"


def cosmall_report(rs, alpha, parabolic):
    """CosmallReport for alpha; witness explains the first negative verdict."""
    rs.check_positive(alpha)
    rs.check_parabolic(parabolic)
    cosmall = is_cosmall(rs, alpha)
    witness = cosmall.witness
    if parabolic.contains_root(alpha):
        p_cosmall = None
    else:
        verdict = is_P_cosmall_definitional(rs, alpha, parabolic)
        p_cosmall = verdict.holds
        if witness is None:
            witness = verdict.witness
    return CosmallReport(alpha, parabolic, cosmall.holds, rs.delta_set(alpha),
                         p_cosmall, witness)
