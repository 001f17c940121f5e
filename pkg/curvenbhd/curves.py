#!/usr/bin/env python3
# File       : curves.py
# Description: curves: curve neighborhoods of Schubert varieties in G/P
# Copyright 2022 The curvenbhd developers
"""Curve neighborhoods Gamma_d(X(w)) computed through Weyl group data.

The point neighborhood Gamma_d(1.P) = X(z^P_d) where

    z^P_d W_P = s_{alpha_1} . s_{alpha_2} . ... . s_{alpha_k} W_P

for a greedy decomposition (alpha_1, ..., alpha_k) of d, and for any w,
Gamma_d(X(w)) = X(w . z^P_d). The recursion
Gamma_d(X(w)) = Gamma_{d - alpha^vee}(X(w . s_alpha)), alpha a maximal
root of d, is implemented separately and serves as an oracle.
"""

import logging

from curvenbhd.degrees import (greedy_decomposition, maximal_roots,
                               root_degree)
from curvenbhd.weyl import WeylElement, reflection

logger = logging.getLogger(__name__)


class SchubertClass:
    """Schubert variety X(w) in G/P, held by its minimal coset representative

    Attributes
    ----------
    rep: WeylElement
        the representative in W^P
    parabolic: ParabolicSubset
    dimension: int
        l(rep)
    """

    def __init__(self, w, parabolic):
        """Constructor for SchubertClass; w is reduced to W^P."""
        self.rep = w.min_coset_rep(parabolic)
        self.parabolic = parabolic

    @property
    def rs(self):
        return self.rep.rs

    @property
    def dimension(self):
        """Dimension of X(w), the length of the minimal representative."""
        return self.rep.length()

    def contains(self, other):
        """X(other) is contained in X(self)."""
        return other.rep.bruhat_leq(self.rep)

    def to_dict(self):
        """JSON-ready form: dynkin, parabolic, word and dimension."""
        return {
            "dynkin": str(self.rs.dynkin),
            "parabolic": sorted(self.parabolic.members),
            "word": list(self.rep.reduced_word().letters),
            "dimension": self.dimension,
        }

    def __eq__(self, other):
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.rep == other.rep and self.parabolic == other.parabolic

    def __hash__(self):
        return hash((self.rep, self.parabolic))

    def __repr__(self):
        return f"SchubertClass(X({self.rep.reduced_word()}), P={{{self.parabolic.literal()}}})"


def hecke_of_reflections(rs, roots):
    """s_{alpha_1} . s_{alpha_2} . ... . s_{alpha_k}, left to right."""
    w = WeylElement.identity(rs)
    for alpha in roots:
        w = w.hecke(reflection(rs, alpha))
    return w


def z_P_d(rs, d, parabolic):
    """z^P_d in W^P from the greedy decomposition of d.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType, ParabolicSubset
    >>> from curvenbhd.degrees import Degree
    >>> rs = build(DynkinType("B", 2))
    >>> borel = ParabolicSubset([], 2)
    >>> z_P_d(rs, Degree(rs, borel, (2, 1)), borel).length()
    4
    """

    parts = greedy_decomposition(rs, d, parabolic).parts
    return hecke_of_reflections(rs, parts).min_coset_rep(parabolic)


def point_neighborhood(rs, d, parabolic):
    """Gamma_d(1.P) = X(z^P_d)."""
    return SchubertClass(z_P_d(rs, d, parabolic), parabolic)


def curve_neighborhood(rs, w, d, parabolic):
    """Gamma_d(X(w)) = X(w . z^P_d)."""
    z = z_P_d(rs, d, parabolic)
    return SchubertClass(w.hecke(z), parabolic)


def _first(maxima):
    return maxima[0]


def curve_neighborhood_via_theorem1(rs, w, d, parabolic, choose=_first):
    """Gamma_d(X(w)) by peeling one maximal root at a time.

    Parameters
    ----------
    rs: RootSystem
    w: WeylElement
    d: Degree
    parabolic: ParabolicSubset
    choose: callable, optional
        picks one root from the lex-sorted maximal roots; defaults to the
        lex-smallest, the tie-break of greedy_decomposition

    Returns
    -------
    SchubertClass
    """

    while True:
        maxima = maximal_roots(rs, d, parabolic)
        if not maxima:
            return SchubertClass(w, parabolic)
        alpha = choose(maxima)
        w = w.hecke(reflection(rs, alpha))
        d = d - root_degree(rs, alpha, parabolic)


def theorem1_outcomes(rs, w, d, parabolic):
    """Classes reached by the recursion over every maximal-root choice."""
    memo = {}

    def _explore(u, degree):
        key = (u, degree)
        if key in memo:
            return memo[key]
        maxima = maximal_roots(rs, degree, parabolic)
        if not maxima:
            result = {SchubertClass(u, parabolic)}
        else:
            result = set()
            for alpha in maxima:
                result |= _explore(u.hecke(reflection(rs, alpha)),
                                   degree - root_degree(rs, alpha, parabolic))
        memo[key] = result
        return result

    outcomes = _explore(w, d)
    if len(outcomes) > 1:
        logger.warning("maximal-root choices disagree for %r, %r: %s",
                       w, d, outcomes)
    return outcomes
