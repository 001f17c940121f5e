#!/usr/bin/env python3
# File       : degrees.py
# Description: degrees: the degree lattice H_2(G/P), maximal roots and greedy decompositions
# Copyright 2022 The curvenbhd developers
"""Degrees in H_2(X) = Z Delta^vee / Z Delta^vee_P.

A Degree is the image of a coroot-lattice vector in the quotient, i.e. its
coefficients on the simple coroots outside Delta_P, listed in increasing
index order. Degrees are ordered coefficientwise. A maximal root of d is a
root-order maximal element of {alpha in R^+ minus R^+_P : alpha^vee <= d},
and a greedy decomposition peels maximal roots off d until none remain.
"""

import collections
import functools
import itertools
import logging

from curvenbhd.rootsys import (Coroot, ParabolicSubset, Root, RootSystemError,
                               parse_int_list)

logger = logging.getLogger(__name__)


class DegreeContextError(RootSystemError):
    """Degrees from different (type, rank, Delta_P) contexts were combined."""


class Degree:
    """Element of Z Delta^vee / Z Delta^vee_P

    Methods
    -------
    parse(literal, rs, parabolic)
        Build from a literal over the indices outside Delta_P, e.g. "2,1".
    zero(rs, parabolic)
        The zero degree.
    __add__, __sub__
        Lattice arithmetic in one context.
    __le__, __ge__
        Coefficientwise order; incomparable pairs give False both ways.
    is_zero, is_effective
    """

    def __init__(self, rs, parabolic, coeffs):
        """Constructor for Degree class

        Parameters
        ----------
        rs: RootSystem
        parabolic: ParabolicSubset
        coeffs: iterable of int
            coefficients on the simple coroots outside Delta_P,
            in increasing index order
        """

        rs.check_parabolic(parabolic)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != len(parabolic.complement):
            raise DegreeContextError(
                f"Degree needs {len(parabolic.complement)} coefficients "
                f"(indices {list(parabolic.complement)}), got {len(coeffs)}")
        self.rs = rs
        self.parabolic = parabolic
        self.coeffs = coeffs

    @classmethod
    def parse(cls, literal, rs, parabolic):
        """Degree from a comma separated literal such as "2,1"

        Parameters
        ----------
        literal: str
            coefficients over the indices outside Delta_P, in increasing order
        rs: RootSystem
        parabolic: ParabolicSubset

        Returns
        -------
        Degree
        """

        return cls(rs, parabolic, parse_int_list(literal, sep=",", flag="degree"))

    @classmethod
    def zero(cls, rs, parabolic):
        """The zero degree of H_2(G/P)."""
        return cls(rs, parabolic, (0,) * len(parabolic.complement))

    @property
    def context(self):
        return (self.rs.dynkin, self.parabolic)

    @property
    def indices(self):
        """Simple indices labelling the coefficients."""
        return self.parabolic.complement

    def _check_other(self, other):
        if not isinstance(other, Degree):
            raise TypeError('Input must be of type Degree')
        if other.context != self.context:
            raise DegreeContextError(
                f"Degrees live in different contexts: {self.context} vs {other.context}")

    def __add__(self, other):
        self._check_other(other)
        return Degree(self.rs, self.parabolic,
                      (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check_other(other)
        return Degree(self.rs, self.parabolic,
                      (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, int) or isinstance(other, bool):
            raise TypeError('Input must be of type int')
        return Degree(self.rs, self.parabolic, (c * other for c in self.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __le__(self, other):
        self._check_other(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __ge__(self, other):
        self._check_other(other)
        return other.__le__(self)

    def __eq__(self, other):
        if not isinstance(other, Degree):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.context, self.coeffs))

    def is_zero(self):
        return not any(self.coeffs)

    def is_effective(self):
        return all(c >= 0 for c in self.coeffs)

    def literal(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"Degree({self.literal()}; {self.rs.dynkin}, P={{{self.parabolic.literal()}}})"


def project(rs, coroot, parabolic):
    """Image of a coroot in Z Delta^vee / Z Delta^vee_P.

    Drops the coefficients indexed by Delta_P.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("B", 2))
    >>> project(rs, Coroot((2, 1)), ParabolicSubset([2], 2)).coeffs
    (2,)
    """

    if not isinstance(coroot, Coroot):
        raise TypeError('Input must be of type Coroot')
    return Degree(rs, parabolic, (coroot[i] for i in parabolic.complement))


def root_degree(rs, alpha, parabolic):
    """Degree of the T-stable curve through 1.P and s_alpha.P

    Parameters
    ----------
    rs: RootSystem
    alpha: Root
        positive root of rs
    parabolic: ParabolicSubset

    Returns
    -------
    Degree
        project(rs, alpha^vee, parabolic)
    """

    return project(rs, rs.coroot(alpha), parabolic)


def degree_leq(d1, d2):
    """Coefficientwise order on degrees of one context

    Parameters
    ----------
    d1, d2: Degree

    Returns
    -------
    bool

    Raises
    ------
    DegreeContextError
        the degrees belong to different root systems or parabolics
    """

    return d1 <= d2


@functools.lru_cache(maxsize=4096)
def _outside_degrees(rs, parabolic):
    # (alpha, project(alpha^vee)) for alpha in R^+ minus R^+_P
    return tuple((a, root_degree(rs, a, parabolic))
                 for a in rs.positive_roots_outside(parabolic))


def _candidates(rs, d, parabolic):
    return [a for a, degree in _outside_degrees(rs, parabolic) if degree <= d]


def maximal_roots(rs, d, parabolic):
    """Maximal roots of d, lex-sorted.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("B", 2))
    >>> borel = ParabolicSubset([], 2)
    >>> maximal_roots(rs, Degree(rs, borel, (2, 1)), borel)
    (Root(1,2),)
    """

    if d.context != (rs.dynkin, parabolic):
        raise DegreeContextError(f"{d!r} does not belong to {rs.dynkin}, {parabolic!r}")
    candidates = _candidates(rs, d, parabolic)
    return tuple(a for a in candidates
                 if not any(g > a for g in candidates))


class GreedyDecomposition:
    """Greedy decomposition (alpha_1, ..., alpha_k) of a degree

    Attributes
    ----------
    degree: Degree
        the decomposed degree
    parts: tuple of Root
        the peeled maximal roots, in peeling order
    residual: Degree
        what is left once no maximal root remains
    """

    def __init__(self, degree, parts, residual):
        self.degree = degree
        self.parts = tuple(parts)
        self.residual = residual

    def multiset(self):
        """Parts as a multiset, the tie-break independent invariant."""
        return collections.Counter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if not isinstance(other, GreedyDecomposition):
            return NotImplemented
        return (self.degree, self.parts) == (other.degree, other.parts)

    def __repr__(self):
        parts = ", ".join(p.literal() for p in self.parts)
        return f"GreedyDecomposition(({parts}))"


def greedy_decomposition(rs, d, parabolic):
    """Greedy decomposition with the lex-smallest maximal root at each step.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("B", 2))
    >>> borel = ParabolicSubset([], 2)
    >>> greedy_decomposition(rs, Degree(rs, borel, (2, 1)), borel)
    GreedyDecomposition((1,2, 1,0))
    """

    if not d.is_effective():
        raise DegreeContextError(f"{d!r} is not effective")
    parts = []
    residual = d
    while True:
        maxima = maximal_roots(rs, residual, parabolic)
        if not maxima:
            break
        parts.append(maxima[0])
        residual = residual - root_degree(rs, maxima[0], parabolic)
    logger.debug("greedy decomposition of %r: %s", d, parts)
    return GreedyDecomposition(d, parts, residual)


def all_greedy_multisets(rs, d, parabolic):
    """Part multisets over every tie-breaking order, as sorted tuples."""
    memo = {}

    def _explore(degree):
        if degree in memo:
            return memo[degree]
        maxima = maximal_roots(rs, degree, parabolic)
        if not maxima:
            result = {()}
        else:
            result = set()
            for alpha in maxima:
                rest = degree - root_degree(rs, alpha, parabolic)
                for tail in _explore(rest):
                    result.add(tuple(sorted((alpha,) + tail,
                                            key=Root.sort_key)))
        memo[degree] = result
        return result

    return _explore(d)


def degrees_up_to(rs, bound, parabolic):
    """Every effective degree d <= bound, in lexicographic order."""
    ranges = [range(c + 1) for c in bound.coeffs]
    for coeffs in itertools.product(*ranges):
        yield Degree(rs, parabolic, coeffs)


def highest_degree(rs, parabolic):
    """project(theta^vee) for the highest root theta."""
    return root_degree(rs, rs.highest_root(), parabolic)
