#!/usr/bin/env python3
# File       : rootsys.py
# Description: rootsys: Dynkin types, roots, coroots and root systems
# Copyright 2022 The curvenbhd developers
"""Classes to construct finite crystallographic root systems and to do
root-level arithmetic: coroots, lengths, root strings, the root partial order
and the set of simple roots that can be added to a root.

Roots are stored as integer coefficient vectors over the simple roots
beta_1, ..., beta_l, indexed from 1 everywhere in the public interface.
The ambient e_i coordinates of the classical types are kept only as a
conversion layer for the table emitter.
"""

import functools
import itertools
import logging

import numpy as np

logger = logging.getLogger(__name__)

FAMILIES = ("A", "B", "C", "D", "F", "G")
CLASSICAL_FAMILIES = ("A", "B", "C", "D")


class RootSystemError(ValueError):
    """Base class of every domain error raised by curvenbhd."""


class DynkinTypeError(RootSystemError):
    """Unknown family, unsupported rank or unparsable type literal."""


class NotARootError(RootSystemError):
    """A vector outside the root table, or a root violating a precondition."""


class ParabolicError(RootSystemError):
    """A parabolic subset naming simple roots that do not exist."""


class LiteralError(RootSystemError):
    """A malformed comma or whitespace separated literal."""


def parse_int_list(literal, sep=",", flag="literal"):
    """Parse a separated list of integers, reporting the bad position.

    Parameters
    ----------
    literal: str
        Text such as "1,2" (sep=",") or "1 2 1" (sep=None for whitespace)
    sep: str or None
        Separator handed to str.split
    flag: str
        Name of the option the literal came from, used in error messages

    Returns
    -------
    tuple of int

    Examples
    --------
    >>> parse_int_list("1, 2,0")
    (1, 2, 0)
    >>> parse_int_list("")
    ()
    """

    if not isinstance(literal, str):
        raise TypeError('Input must be of type str')
    text = literal.strip()
    if text == "":
        return ()
    values = []
    for pos, token in enumerate(text.split(sep), start=1):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise LiteralError(
                f"{flag}: entry {pos} ({token!r}) is not an integer") from None
    return tuple(values)


class DynkinType:
    """Dynkin type of an irreducible root system

    Methods
    -------
    parse(literal)
        Build a DynkinType from text such as "B4".
    is_classical
        True for the families A, B, C and D.
    is_simply_laced
        True when all roots have one length (A and D).
    ambient_rank
        The l of the e_1, ..., e_l coordinates (rank + 1 for type A).
    dual()
        Dynkin type of the coroot system.
    """

    def __init__(self, family, rank):
        """Constructor for DynkinType class

        Parameters
        ----------
        family: str
            one of "A", "B", "C", "D", "F", "G"
        rank: int
            number of simple roots
        """

        if not isinstance(family, str) or family.upper() not in FAMILIES:
            raise DynkinTypeError(f"Unknown Dynkin family {family!r}")
        if not isinstance(rank, (int, np.integer)) or isinstance(rank, bool):
            raise TypeError('Rank must be of type int')
        family = family.upper()
        rank = int(rank)
        minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
        if family == "F" and rank != 4:
            raise DynkinTypeError(f"Type F requires rank 4, got {rank}")
        if family == "G" and rank != 2:
            raise DynkinTypeError(f"Type G requires rank 2, got {rank}")
        if family in minimum and rank < minimum[family]:
            raise DynkinTypeError(
                f"Type {family} requires rank >= {minimum[family]}, got {rank}")
        self.family = family
        self.rank = rank

    @classmethod
    def parse(cls, literal, rank=None):
        """Build a DynkinType from "B4", or from "B" together with rank.

        Examples
        --------
        >>> DynkinType.parse("b4")
        DynkinType('B', 4)
        >>> DynkinType.parse("C", rank=3)
        DynkinType('C', 3)
        """

        if not isinstance(literal, str) or literal.strip() == "":
            raise DynkinTypeError("Dynkin type literal must be a non-empty string")
        text = literal.strip()
        family, digits = text[0], text[1:]
        if digits == "":
            if rank is None:
                raise DynkinTypeError(f"Dynkin type {text!r} has no rank")
            return cls(family, rank)
        if not (digits.isascii() and digits.isdecimal()):
            raise DynkinTypeError(f"Cannot parse Dynkin type {text!r}")
        if rank is not None and int(digits) != rank:
            raise DynkinTypeError(
                f"Rank {rank} contradicts the type literal {text!r}")
        return cls(family, int(digits))

    @property
    def is_classical(self):
        return self.family in CLASSICAL_FAMILIES

    @property
    def is_simply_laced(self):
        return self.family in ("A", "D")

    @property
    def ambient_rank(self):
        """Dimension l of the ambient e_1, ..., e_l coordinates."""
        return self.rank + 1 if self.family == "A" else self.rank

    def dual(self):
        """Dynkin type of the coroot system (B and C are swapped)."""
        swap = {"B": "C", "C": "B"}
        return DynkinType(swap.get(self.family, self.family), self.rank)

    def __eq__(self, other):
        if not isinstance(other, DynkinType):
            return NotImplemented
        return (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"DynkinType({self.family!r}, {self.rank})"

    def __str__(self):
        return f"{self.family}{self.rank}"


class _CoefficientVector:
    """Immutable integer vector over a basis of simple (co)roots.

    Shared arithmetic for Root and Coroot; operands must be the same class.
    """

    def __init__(self, coeffs):
        """Constructor for coefficient vectors

        Parameters
        ----------
        coeffs: iterable of int
            coefficients over beta_1, ..., beta_l
        """

        values = tuple(int(c) for c in coeffs)
        if len(values) == 0:
            raise ValueError('Coefficient vector must be non-empty')
        self.coeffs = values

    @classmethod
    def parse(cls, literal, flag="root"):
        """Build a vector from a comma separated literal such as "1,2"."""
        values = parse_int_list(literal, sep=",", flag=flag)
        if len(values) == 0:
            raise LiteralError(f"{flag}: empty literal")
        return cls(values)

    def literal(self):
        """Comma separated literal, the inverse of parse."""
        return ",".join(str(c) for c in self.coeffs)

    def _check_other(self, other):
        if type(other) is not type(self):
            raise TypeError(f'Input must be of type {type(self).__name__}')
        if len(other.coeffs) != len(self.coeffs):
            raise ValueError('Coefficient vectors have different ranks')

    def __eq__(self, other):
        if type(other) is not type(self):
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, index):
        """1-based access to the coefficient of beta_index."""
        if not 1 <= index <= len(self.coeffs):
            raise IndexError(f"Simple index {index} out of range")
        return self.coeffs[index - 1]

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

    def __add__(self, other):
        self._check_other(other)
        return type(self)(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check_other(other)
        return type(self)(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if not isinstance(other, (int, np.integer)) or isinstance(other, bool):
            raise TypeError('Input must be of type int')
        return type(self)(c * int(other) for c in self.coeffs)

    def __rmul__(self, other):
        return self.__mul__(other)

    def as_array(self):
        return np.asarray(self.coeffs, dtype=np.int64)

    @property
    def is_positive(self):
        return all(c >= 0 for c in self.coeffs) and any(self.coeffs)

    @property
    def is_negative(self):
        return all(c <= 0 for c in self.coeffs) and any(self.coeffs)

    @property
    def support(self):
        """Indices of the simple roots with non-zero coefficient."""
        return frozenset(i for i, c in enumerate(self.coeffs, start=1) if c)

    def __repr__(self):
        return f"{type(self).__name__}({self.literal()})"


class Root(_CoefficientVector):
    """Root written over the simple roots

    Comparison operators implement the root partial order: alpha <= gamma
    iff gamma - alpha has non-negative coefficients. Two roots can be
    incomparable, in which case both alpha <= gamma and gamma <= alpha
    are False.

    Examples
    --------
    >>> Root((1, 0)) <= Root((1, 1))
    True
    >>> Root((1, 0)) <= Root((0, 1))
    False
    >>> Root((1, 0)) + Root((0, 2))
    Root(1,2)
    """

    def __le__(self, other):
        self._check_other(other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __ge__(self, other):
        self._check_other(other)
        return other.__le__(self)

    def __lt__(self, other):
        return self.__le__(other) and self != other

    def __gt__(self, other):
        return self.__ge__(other) and self != other

    @property
    def height(self):
        return sum(self.coeffs)

    def sort_key(self):
        """Key for the lexicographic order used in every emitted list."""
        return self.coeffs


class Coroot(_CoefficientVector):
    """Coroot written over the simple coroots beta_1^vee, ..., beta_l^vee"""


def root_leq(alpha, gamma):
    """Root order: True iff gamma - alpha has all coefficients >= 0.

    Examples
    --------
    >>> root_leq(Root((1, 1)), Root((1, 2)))
    True
    """

    return alpha <= gamma


class ParabolicSubset:
    """The subset Delta_P of simple roots (1-based indices) defining P

    Methods
    -------
    parse(literal, rank)
        Build from "1,3"; the empty string is the Borel subgroup.
    complement
        Sorted indices of the simple roots outside Delta_P.
    contains_root(alpha)
        True iff alpha lies in the span of Delta_P (alpha in R_P).
    all_subsets(rank)
        Every parabolic subset of a given rank, smallest first.
    """

    def __init__(self, members, rank):
        """Constructor for ParabolicSubset class

        Parameters
        ----------
        members: iterable of int
            simple indices in Delta_P
        rank: int
            rank of the ambient root system
        """

        members = frozenset(int(m) for m in members)
        bad = sorted(m for m in members if not 1 <= m <= rank)
        if bad:
            raise ParabolicError(
                f"Simple indices {bad} are outside 1..{rank}")
        self.members = members
        self.rank = int(rank)

    @classmethod
    def parse(cls, literal, rank):
        """Parabolic subset from a literal such as "1,3"; "" is the Borel

        Parameters
        ----------
        literal: str
        rank: int
            number of simple roots

        Returns
        -------
        ParabolicSubset
        """

        values = parse_int_list(literal, sep=",", flag="parabolic")
        if len(set(values)) != len(values):
            raise ParabolicError(f"parabolic: repeated index in {literal!r}")
        return cls(values, rank)

    @classmethod
    def all_subsets(cls, rank):
        """Every parabolic subset of {1, ..., rank}, smallest first."""
        indices = range(1, rank + 1)
        for size in range(rank + 1):
            for combo in itertools.combinations(indices, size):
                yield cls(combo, rank)

    @property
    def complement(self):
        """Indices outside Delta_P in increasing order."""
        return tuple(i for i in range(1, self.rank + 1) if i not in self.members)

    def contains_root(self, alpha):
        return alpha.support <= self.members

    def literal(self):
        return ",".join(str(m) for m in sorted(self.members))

    def __contains__(self, index):
        return index in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, ParabolicSubset):
            return NotImplemented
        return (self.members, self.rank) == (other.members, other.rank)

    def __hash__(self):
        return hash((self.members, self.rank))

    def __repr__(self):
        return f"ParabolicSubset({{{self.literal()}}}, rank={self.rank})"


def ambient_simple_roots(dynkin):
    """Simple roots as integer rows in ambient coordinates.

    Classical types use the e_i realisation (beta_i = e_i - e_{i+1}, and
    beta_l = e_l, 2e_l or e_{l-1} + e_l for B, C, D). F4 is scaled by 2 so
    that every coordinate is an integer; only length ratios are ever used.
    """

    n = dynkin.rank
    family = dynkin.family
    if family == "G":
        return np.array([[1, -1, 0], [-2, 1, 1]], dtype=np.int64)
    if family == "F":
        return np.array([[0, 2, -2, 0],
                         [0, 0, 2, -2],
                         [0, 0, 0, 2],
                         [1, -1, -1, -1]], dtype=np.int64)

    dim = dynkin.ambient_rank
    simple = np.zeros((n, dim), dtype=np.int64)
    for i in range(min(n, dim - 1)):
        simple[i, i] = 1
        simple[i, i + 1] = -1
    if family == "B":
        simple[n - 1] = 0
        simple[n - 1, n - 1] = 1
    elif family == "C":
        simple[n - 1] = 0
        simple[n - 1, n - 1] = 2
    elif family == "D":
        simple[n - 1] = 0
        simple[n - 1, n - 2] = 1
        simple[n - 1, n - 1] = 1
    return simple


class RootSystem:
    """Root system of a Dynkin type, with its full root table

    The table is generated by closing the simple roots under the simple
    reflections. All roots are kept lexicographically sorted by coefficient
    vector.

    Attributes
    ----------
    dynkin: DynkinType
    rank: int
    cartan: np.ndarray
        cartan[i-1, j-1] = <beta_j, beta_i^vee>
    roots: tuple of Root
        all of R, lex-sorted
    positive_roots: tuple of Root
        R^+, lex-sorted
    simple_roots: tuple of Root
        beta_1, ..., beta_l in index order

    Examples
    --------
    >>> rs = RootSystem(DynkinType("B", 2))
    >>> rs.positive_roots
    (Root(0,1), Root(1,0), Root(1,1), Root(1,2))
    >>> rs.cartan
    array([[ 2, -1],
           [-2,  2]])
    """

    def __init__(self, dynkin, ambient=None):
        """Constructor for RootSystem class

        Parameters
        ----------
        dynkin: DynkinType
        ambient: np.ndarray, optional
            simple roots in ambient coordinates; defaults to
            ambient_simple_roots(dynkin). The dual system passes its own.
        """

        if not isinstance(dynkin, DynkinType):
            raise TypeError('Input must be of type DynkinType')
        self.dynkin = dynkin
        self.rank = dynkin.rank
        self.ambient = (ambient_simple_roots(dynkin) if ambient is None
                        else np.asarray(ambient))

        # Gram matrix of the ambient form, scaled to be integral
        gram = self.ambient @ self.ambient.T
        gram = np.rint(gram * self._gram_scale(gram)).astype(np.int64)
        self.gram = gram
        diag = np.diag(gram)
        self.cartan = (2 * gram) // diag[:, None]

        self.roots = self._close()
        self.positive_roots = tuple(r for r in self.roots if r.is_positive)
        self.simple_roots = tuple(
            Root(np.eye(self.rank, dtype=np.int64)[i]) for i in range(self.rank))
        self._root_set = frozenset(self.roots)

        raw = {r: int(r.as_array() @ gram @ r.as_array()) for r in self.roots}
        shortest = min(raw.values())
        factor = 2 if len(set(raw.values())) == 1 else 1
        self._lengths = {r: factor * v // shortest for r, v in raw.items()}
        self._raw_lengths = raw
        self._coroots = {r: self._coroot(r) for r in self.roots}

        # columns are positive roots, used for vectorised inversion counts
        self.positive_matrix = np.array(
            [r.coeffs for r in self.positive_roots], dtype=np.int64).T

        logger.debug("built root system %s with %d roots",
                     dynkin, len(self.roots))

    @staticmethod
    def _gram_scale(gram):
        # The dual system may carry rational entries; clear denominators.
        for scale in (1, 2, 3, 4, 6, 12):
            if np.allclose(gram * scale, np.rint(gram * scale)):
                return scale
        raise RootSystemError("Ambient Gram matrix is not rational")

    def _close(self):
        """Close the simple roots under simple reflections until stable."""
        seeds = [tuple(int(v) for v in row)
                 for row in np.eye(self.rank, dtype=np.int64)]
        found = set(seeds)
        frontier = list(seeds)
        while frontier:
            new = []
            for coeffs in frontier:
                vec = np.asarray(coeffs, dtype=np.int64)
                for i in range(self.rank):
                    image = vec.copy()
                    image[i] -= int(self.cartan[i] @ vec)
                    key = tuple(int(v) for v in image)
                    if key not in found:
                        found.add(key)
                        new.append(key)
            frontier = new
        return tuple(Root(c) for c in sorted(found))

    def _coroot(self, alpha):
        # alpha^vee = sum_i a_i (beta_i, beta_i) / (alpha, alpha) beta_i^vee
        raw = int(alpha.as_array() @ self.gram @ alpha.as_array())
        diag = np.diag(self.gram)
        coeffs = []
        for a, d in zip(alpha.coeffs, diag):
            value, rest = divmod(a * int(d), raw)
            if rest:
                raise RootSystemError(f"Coroot of {alpha} is not integral")
            coeffs.append(value)
        return Coroot(coeffs)

    def check_root(self, alpha):
        """Raise NotARootError unless alpha is a Root of this system."""
        if not isinstance(alpha, Root):
            raise TypeError('Input must be of type Root')
        if alpha not in self._root_set:
            raise NotARootError(f"{alpha} is not a root of {self.dynkin}")
        return alpha

    def check_positive(self, alpha):
        """Return alpha if it is a positive root, else raise NotARootError."""
        self.check_root(alpha)
        if not alpha.is_positive:
            raise NotARootError(f"{alpha} is not a positive root")
        return alpha

    def check_parabolic(self, parabolic):
        """Return parabolic if its rank matches, else raise ParabolicError."""
        if not isinstance(parabolic, ParabolicSubset):
            raise TypeError('Input must be of type ParabolicSubset')
        if parabolic.rank != self.rank:
            raise ParabolicError(
                f"Parabolic subset of rank {parabolic.rank} used with {self.dynkin}")
        return parabolic

    def is_root(self, alpha):
        return isinstance(alpha, Root) and alpha in self._root_set

    def simple_root(self, index):
        """Simple root beta_index (1-based)."""
        if not 1 <= index <= self.rank:
            raise IndexError(f"Simple index {index} out of range 1..{self.rank}")
        return self.simple_roots[index - 1]

    def coroot(self, alpha):
        """Coroot alpha^vee = 2 alpha / (alpha, alpha) over the simple coroots.

        Examples
        --------
        >>> rs = RootSystem(DynkinType("B", 2))
        >>> rs.coroot(Root((1, 1)))
        Coroot(2,1)
        >>> rs.coroot(Root((1, 2)))
        Coroot(1,1)
        """

        self.check_root(alpha)
        return self._coroots[alpha]

    def squared_length(self, alpha):
        """Squared length, normalised to {1, 2} (B, C, F), {1, 3} (G) or 2."""
        self.check_root(alpha)
        return self._lengths[alpha]

    def is_long(self, alpha):
        return self.squared_length(alpha) == max(self._lengths.values())

    def is_short(self, alpha):
        return not self.is_simply_laced and not self.is_long(alpha)

    @property
    def is_simply_laced(self):
        return len(set(self._lengths.values())) == 1

    @property
    def long_roots(self):
        return tuple(r for r in self.positive_roots if self.is_long(r))

    @property
    def short_roots(self):
        return tuple(r for r in self.positive_roots if self.is_short(r))

    def pairing(self, x, alpha):
        """<x, alpha^vee> = 2 (x, alpha) / (alpha, alpha) for a root alpha."""
        self.check_root(alpha)
        vec = x.as_array() if isinstance(x, _CoefficientVector) else np.asarray(x)
        num = 2 * int(vec @ self.gram @ alpha.as_array())
        return num // self._raw_lengths[alpha]

    def reflect(self, alpha, x):
        """s_alpha(x) = x - <x, alpha^vee> alpha."""
        return x - alpha * self.pairing(x, alpha)

    def highest_root(self):
        """The unique positive root theta with gamma <= theta for all gamma."""
        return max(self.positive_roots, key=lambda r: r.height)

    def root_string(self, alpha, beta):
        """The unbroken beta-string alpha - p beta, ..., alpha + q beta.

        Returns
        -------
        tuple of Root
            ordered by increasing multiple of beta
        """

        self.check_root(alpha)
        self.check_root(beta)
        if beta == alpha or beta == -alpha:
            raise NotARootError("Root strings need beta != +-alpha")
        lower = alpha
        while self.is_root(lower - beta):
            lower = lower - beta
        string = [lower]
        while self.is_root(string[-1] + beta):
            string.append(string[-1] + beta)
        return tuple(string)

    def root_string_reach(self, alpha, beta):
        """Maximal k >= 0 with alpha + k beta in R, and that endpoint.

        Examples
        --------
        >>> rs = RootSystem(DynkinType("B", 2))
        >>> rs.root_string_reach(Root((1, 0)), Root((0, 1)))
        (2, Root(1,2))
        """

        string = self.root_string(alpha, beta)
        return len(string) - 1 - string.index(alpha), string[-1]

    def delta_set(self, alpha):
        """Delta(alpha): indices of simple roots beta with alpha + beta in R.

        Examples
        --------
        >>> rs = RootSystem(DynkinType("A", 2))
        >>> sorted(rs.delta_set(Root((1, 0))))
        [2]
        >>> rs.delta_set(Root((1, 1)))
        frozenset()
        """

        self.check_positive(alpha)
        return frozenset(i for i, beta in enumerate(self.simple_roots, start=1)
                         if self.is_root(alpha + beta))

    def parabolic_roots(self, parabolic):
        """R^+_P: positive roots in the span of Delta_P."""
        self.check_parabolic(parabolic)
        return tuple(r for r in self.positive_roots if parabolic.contains_root(r))

    def positive_roots_outside(self, parabolic):
        """R^+ minus R^+_P, lex-sorted."""
        self.check_parabolic(parabolic)
        return tuple(r for r in self.positive_roots
                     if not parabolic.contains_root(r))

    def to_ambient(self, alpha):
        """Ambient coordinates of a root (e_i coordinates for classical types)."""
        self.check_root(alpha)
        return tuple(int(v) for v in alpha.as_array() @ self.ambient)

    def dual(self):
        """Root system of the coroots, with simple roots beta_i^vee."""
        ambient = self.ambient.astype(float)
        norms = np.einsum("ij,ij->i", ambient, ambient)
        return RootSystem(self.dynkin.dual(), ambient * (2 / norms)[:, None])

    def __eq__(self, other):
        if not isinstance(other, RootSystem):
            return NotImplemented
        return (self.dynkin == other.dynkin
                and np.array_equal(self.cartan, other.cartan))

    def __hash__(self):
        return hash((self.dynkin, self.cartan.tobytes()))

    def __repr__(self):
        return f"RootSystem({self.dynkin})"

    def __str__(self):
        return (f"Root system of type {self.dynkin} with "
                f"{len(self.roots)} roots.")


@functools.lru_cache(maxsize=None)
def build(dynkin):
    """Cached RootSystem for a Dynkin type (instances are immutable).

    Examples
    --------
    >>> len(build(DynkinType("D", 4)).roots)
    24
    """

    return RootSystem(dynkin)
