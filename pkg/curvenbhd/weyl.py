#!/usr/bin/env python3
# File       : weyl.py
# Description: weyl: Weyl group elements, Bruhat order and the Hecke product
# Copyright 2022 The curvenbhd developers
"""Weyl group elements in canonical matrix form.

An element w is stored as the integer matrix of its action on the
simple-root basis (column j is w(beta_j)), so equality of elements is
equality of matrices. Reduced words are derived from the matrix by peeling
right descents, smallest index first.

The Hecke (Demazure) product absorbs descents instead of cancelling them:

    u . s_i = u s_i   if l(u s_i) > l(u)
    u . s_i = u       if l(u s_i) < l(u)

and u . v folds this step over a reduced word of v, left to right.
"""

import collections
import functools
import logging

import numpy as np

from curvenbhd.rootsys import LiteralError, Root, RootSystem, parse_int_list

logger = logging.getLogger(__name__)


class Word:
    """Finite sequence of 1-based simple indices, e.g. the reduced word 1 2 1

    Examples
    --------
    >>> Word.parse("1 2 1")
    Word(1 2 1)
    >>> str(Word(()))
    ''
    """

    def __init__(self, letters):
        self.letters = tuple(int(i) for i in letters)

    @classmethod
    def parse(cls, literal, flag="word"):
        """Word from whitespace separated 1-based letters such as "1 2 1"

        Parameters
        ----------
        literal: str
        flag: str
            name used in LiteralError messages

        Returns
        -------
        Word
        """

        return cls(parse_int_list(literal, sep=None, flag=flag))

    def check(self, rank, flag="word"):
        """Raise LiteralError if a letter is not a simple index of rank."""
        for pos, letter in enumerate(self.letters, start=1):
            if not 1 <= letter <= rank:
                raise LiteralError(
                    f"{flag}: entry {pos} ({letter}) is outside 1..{rank}")
        return self

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        if isinstance(other, (list, tuple)):
            return self.letters == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return " ".join(str(i) for i in self.letters)

    def __repr__(self):
        return f"Word({self})"


class WeylElement:
    """Weyl group element acting on the simple-root basis

    Methods
    -------
    length()
        Number of positive roots sent to negative roots.
    inversions()
        The positive roots sent to negative roots.
    right_descents(), left_descents()
        Simple indices i with l(w s_i) < l(w), resp. l(s_i w) < l(w).
    reduced_word()
        Reduced word, peeling the smallest right descent first.
    hecke_step(i), hecke(v)
        Hecke product with s_i, resp. with another element.
    min_coset_rep(parabolic)
        Shortest element of w W_P.
    in_parabolic(parabolic)
        True iff w lies in W_P.
    bruhat_leq(other)
        Bruhat order.
    __mul__(other)
        Group product (u * v)(x) = u(v(x)).
    """

    def __init__(self, rs, matrix):
        """Constructor for WeylElement class

        Parameters
        ----------
        rs: RootSystem
        matrix: array-like of int, shape (rank, rank)
            column j is the image of beta_j in the simple-root basis
        """

        if not isinstance(rs, RootSystem):
            raise TypeError('Input must be of type RootSystem')
        matrix = np.array(matrix, dtype=np.int64)
        if matrix.shape != (rs.rank, rs.rank):
            raise ValueError(
                f"Action matrix must have shape {(rs.rank, rs.rank)}")
        matrix.setflags(write=False)
        self.rs = rs
        self.matrix = matrix
        self._key = matrix.tobytes()
        self._length = None
        self._word = None

    @classmethod
    def identity(cls, rs):
        return cls(rs, np.eye(rs.rank, dtype=np.int64))

    @classmethod
    def simple_reflection(cls, rs, index):
        """The simple reflection s_index of rs (1-based)."""
        if not 1 <= index <= rs.rank:
            raise IndexError(f"Simple index {index} out of range 1..{rs.rank}")
        return cls(rs, _simple_matrix(rs, index))

    @classmethod
    def from_word(cls, rs, word):
        """Product s_{i_1} s_{i_2} ... s_{i_k} of a word (any iterable)."""
        letters = word.letters if isinstance(word, Word) else tuple(word)
        Word(letters).check(rs.rank)
        matrix = np.eye(rs.rank, dtype=np.int64)
        for i in letters:
            matrix = matrix @ _simple_matrix(rs, i)
        return cls(rs, matrix)

    def _check_same(self, other):
        if not isinstance(other, WeylElement):
            raise TypeError('Input must be of type WeylElement')
        if other.rs != self.rs:
            raise ValueError('Weyl elements belong to different root systems')

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.rs == other.rs and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        """Group product; the composite acts by other first, then self."""
        self._check_same(other)
        return WeylElement(self.rs, self.matrix @ other.matrix)

    def times_simple(self, index):
        """Group product w s_index."""
        return WeylElement(self.rs, self.matrix @ _simple_matrix(self.rs, index))

    def apply(self, alpha):
        """Image w(alpha) of a root."""
        return Root(self.matrix @ alpha.as_array())

    def is_identity(self):
        return bool(np.array_equal(self.matrix, np.eye(self.rs.rank, dtype=np.int64)))

    def _negative_columns(self, images):
        # a root image is either all >= 0 or all <= 0
        return images.sum(axis=0) < 0

    def length(self):
        """Inversion count, equal to the minimal word length.

        Examples
        --------
        >>> from curvenbhd.rootsys import build, DynkinType
        >>> rs = build(DynkinType("A", 2))
        >>> WeylElement.from_word(rs, [1, 2]).length()
        2
        """

        if self._length is None:
            images = self.matrix @ self.rs.positive_matrix
            self._length = int(self._negative_columns(images).sum())
        return self._length

    def inversions(self):
        """Positive roots alpha with w(alpha) negative, in lex order."""
        images = self.matrix @ self.rs.positive_matrix
        flags = self._negative_columns(images)
        return tuple(r for r, flag in zip(self.rs.positive_roots, flags) if flag)

    def right_descents(self):
        """Indices i with l(w s_i) < l(w)."""
        return tuple(i + 1 for i, flag in
                     enumerate(self._negative_columns(self.matrix)) if flag)

    def has_right_descent(self, index):
        return int(self.matrix[:, index - 1].sum()) < 0

    def left_descents(self):
        """Indices i with l(s_i w) < l(w)."""
        return self.inverse().right_descents()

    def reduced_word(self):
        """Reduced word, smallest right descent peeled first.

        Examples
        --------
        >>> from curvenbhd.rootsys import build, DynkinType
        >>> rs = build(DynkinType("A", 2))
        >>> WeylElement.from_word(rs, [2, 1, 2]).reduced_word()
        Word(1 2 1)
        """

        if self._word is not None:
            return self._word
        letters = []
        w = self
        while True:
            descents = w.right_descents()
            if not descents:
                break
            letters.append(descents[0])
            w = w.times_simple(descents[0])
        self._word = Word(reversed(letters))
        return self._word

    def inverse(self):
        return WeylElement.from_word(self.rs, reversed(self.reduced_word().letters))

    def hecke_step(self, index):
        """Hecke product with the simple reflection s_index."""
        if self.has_right_descent(index):
            return self
        return self.times_simple(index)

    def hecke(self, other):
        """Hecke product self . other over the reduced word of other."""
        self._check_same(other)
        result = self
        for i in other.reduced_word():
            result = result.hecke_step(i)
        return result

    def hecke_word(self, word):
        """Fold hecke_step over an arbitrary word, left to right."""
        result = self
        for i in word:
            result = result.hecke_step(i)
        return result

    def min_coset_rep(self, parabolic):
        """Shortest element of the coset w W_P.

        Strips right descents lying in Delta_P until none remain.
        """

        self.rs.check_parabolic(parabolic)
        w = self
        while True:
            strip = [i for i in w.right_descents() if i in parabolic]
            if not strip:
                return w
            w = w.times_simple(strip[0])

    def in_parabolic(self, parabolic):
        """True iff every inversion of w lies in R^+_P."""
        self.rs.check_parabolic(parabolic)
        return all(parabolic.contains_root(r) for r in self.inversions())

    def bruhat_leq(self, other):
        """Bruhat order self <= other.

        Walks a reduced word of other from the right: with s a right
        descent of w, u <= w iff us <= ws when s is a descent of u, and
        iff u <= ws otherwise.
        """

        self._check_same(other)
        u, w = self, other
        while True:
            if u.length() > w.length():
                return False
            descents = w.right_descents()
            if not descents:
                return u.is_identity()
            i = descents[0]
            if u.has_right_descent(i):
                u = u.times_simple(i)
            w = w.times_simple(i)

    def __repr__(self):
        return f"WeylElement({self.rs.dynkin}, [{self.reduced_word()}])"

    def __str__(self):
        word = str(self.reduced_word()) or "identity"
        return f"{word} (length {self.length()})"


def _simple_matrix(rs, index):
    matrix = np.eye(rs.rank, dtype=np.int64)
    matrix[index - 1] -= rs.cartan[index - 1]
    return matrix


def identity(rs):
    """Identity element of the Weyl group of rs."""
    return WeylElement.identity(rs)


@functools.lru_cache(maxsize=None)
def reflection(rs, alpha):
    """Reflection s_alpha, x -> x - <x, alpha^vee> alpha, as a WeylElement.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("A", 2))
    >>> reflection(rs, Root((1, 1))).length()
    3
    """

    rs.check_root(alpha)
    coroot = rs.coroot(alpha).as_array()
    # column j is beta_j - <beta_j, alpha^vee> alpha
    matrix = np.eye(rs.rank, dtype=np.int64) - np.outer(alpha.as_array(),
                                                        coroot @ rs.cartan)
    return WeylElement(rs, matrix)


def length(w):
    """Number of positive roots sent to negative roots by w."""
    return w.length()


def reduced_word(w):
    """Reduced word of w, smallest right descent peeled first."""
    return w.reduced_word()


def hecke_step(u, index):
    """u . s_index: u s_index if that is longer than u, otherwise u."""
    return u.hecke_step(index)


def hecke_product(u, v):
    """Hecke product u . v = u . s_{i_1} . ... . s_{i_k} for v = s_{i_1}...s_{i_k}.

    Examples
    --------
    >>> from curvenbhd.rootsys import build, DynkinType
    >>> rs = build(DynkinType("A", 2))
    >>> s1 = WeylElement.simple_reflection(rs, 1)
    >>> hecke_product(s1, s1) == s1
    True
    """

    return u.hecke(v)


def min_coset_rep(w, parabolic):
    """Minimal length element of the coset w W_P

    Parameters
    ----------
    w: WeylElement
    parabolic: ParabolicSubset

    Returns
    -------
    WeylElement
        the representative of w W_P lying in W^P
    """

    return w.min_coset_rep(parabolic)


def bruhat_leq(u, w):
    """Bruhat order u <= w

    Parameters
    ----------
    u, w: WeylElement
        elements of the same Weyl group

    Returns
    -------
    bool
    """

    return u.bruhat_leq(w)


def in_WP(w, parabolic):
    """True when w lies in the parabolic subgroup W_P."""
    return w.in_parabolic(parabolic)


def longest_element(rs):
    """Longest element w_0: multiply by non-descents until none are left."""
    w = WeylElement.identity(rs)
    while True:
        ascents = [i for i in range(1, rs.rank + 1) if not w.has_right_descent(i)]
        if not ascents:
            return w
        w = w.times_simple(ascents[0])


def longest_coset_rep(rs, parabolic):
    """Longest element of W^P, the point class of the whole space."""
    return longest_element(rs).min_coset_rep(parabolic)


def enumerate_group(rs):
    """Every element of W by breadth-first search over simple reflections.

    Only used by rank-bounded verification oracles.
    """

    start = WeylElement.identity(rs)
    seen = {start}
    order = [start]
    queue = collections.deque([start])
    while queue:
        w = queue.popleft()
        for i in range(1, rs.rank + 1):
            v = w.times_simple(i)
            if v not in seen:
                seen.add(v)
                order.append(v)
                queue.append(v)
    logger.debug("enumerated %d elements of W(%s)", len(order), rs.dynkin)
    return order


def reduced_words(w):
    """Every reduced word of w (exponential; oracles only)."""
    if w.is_identity():
        return [Word(())]
    words = []
    for i in w.right_descents():
        for prefix in reduced_words(w.times_simple(i)):
            words.append(Word(prefix.letters + (i,)))
    return words
