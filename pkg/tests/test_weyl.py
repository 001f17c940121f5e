import itertools

import pytest
from hypothesis import given, settings, strategies as st

from curvenbhd.rootsys import (DynkinType, LiteralError, ParabolicSubset, Root,
                               build)
from curvenbhd.weyl import (WeylElement, Word, bruhat_leq, enumerate_group,
                            hecke_product, identity, in_WP, length,
                            longest_coset_rep, longest_element, min_coset_rep,
                            reduced_word, reduced_words, reflection)

A2 = build(DynkinType("A", 2))
B2 = build(DynkinType("B", 2))
A3 = build(DynkinType("A", 3))


def s(rs, *letters):
    return WeylElement.from_word(rs, letters)


class Test_Word:
    """Test class for words in the simple reflections"""

    def test_parse(self):
        """Test parsing and rendering of whitespace separated words"""
        assert Word.parse("1 2 1") == Word((1, 2, 1))
        assert Word.parse("1 2 1") == [1, 2, 1]
        assert Word.parse("") == Word(())
        assert str(Word(())) == ""
        assert repr(Word((2, 1))) == "Word(2 1)"
        assert len(Word.parse(" 3  1 ")) == 2

    def test_invalid(self):
        """Test non-integer and out-of-range letters"""
        with pytest.raises(LiteralError, match="entry 2"):
            Word.parse("1 x")
        with pytest.raises(LiteralError):
            Word((3,)).check(2)
        with pytest.raises(LiteralError):
            s(A2, 1, 0)


class Test_WeylElement:
    """Test class for Weyl group elements"""

    def test_identity(self):
        """Test the identity element"""
        e = WeylElement.identity(A2)
        assert e.is_identity()
        assert e.length() == 0
        assert e.reduced_word() == []
        assert identity(A2) == e
        assert s(A2, 1, 1) == e

    def test_length(self):
        """Test lengths of words and of longest elements"""
        assert s(A2, 1, 2).length() == 2
        assert length(s(A2, 1, 2, 1, 2)) == 2
        expected = {"A3": 6, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24}
        for name, count in expected.items():
            rs = build(DynkinType.parse(name))
            assert longest_element(rs).length() == count

    def test_reduced_word(self):
        """Test reduced words peel the smallest right descent first"""
        assert s(A2, 2, 1, 2).reduced_word() == Word((1, 2, 1))
        assert reduced_word(longest_element(B2)) == [2, 1, 2, 1]
        assert s(B2, 2, 1, 2, 1) == s(B2, 1, 2, 1, 2)
        w = s(B2, 1, 2)
        assert s(B2, *w.reduced_word()) == w
        assert str(w) == "1 2 (length 2)"
        assert str(identity(B2)) == "identity (length 0)"
        assert repr(w) == "WeylElement(B2, [1 2])"

    def test_descents(self):
        """Test right and left descents"""
        w = s(A2, 1, 2)
        assert w.right_descents() == (2,)
        assert w.left_descents() == (1,)
        assert w.has_right_descent(2)
        assert not w.has_right_descent(1)
        assert longest_element(A2).right_descents() == (1, 2)

    def test_inversions(self):
        """Test inversion sets"""
        assert s(A2, 1).inversions() == (Root((1, 0)),)
        assert set(longest_element(B2).inversions()) == set(B2.positive_roots)

    def test_product_and_inverse(self):
        """Test the group product, inverse and action on roots"""
        w = s(A2, 1, 2)
        assert w.inverse() == s(A2, 2, 1)
        assert (w * w.inverse()).is_identity()
        assert s(A2, 1) * s(A2, 2) == w
        assert s(A2, 1).apply(Root((1, 0))) == Root((-1, 0))
        assert s(A2, 1).apply(Root((0, 1))) == Root((1, 1))
        with pytest.raises(TypeError):
            w * 2
        with pytest.raises(ValueError):
            w * s(B2, 1)
        with pytest.raises(IndexError):
            WeylElement.simple_reflection(A2, 3)
        with pytest.raises(ValueError):
            WeylElement(A2, [[1, 0, 0]])

    def test_matrix_is_frozen(self):
        """Test that the action matrix cannot be mutated"""
        w = s(A2, 1)
        with pytest.raises(ValueError):
            w.matrix[0, 0] = 5
        assert hash(w) == hash(s(A2, 1, 2, 2))


class Test_Reflection:
    """Test class for reflections in arbitrary roots"""

    def test_reflection(self):
        """Test s_alpha for simple and non-simple roots"""
        assert reflection(A2, Root((1, 0))) == s(A2, 1)
        assert reflection(A2, Root((1, 1))) == longest_element(A2)
        assert reflection(B2, Root((1, 2))).length() == 3
        assert reflection(B2, Root((1, 1))) == s(B2, 1, 2, 1)
        assert reflection(B2, Root((1, 2))) == s(B2, 2, 1, 2)

    def test_negates_root(self):
        """Test s_alpha(alpha) = -alpha and s_alpha^2 = 1 for every root"""
        for name in ["B3", "C3", "D4", "G2"]:
            rs = build(DynkinType.parse(name))
            for alpha in rs.positive_roots:
                r = reflection(rs, alpha)
                assert r.apply(alpha) == -alpha
                assert (r * r).is_identity()
                assert r.length() % 2 == 1


class Test_Hecke:
    """Test class for the Hecke (Demazure) product"""

    def test_absorbs_descents(self):
        """Test s . s = s and agreement with length-additive products"""
        s1 = WeylElement.simple_reflection(A2, 1)
        assert hecke_product(s1, s1) == s1
        assert s1.hecke_step(1) == s1
        assert hecke_product(s1, s(A2, 2)) == s(A2, 1, 2)
        assert s(B2, 1, 2).hecke(s(B2, 2)) == s(B2, 1, 2)
        assert s(A2, 1, 2).hecke(s(A2, 2, 1)) == longest_element(A2)

    def test_associative(self):
        """Test associativity exhaustively in A2, B2 and A3"""
        for rs in (A2, B2, A3):
            group = enumerate_group(rs)
            for u, v, w in itertools.product(group, repeat=3):
                assert u.hecke(v).hecke(w) == u.hecke(v.hecke(w))

    def test_word_independent(self):
        """Test that every reduced word of v gives the same product"""
        for rs in (B2, A3):
            group = enumerate_group(rs)
            for u, v in itertools.product(group, repeat=2):
                products = {u.hecke_word(word) for word in reduced_words(v)}
                assert products == {u.hecke(v)}

    def test_above_factors(self):
        """Test u <= u . v and v <= u . v in Bruhat order"""
        group = enumerate_group(B2)
        for u, v in itertools.product(group, repeat=2):
            assert u.bruhat_leq(u.hecke(v))
            assert v.bruhat_leq(u.hecke(v))


class Test_Cosets:
    """Test class for parabolic cosets"""

    def test_min_coset_rep(self):
        """Test minimal coset representatives in A2"""
        p = ParabolicSubset([1], 2)
        w0 = longest_element(A2)
        assert min_coset_rep(w0, p) == s(A2, 1, 2)
        assert min_coset_rep(s(A2, 1), p).is_identity()
        assert longest_coset_rep(A2, p).length() == 2

    def test_min_coset_rep_minimal(self):
        """Test idempotence and minimality against coset enumeration"""
        for name in ["A3", "B3"]:
            rs = build(DynkinType.parse(name))
            group = enumerate_group(rs)
            for p in ParabolicSubset.all_subsets(rs.rank):
                parabolic_part = [x for x in group if x.in_parabolic(p)]
                for w in group[::5]:
                    rep = w.min_coset_rep(p)
                    assert rep.min_coset_rep(p) == rep
                    coset = [w * x for x in parabolic_part]
                    assert rep in coset
                    assert rep.length() == min(c.length() for c in coset)

    def test_longest_coset_rep(self):
        """Test l(longest coset rep) = |R^+| - |R^+_P|"""
        for name in ["A3", "B3", "C3", "D4"]:
            rs = build(DynkinType.parse(name))
            for p in ParabolicSubset.all_subsets(rs.rank):
                rep = longest_coset_rep(rs, p)
                assert rep.length() == len(rs.positive_roots_outside(p))

    def test_in_parabolic(self):
        """Test W_P membership"""
        p = ParabolicSubset([1], 2)
        assert in_WP(s(A2, 1), p)
        assert not in_WP(s(A2, 2), p)
        assert in_WP(identity(A2), p)
        # W_P for P = all of Delta is W
        full = ParabolicSubset([1, 2], 2)
        assert all(w.in_parabolic(full) for w in enumerate_group(A2))


class Test_Bruhat:
    """Test class for the Bruhat order"""

    def test_small_cases(self):
        """Test comparable and incomparable pairs in A2"""
        e = identity(A2)
        assert bruhat_leq(e, s(A2, 1))
        assert bruhat_leq(s(A2, 1), s(A2, 1, 2))
        assert bruhat_leq(s(A2, 2), s(A2, 1, 2))
        assert not bruhat_leq(s(A2, 1, 2), s(A2, 1))
        assert not bruhat_leq(s(A2, 1), s(A2, 2))
        assert not bruhat_leq(s(A2, 1, 2), s(A2, 2, 1))

    def test_longest_element_is_top(self):
        """Test that every element lies below w_0"""
        for name in ["A3", "B3", "G2"]:
            rs = build(DynkinType.parse(name))
            w0 = longest_element(rs)
            assert all(w.bruhat_leq(w0) for w in enumerate_group(rs))


class Test_Group:
    """Test class for group enumeration and reduced words"""

    def test_orders(self):
        """Test Weyl group orders"""
        expected = {"A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48, "D4": 192}
        for name, order in expected.items():
            group = enumerate_group(build(DynkinType.parse(name)))
            assert len(group) == order
            assert len(set(group)) == order

    def test_reduced_words(self):
        """Test every reduced word of the longest elements of rank 2"""
        assert set(reduced_words(longest_element(A2))) == {Word((1, 2, 1)),
                                                           Word((2, 1, 2))}
        assert set(reduced_words(longest_element(B2))) == {Word((1, 2, 1, 2)),
                                                           Word((2, 1, 2, 1))}
        assert reduced_words(identity(B2)) == [Word(())]
        # A3 w_0 has 16 reduced words
        assert len(reduced_words(longest_element(build(DynkinType("A", 3))))) == 16


class Test_WeylProperties:
    """Sampled properties of Weyl group elements at rank 4"""

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(["B4", "C4", "D4", "F4"]), st.data())
    def test_random_words(self, name, data):
        """Test reduced words, lengths and Demazure products of random words"""
        rs = build(DynkinType.parse(name))
        word = data.draw(st.lists(st.integers(1, rs.rank), max_size=12))
        w = WeylElement.from_word(rs, word)
        assert w.length() <= len(word)
        assert len(w.reduced_word()) == w.length()
        assert WeylElement.from_word(rs, w.reduced_word()) == w
        demazure = identity(rs).hecke_word(word)
        assert demazure.length() <= len(word)
        assert w.bruhat_leq(demazure)
