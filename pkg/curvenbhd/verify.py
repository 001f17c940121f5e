#!/usr/bin/env python3
# File       : verify.py
# Description: verify: exhaustive and sampled sweeps over small root systems
# Copyright 2022 The curvenbhd developers
"""Verification sweeps run by `curvenbhd verify`.

Each suite checks one family of statements over every root system up to a
rank bound and returns a SuiteResult with the number of cases checked and
the counterexamples found, printed verbatim by the CLI. Sampled suites
draw from numpy.random.default_rng(seed), one generator per suite, so a
run is reproducible whatever the worker count.
"""

import concurrent.futures
import itertools
import logging
import time

import numpy as np

from curvenbhd.cosmall import (check_lemma4, is_cosmall, is_P_cosmall_criterion,
                               is_P_cosmall_definitional)
from curvenbhd.curves import (curve_neighborhood, curve_neighborhood_via_theorem1,
                              theorem1_outcomes, z_P_d)
from curvenbhd.degrees import (Degree, all_greedy_multisets, degrees_up_to,
                               greedy_decomposition, highest_degree, root_degree)
from curvenbhd.rootsys import DynkinType, ParabolicSubset, Root, build
from curvenbhd.tables import (check_table, emit_table, parse_table_json,
                              render_table_json)
from curvenbhd.weyl import (WeylElement, enumerate_group, longest_coset_rep,
                            longest_element, reduced_words, reflection)

logger = logging.getLogger(__name__)

DEFAULT_SEED = 2022
DEFAULT_SAMPLES = 10000
# groups small enough for cubic sweeps
SMALL_GROUP_ORDER = 24
SAMPLED_TYPES = ("B4", "C4", "D4")
EXHAUSTIVE_TYPES = ("A1", "A2", "B2", "C2", "A3")


class SuiteResult:
    """Outcome of one verification suite

    Attributes
    ----------
    name: str
    cases: int
        number of individual statements checked
    counterexamples: list of str
    notes: list of str
        flagged observations that are not failures
    seconds: float
    """

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.counterexamples = []
        self.notes = []
        self.seconds = 0.0

    def check(self, condition, message):
        """Count one case; record message when condition is false."""
        self.cases += 1
        if not condition:
            self.counterexamples.append(message() if callable(message) else message)

    @property
    def passed(self):
        return not self.counterexamples

    def summary(self):
        """One aligned line: name, status, cases, counterexamples, seconds."""
        status = "ok" if self.passed else "FAILED"
        return (f"{self.name:<11} {status:<6} {self.cases:>8} cases  "
                f"{len(self.counterexamples)} counterexamples  {self.seconds:.2f}s")

    def __repr__(self):
        return f"SuiteResult({self.summary()})"


def classical_types(max_rank, families="ABCD"):
    """Classical Dynkin types with rank <= max_rank, in family then rank order."""
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    return [DynkinType(f, n) for f in families
            for n in range(minimum[f], max_rank + 1)]


def exceptional_types(max_rank):
    """F4 and G2, as far as max_rank allows."""
    return [DynkinType(f, n) for f, n in (("G", 2), ("F", 4)) if n <= max_rank]


def expected_root_count(dynkin):
    """Closed-form number of roots |R| of dynkin

    Parameters
    ----------
    dynkin: DynkinType

    Returns
    -------
    int
    """

    n = dynkin.rank
    return {"A": (n + 1) * n, "B": 2 * n * n, "C": 2 * n * n,
            "D": 2 * n * (n - 1), "F": 48, "G": 12}[dynkin.family]


def small_groups(max_rank):
    """Types whose Weyl group has at most SMALL_GROUP_ORDER elements."""
    order = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A3": 24}
    return [t for t in classical_types(max_rank) + exceptional_types(max_rank)
            if order.get(str(t), SMALL_GROUP_ORDER + 1) <= SMALL_GROUP_ORDER]


def _word(w):
    return f"[{w.reduced_word()}]"


def suite_counts(max_rank, rng, samples):
    """Root counts, closure under reflections, R = -R, l(w_0) = |R^+|."""
    result = SuiteResult("counts")
    for dynkin in classical_types(max_rank) + exceptional_types(max_rank):
        rs = build(dynkin)
        result.check(len(rs.roots) == expected_root_count(dynkin),
                     f"{dynkin}: {len(rs.roots)} roots, expected "
                     f"{expected_root_count(dynkin)}")
        result.check(all(rs.is_root(-a) for a in rs.roots), f"{dynkin}: R != -R")
        for alpha in rs.roots:
            for beta in rs.simple_roots:
                result.check(rs.is_root(rs.reflect(beta, alpha)),
                             f"{dynkin}: s_{beta.literal()}({alpha.literal()}) not a root")
            result.check(alpha.is_positive or alpha.is_negative,
                         f"{dynkin}: {alpha.literal()} has mixed signs")
        result.check(longest_element(rs).length() == len(rs.positive_roots),
                     f"{dynkin}: l(w0) != |R+|")
    return result


def suite_hecke(max_rank, rng, samples):
    """Hecke product laws: associativity, word independence, Bruhat growth."""
    result = SuiteResult("hecke")
    for dynkin in small_groups(max_rank):
        rs = build(dynkin)
        group = enumerate_group(rs)
        for i in range(1, rs.rank + 1):
            s = WeylElement.simple_reflection(rs, i)
            result.check(s.hecke(s) == s, f"{dynkin}: s_{i} . s_{i} != s_{i}")
        for u, v in itertools.product(group, repeat=2):
            uv = u.hecke(v)
            result.check(u.bruhat_leq(uv) and v.bruhat_leq(uv),
                         lambda: f"{dynkin}: {_word(u)} . {_word(v)} not above both factors")
            if (u * v).length() == u.length() + v.length():
                result.check(uv == u * v,
                             lambda: f"{dynkin}: Hecke and group products differ on "
                                     f"{_word(u)}, {_word(v)}")
            for word in reduced_words(v):
                result.check(u.hecke_word(word) == uv,
                             lambda: f"{dynkin}: {_word(u)} . [{word}] depends on the word")
        for u, v, x in itertools.product(group, repeat=3):
            result.check(u.hecke(v).hecke(x) == u.hecke(v.hecke(x)),
                         lambda: f"{dynkin}: Hecke product not associative on "
                                 f"{_word(u)}, {_word(v)}, {_word(x)}")
    return result


def suite_lemma1(max_rank, rng, samples):
    """alpha -> s_alpha W_P is injective on R^+ minus R^+_P."""
    result = SuiteResult("lemma1")
    for dynkin in classical_types(min(max_rank, 4)):
        rs = build(dynkin)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            seen = {}
            for alpha in rs.positive_roots_outside(parabolic):
                rep = reflection(rs, alpha).min_coset_rep(parabolic)
                result.check(rep not in seen,
                             lambda: f"{dynkin}, P={{{parabolic.literal()}}}: "
                                     f"{alpha.literal()} and {seen[rep].literal()} "
                                     f"share the coset {_word(rep)}")
                seen.setdefault(rep, alpha)
    return result


def suite_lemma2(max_rank, rng, samples):
    """Simply laced: the greedy decomposition of alpha^vee has length 1."""
    result = SuiteResult("lemma2")
    for dynkin in classical_types(max_rank, families="AD"):
        rs = build(dynkin)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            for alpha in rs.positive_roots_outside(parabolic):
                greedy = greedy_decomposition(rs, root_degree(rs, alpha, parabolic),
                                              parabolic)
                result.check(len(greedy) == 1,
                             lambda: f"{dynkin}, P={{{parabolic.literal()}}}: greedy "
                                     f"decomposition of {alpha.literal()}^vee is {greedy}")
    return result


def suite_lemma3(max_rank, rng, samples):
    """The far end of a root string is at least as long as its start."""
    result = SuiteResult("lemma3")
    for dynkin in classical_types(max_rank) + exceptional_types(max_rank):
        rs = build(dynkin)
        for alpha, beta in itertools.product(rs.roots, repeat=2):
            if beta == alpha or beta == -alpha:
                continue
            k, end = rs.root_string_reach(alpha, beta)
            result.check(rs.squared_length(end) >= rs.squared_length(alpha),
                         lambda: f"{dynkin}: {alpha.literal()} + {k}*{beta.literal()} "
                                 f"is shorter than {alpha.literal()}")
    return result


def suite_lemma4(max_rank, rng, samples):
    """Short cosmall alpha: no beta in Delta(alpha) satisfies beta <= alpha."""
    result = SuiteResult("lemma4")
    for dynkin in classical_types(max_rank, families="BC") + exceptional_types(max_rank):
        verdict = check_lemma4(build(dynkin))
        result.check(bool(verdict), lambda: f"{dynkin}: counterexample {verdict.witness}")
    return result


def suite_greedy(max_rank, rng, samples):
    """Greedy decompositions are unique up to reordering."""
    result = SuiteResult("greedy")
    for dynkin in classical_types(min(max_rank, 4)):
        rs = build(dynkin)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            bound = highest_degree(rs, parabolic)
            if rs.rank <= 3:
                bound = bound * 2
            for d in degrees_up_to(rs, bound, parabolic):
                multisets = all_greedy_multisets(rs, d, parabolic)
                result.check(len(multisets) == 1,
                             lambda: f"{dynkin}: {d!r} has {len(multisets)} greedy multisets")
    return result


def _theorem1_case(result, rs, w, d, parabolic, choose=None):
    direct = curve_neighborhood(rs, w, d, parabolic)
    if choose is None:
        recursive = curve_neighborhood_via_theorem1(rs, w, d, parabolic)
    else:
        recursive = curve_neighborhood_via_theorem1(rs, w, d, parabolic, choose)
    result.check(direct == recursive,
                 lambda: f"{rs.dynkin}: w={_word(w)}, {d!r}: direct {direct}, "
                         f"recursion {recursive}")
    result.check(w.min_coset_rep(parabolic).bruhat_leq(direct.rep),
                 lambda: f"{rs.dynkin}: X(w) not inside its neighborhood for "
                         f"w={_word(w)}, {d!r}")
    return direct


def suite_theorem1(max_rank, rng, samples):
    """Direct formula equals the maximal-root recursion under every choice."""
    result = SuiteResult("theorem1")
    for name in EXHAUSTIVE_TYPES:
        dynkin = DynkinType.parse(name)
        if dynkin.rank > max_rank:
            continue
        rs = build(dynkin)
        group = enumerate_group(rs)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            bound = highest_degree(rs, parabolic) * 2
            degrees = list(degrees_up_to(rs, bound, parabolic))
            result.check(z_P_d(rs, bound, parabolic) == longest_coset_rep(rs, parabolic),
                         f"{dynkin}, P={{{parabolic.literal()}}}: z at twice theta is "
                         f"not the longest coset representative")
            for w in group:
                nbhd = {}
                for d in degrees:
                    nbhd[d] = _theorem1_case(result, rs, w, d, parabolic)
                    outcomes = theorem1_outcomes(rs, w, d, parabolic)
                    result.check(outcomes == {nbhd[d]},
                                 lambda: f"{dynkin}: choices disagree for w={_word(w)}, "
                                         f"{d!r}: {outcomes}")
                for d, e in itertools.combinations(degrees, 2):
                    if d <= e:
                        result.check(nbhd[d].rep.bruhat_leq(nbhd[e].rep),
                                     lambda: f"{dynkin}: not monotone for w={_word(w)}, "
                                             f"{d!r} <= {e!r}")

    if max_rank >= 4 and samples > 0:
        for name in SAMPLED_TYPES:
            rs = build(DynkinType.parse(name))
            count = samples // len(SAMPLED_TYPES)
            n_pos = len(rs.positive_roots)
            for _ in range(count):
                word = rng.integers(1, rs.rank + 1, size=int(rng.integers(0, n_pos + 1)))
                w = WeylElement.from_word(rs, word.tolist())
                members = [i for i in range(1, rs.rank + 1) if rng.random() < 0.5]
                parabolic = ParabolicSubset(members, rs.rank)
                bound = highest_degree(rs, parabolic) * 2
                d = Degree(rs, parabolic,
                           [int(rng.integers(0, c + 1)) for c in bound.coeffs])
                _theorem1_case(result, rs, w, d, parabolic,
                               choose=lambda maxima: maxima[int(rng.integers(len(maxima)))])
    return result


def suite_theorem2(max_rank, rng, samples):
    """P-cosmall iff z^P_d W_P = s_alpha W_P and the greedy length is 1."""
    result = SuiteResult("theorem2")
    for dynkin in classical_types(max_rank):
        rs = build(dynkin)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            for alpha in rs.positive_roots_outside(parabolic):
                d = root_degree(rs, alpha, parabolic)
                p_cosmall = bool(is_P_cosmall_definitional(rs, alpha, parabolic))
                same_coset = (z_P_d(rs, d, parabolic)
                              == reflection(rs, alpha).min_coset_rep(parabolic))
                length_one = len(greedy_decomposition(rs, d, parabolic)) == 1
                result.check(p_cosmall == (same_coset and length_one),
                             lambda: f"{dynkin}, P={{{parabolic.literal()}}}, "
                                     f"{alpha.literal()}: P-cosmall={p_cosmall}, "
                                     f"same coset={same_coset}, greedy length 1={length_one}")
    return result


def suite_conjecture(max_rank, rng, samples):
    """Simply laced: P-cosmall iff Gamma_{alpha^vee}(1.P) = X(s_alpha)."""
    result = SuiteResult("conjecture")
    for dynkin in classical_types(max_rank, families="AD"):
        rs = build(dynkin)
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            for alpha in rs.positive_roots_outside(parabolic):
                d = root_degree(rs, alpha, parabolic)
                p_cosmall = bool(is_P_cosmall_definitional(rs, alpha, parabolic))
                same_coset = (z_P_d(rs, d, parabolic)
                              == reflection(rs, alpha).min_coset_rep(parabolic))
                result.check(p_cosmall == same_coset,
                             lambda: f"{dynkin}, P={{{parabolic.literal()}}}, "
                                     f"{alpha.literal()}: P-cosmall={p_cosmall}, "
                                     f"same coset={same_coset}")
    return result


def suite_theorem3(max_rank, rng, samples):
    """Cosmall alpha: P-cosmall iff Delta(alpha) and Delta_P are disjoint."""
    result = SuiteResult("theorem3")
    for dynkin in classical_types(max_rank):
        rs = build(dynkin)
        for alpha in rs.positive_roots:
            if rs.is_long(alpha) or alpha in rs.simple_roots:
                result.check(bool(is_cosmall(rs, alpha)),
                             f"{dynkin}: long or simple root {alpha.literal()} not cosmall")
        for parabolic in ParabolicSubset.all_subsets(rs.rank):
            for alpha in rs.positive_roots_outside(parabolic):
                cosmall = is_cosmall(rs, alpha)
                definitional = is_P_cosmall_definitional(rs, alpha, parabolic)
                result.check(not definitional or cosmall,
                             f"{dynkin}: {alpha.literal()} P-cosmall but not cosmall")
                for verdict in (cosmall, definitional):
                    if not verdict:
                        gamma = verdict.witness
                        result.check(
                            gamma > alpha and root_degree(rs, gamma, parabolic)
                            <= root_degree(rs, alpha, parabolic),
                            lambda: f"{dynkin}: bad witness {gamma.literal()} "
                                    f"for {alpha.literal()}")
                if not cosmall:
                    continue
                criterion = is_P_cosmall_criterion(rs, alpha, parabolic)
                result.check(bool(definitional) == criterion,
                             lambda: f"{dynkin}, P={{{parabolic.literal()}}}, "
                                     f"{alpha.literal()}: definition says {bool(definitional)}, "
                                     f"criterion says {criterion}")
    return result


def suite_tables(max_rank, rng, samples):
    """Emitted tables survive a JSON round trip and match first principles."""
    result = SuiteResult("tables")
    for dynkin in classical_types(max_rank):
        table = emit_table(dynkin)
        parsed = parse_table_json(render_table_json(table))
        result.check(parsed == table, f"{dynkin}: JSON round trip changed the table")
        for problem in check_table(parsed):
            result.check(False, f"{dynkin}: {problem}")
        result.cases += len(table["cosmall"])
        for row in table["discrepancies"]:
            note = (f"{dynkin}: published table differs at {row['coords_e']} "
                    f"(computed {row['computed']}, published {row['published']})")
            logger.warning(note)
            result.notes.append(note)
    return result


def suite_duality(max_rank, rng, samples):
    """B2 and C2 tables coincide after swapping the two simple roots."""
    result = SuiteResult("duality")
    if max_rank < 2:
        return result
    swap = {1: 2, 2: 1}

    def relabelled(table, flip):
        rows = set()
        for row in table["cosmall"]:
            coeffs = Root.parse(row["root"]).coeffs
            delta = row["delta_set"]
            if flip:
                coeffs = coeffs[::-1]
                delta = [swap[i] for i in delta]
            rows.add((coeffs, tuple(sorted(delta))))
        return rows

    b2 = emit_table(DynkinType("B", 2))
    c2 = emit_table(DynkinType("C", 2))
    result.check(relabelled(b2, True) == relabelled(c2, False),
                 "B2 and C2 cosmall tables differ after relabelling")
    return result


SUITES = {
    "counts": suite_counts,
    "hecke": suite_hecke,
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "lemma4": suite_lemma4,
    "greedy": suite_greedy,
    "theorem1": suite_theorem1,
    "theorem2": suite_theorem2,
    "theorem3": suite_theorem3,
    "conjecture": suite_conjecture,
    "tables": suite_tables,
    "duality": suite_duality,
}


def _run_one(name, max_rank, seed, samples):
    start = time.perf_counter()
    rng = np.random.default_rng([seed, list(SUITES).index(name)])
    result = SUITES[name](max_rank, rng, samples)
    result.seconds = time.perf_counter() - start
    logger.info("%s", result.summary())
    return result


def run_suites(names=None, max_rank=3, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES,
               workers=1):
    """Run the named suites (all by default) and return results in suite order.

    Parameters
    ----------
    names: iterable of str, optional
    max_rank: int
        largest rank swept; must be at least 2
    seed: int
        seed of the sampled sweeps
    samples: int
        number of random recursion cases at rank 4
    workers: int
        thread count; each suite runs in one worker

    Returns
    -------
    list of SuiteResult
    """

    names = list(SUITES) if not names else list(dict.fromkeys(names))
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}; choose from {sorted(SUITES)}")
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    if workers <= 1:
        return [_run_one(n, max_rank, seed, samples) for n in names]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_one, n, max_rank, seed, samples) for n in names]
        return [f.result() for f in futures]
