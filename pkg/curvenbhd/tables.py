#!/usr/bin/env python3
# File       : tables.py
# Description: tables: Delta(alpha) tables of cosmall roots in classical types
# Copyright 2022 The curvenbhd developers
"""Tables of cosmall roots and their Delta(alpha) for types A, B, C and D.

emit_table computes every row from first principles; published_table_claims
instantiates the published symbolic rows at a concrete rank (an index
outside 1..rank is dropped from a set). table_discrepancies compares the
two, so disagreements are flagged in the output instead of being hidden.

Type A with r simple roots is written in the coordinates e_1, ..., e_l
with l = r + 1; the other types use l = r.
"""

import json
import logging

from curvenbhd.cosmall import cosmall_roots
from curvenbhd.rootsys import DynkinType, DynkinTypeError, Root, build

logger = logging.getLogger(__name__)


def _linear_combination(coeffs, symbol):
    """Render integer coefficients as e.g. "e1-e2" or "b1+2b2"."""
    text = ""
    for k, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        magnitude = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else ("+" if text else "")
        text += f"{sign}{magnitude}{symbol}{k}"
    return text or "0"


def format_e(vector):
    """e_i coordinates, e.g. (1, 0, -1) -> "e1-e3"."""
    return _linear_combination(vector, "e")


def format_simple(root):
    """Simple-root expansion, e.g. Root(1,2) -> "β1+2β2"."""
    return _linear_combination(root.coeffs, "β")


def format_delta(indices):
    """Render a set of simple indices as "{β1, β3}"; "{}" when empty."""
    return "{" + ", ".join(f"β{i}" for i in sorted(indices)) + "}"


def _require_classical(dynkin):
    if not dynkin.is_classical:
        raise DynkinTypeError(f"No table for non-classical type {dynkin}")


def _e(l, *terms):
    vector = [0] * l
    for coeff, index in terms:
        vector[index - 1] += coeff
    return tuple(vector)


def published_table_claims(dynkin):
    """Published rows instantiated at the rank of dynkin.

    Returns
    -------
    dict
        "cosmall": {e-vector: frozenset of claimed Delta(alpha) indices},
        "long" and "short": sets of e-vectors of positive roots
        (empty for simply laced types)

    Examples
    --------
    >>> from curvenbhd.rootsys import DynkinType
    >>> claims = published_table_claims(DynkinType("A", 2))
    >>> sorted(claims["cosmall"][(1, -1, 0)])
    [2]
    """

    _require_classical(dynkin)
    n, l, family = dynkin.rank, dynkin.ambient_rank, dynkin.family

    def clip(*indices):
        return frozenset(i for i in indices if 1 <= i <= n)

    cosmall, long, short = {}, set(), set()
    pairs = [(i, j) for i in range(1, l + 1) for j in range(i + 1, l + 1)]

    if family == "A":
        for i, j in pairs:
            cosmall[_e(l, (1, i), (-1, j))] = clip(i - 1, j)
    elif family == "B":
        for i, j in pairs:
            long.add(_e(l, (1, i), (-1, j)))
            long.add(_e(l, (1, i), (1, j)))
            cosmall[_e(l, (1, i), (-1, j))] = clip(i - 1, j)
            cosmall[_e(l, (1, i), (1, j))] = clip(i - 1, j - 1) - {i}
        short.update(_e(l, (1, i)) for i in range(1, l + 1))
        cosmall[_e(l, (1, l))] = clip(l - 1)
    elif family == "C":
        long.update(_e(l, (2, i)) for i in range(1, l + 1))
        for i, j in pairs:
            short.add(_e(l, (1, i), (-1, j)))
            short.add(_e(l, (1, i), (1, j)))
            cosmall[_e(l, (1, i), (-1, j))] = clip(i - 1, j)
        for i in range(1, l + 1):
            cosmall[_e(l, (2, i))] = clip(i - 1)
    else:
        for i, j in pairs:
            if (i, j) == (l - 1, l):
                cosmall[_e(l, (1, i), (-1, j))] = clip(i - 1)
            else:
                cosmall[_e(l, (1, i), (-1, j))] = clip(i - 1, j)
        for i in range(1, l):
            cosmall[_e(l, (1, i), (1, l))] = clip(i - 1, l - 1)
        for i, j in pairs:
            if j <= l - 1:
                cosmall[_e(l, (1, i), (1, j))] = clip(i - 1, j - 1) - {i}
    return {"cosmall": cosmall, "long": long, "short": short}


def _row(rs, root):
    return {
        "root": root.literal(),
        "coords_e": format_e(rs.to_ambient(root)),
        "coords_simple": format_simple(root),
    }


def table_discrepancies(dynkin):
    """Rows where first principles and the published table disagree.

    Returns
    -------
    list of dict
        one entry per disagreeing root (lex order) with keys root,
        coords_e, computed and published; computed/published are sorted
        index lists, or None when the root is missing on that side
    """

    _require_classical(dynkin)
    rs = build(dynkin)
    claims = published_table_claims(dynkin)
    computed = {rs.to_ambient(a): a for a in cosmall_roots(rs)}
    by_vector = {rs.to_ambient(a): a for a in rs.positive_roots}
    rows = []
    for vector in sorted(set(computed) | set(claims["cosmall"]),
                         key=lambda v: by_vector[v].coeffs if v in by_vector else v):
        ours = sorted(rs.delta_set(computed[vector])) if vector in computed else None
        theirs = claims["cosmall"].get(vector)
        theirs = None if theirs is None else sorted(theirs)
        if ours != theirs:
            root = by_vector.get(vector)
            rows.append({
                "root": None if root is None else root.literal(),
                "coords_e": format_e(vector),
                "computed": ours,
                "published": theirs,
            })
    if not rs.is_simply_laced:
        for kind, ours in (("long", rs.long_roots), ("short", rs.short_roots)):
            ours = {rs.to_ambient(a) for a in ours}
            for vector in sorted(ours ^ claims[kind]):
                rows.append({"root": by_vector[vector].literal()
                             if vector in by_vector else None,
                             "coords_e": format_e(vector),
                             "computed": kind if vector in ours else None,
                             "published": kind if vector in claims[kind] else None})
    for row in rows:
        logger.info("%s: published table disagrees at %s (computed %s, published %s)",
                       dynkin, row["coords_e"], row["computed"], row["published"])
    return rows


def emit_table(dynkin):
    """Rank-instantiated table of simple, long, short and cosmall roots.

    Returns
    -------
    dict
        {dynkin, rank, l, simple, long, short, cosmall, discrepancies};
        cosmall rows carry root, coords_e, coords_simple and delta_set

    Examples
    --------
    >>> from curvenbhd.rootsys import DynkinType
    >>> table = emit_table(DynkinType("B", 2))
    >>> [(row["coords_e"], row["delta_set"]) for row in table["cosmall"]]
    [('e2', [1]), ('e1-e2', [2]), ('e1+e2', [])]
    """

    _require_classical(dynkin)
    rs = build(dynkin)
    laced = rs.is_simply_laced
    cosmall = []
    for alpha in cosmall_roots(rs):
        row = _row(rs, alpha)
        row["delta_set"] = sorted(rs.delta_set(alpha))
        cosmall.append(row)
    return {
        "dynkin": str(dynkin),
        "rank": dynkin.rank,
        "l": dynkin.ambient_rank,
        "simple": [_row(rs, a) for a in rs.simple_roots],
        "long": [] if laced else [_row(rs, a) for a in rs.long_roots],
        "short": [] if laced else [_row(rs, a) for a in rs.short_roots],
        "cosmall": cosmall,
        "discrepancies": table_discrepancies(dynkin),
    }


def render_table_json(table):
    """Serialise a table from emit_table as indented JSON text."""
    return json.dumps(table, indent=2, ensure_ascii=False)


def parse_table_json(text):
    """Inverse of render_table_json."""

    return json.loads(text)


def render_table_text(table):
    """Aligned plain-text rendering of an emitted table."""
    lines = [f"Type {table['dynkin']} (l = {table['l']})"]
    lines.append("Simple   " + ", ".join(r["coords_simple"] for r in table["simple"]))

    def block(title, rows, extra=None):
        if not rows:
            return
        left = [f"{r['coords_e']} = {r['coords_simple']}" for r in rows]
        width = max(len(text) for text in left)
        for k, (text, row) in enumerate(zip(left, rows)):
            head = title if k == 0 else ""
            tail = f"  Δ(α) = {format_delta(row[extra])}" if extra else ""
            lines.append(f"{head:<9}{text:<{width}}{tail}".rstrip())

    block("Long", table["long"])
    block("Short", table["short"])
    block("Cosmall", table["cosmall"], extra="delta_set")
    for row in table["discrepancies"]:
        lines.append(f"! {row['coords_e']}: computed {row['computed']}, "
                     f"published {row['published']}")
    return "\n".join(lines) + "\n"


def check_table(table):
    """Compare a parsed table with first principles.

    Returns
    -------
    list of str
        one message per mismatching row; empty when consistent
    """

    dynkin = DynkinType.parse(table["dynkin"])
    rs = build(dynkin)
    problems = []
    listed = {}
    for row in table["cosmall"]:
        alpha = Root.parse(row["root"])
        listed[alpha] = row
        if not rs.is_root(alpha):
            problems.append(f"{row['root']} is not a root of {dynkin}")
            continue
        if sorted(rs.delta_set(alpha)) != row["delta_set"]:
            problems.append(f"Delta({row['root']}) is {sorted(rs.delta_set(alpha))}, "
                            f"table says {row['delta_set']}")
        if format_e(rs.to_ambient(alpha)) != row["coords_e"]:
            problems.append(f"{row['root']} has e-coordinates "
                            f"{format_e(rs.to_ambient(alpha))}")
    missing = [a for a in cosmall_roots(rs) if a not in listed]
    extra = [a for a in listed if rs.is_root(a) and a not in cosmall_roots(rs)]
    problems.extend(f"cosmall root {a.literal()} missing" for a in missing)
    problems.extend(f"{a.literal()} listed but not cosmall" for a in extra)
    return problems
