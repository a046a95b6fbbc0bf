"""Tableaux on horizontal strips, the inversion statistic, and the
resulting q-weighted symmetric polynomials.

A tableau fills each row with a weakly increasing sequence of entries
at most k. Two cells u (row i) and v (row j), i < j, invert when they
share a content and the earlier row's entry is larger, or the earlier
cell's content is one higher and its entry is smaller. Summing
q^(inversions) x^(content multiset) over all fillings gives the strip's
polynomial; for unicellular strips the same sum can be read off a
labelled graph by counting ascents of vertex colourings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .errors import NotUnicellular, PreconditionViolated, ZeroPolynomial
from .qsymfunc import BasisExpansion, QPoly, SymFunc
from .strips import HorizontalStrip, Row

StripTableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LabelledGraph:
    """Graph on vertices labelled 1..n; the labelling is meaningful
    because ascent counting compares colour values along label order."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for a, b in self.edges:
            if not (1 <= a < b <= self.n):
                raise ValueError(f"bad edge ({a}, {b}) on {self.n} vertices")

    @property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def degree_multiset(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for a, b in self.edges:
            degs[a - 1] += 1
            degs[b - 1] += 1
        return tuple(sorted(degs, reverse=True))


def validate_tableau(strip: HorizontalStrip, tableau) -> StripTableau:
    t = tuple(tuple(int(e) for e in row) for row in tableau)
    if len(t) != strip.n:
        raise ValueError(f"tableau has {len(t)} rows, strip has {strip.n}")
    for row, entries in zip(strip.rows, t):
        if len(entries) != row.size:
            raise ValueError(f"row {row.literal} needs {row.size} entries")
        if any(e < 1 for e in entries):
            raise ValueError("entries must be positive")
        if any(entries[i] > entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"row entries must weakly increase: {entries}")
    return t


def inversions(strip: HorizontalStrip, tableau) -> int:
    """Inversion count by direct cell-pair inspection."""
    t = validate_tableau(strip, tableau)
    total = 0
    rows = strip.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            total += _pair_inversions(rows[i], t[i], rows[j], t[j])
    return total


def _pair_inversions(ri: Row, ti, rj: Row, tj) -> int:
    # ri carries the earlier index
    inv = 0
    for c in range(max(ri.lo, rj.lo), min(ri.hi, rj.hi) + 1):
        if ti[c - ri.lo] > tj[c - rj.lo]:
            inv += 1
    for c in range(max(ri.lo, rj.lo + 1), min(ri.hi, rj.hi + 1) + 1):
        if ti[c - ri.lo] < tj[c - 1 - rj.lo]:
            inv += 1
    return inv


def _rows_interact(r: Row, s: Row) -> bool:
    return not (r.hi < s.lo - 1 or s.hi < r.lo - 1)


def llt_poly(strip: HorizontalStrip, k: int | None = None) -> SymFunc:
    """Sum of q^(inversions) x^(entry counts) over all tableaux with
    entries at most k. Defaults to k = row count, which is enough
    variables to pin down the strip's symmetric function.

    Enumerates the product of per-row fillings, with inversion counts
    between interacting row pairs looked up from precomputed tables.
    """
    if k is None:
        k = strip.n
    if k < 1:
        raise ValueError("need at least one variable")
    rows = strip.rows
    n = len(rows)
    row_seqs: list[list[tuple[int, ...]]] = []
    row_counts: list[list[tuple[int, ...]]] = []
    for r in rows:
        seqs = list(combinations_with_replacement(range(1, k + 1), r.size))
        counts = []
        for s in seqs:
            v = [0] * k
            for e in s:
                v[e - 1] += 1
            counts.append(tuple(v))
        row_seqs.append(seqs)
        row_counts.append(counts)
    tables: dict[tuple[int, int], list[list[int]]] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if _rows_interact(rows[i], rows[j]):
                tables[(i, j)] = [
                    [_pair_inversions(rows[i], si, rows[j], sj) for sj in row_seqs[j]]
                    for si in row_seqs[i]
                ]
    terms: dict[tuple[int, ...], dict[int, int]] = {}
    choice = [0] * n

    def rec(r: int, exp: tuple[int, ...], inv: int):
        if r == n:
            d = terms.setdefault(exp, {})
            d[inv] = d.get(inv, 0) + 1
            return
        counts = row_counts[r]
        pair_cols = [
            (tables[(i, r)][choice[i]]) for i in range(r) if (i, r) in tables
        ]
        for idx in range(len(row_seqs[r])):
            choice[r] = idx
            add = sum(col[idx] for col in pair_cols)
            new_exp = tuple(a + b for a, b in zip(exp, counts[idx]))
            rec(r + 1, new_exp, inv + add)

    rec(0, (0,) * k, 0)
    return SymFunc(
        k, strip.cell_count, {e: QPoly(d) for e, d in terms.items()}
    )


def two_row_schur(a: int, b: int, m: int) -> BasisExpansion:
    """Schur expansion of a two-row strip with sizes a >= b and edge
    weight m: the sum over t of q^min(m, t) s_(a+b-t, t)."""
    if not a >= b >= m >= 0:
        raise PreconditionViolated(f"need a >= b >= m >= 0, got ({a}, {b}, {m})")
    coeffs = {}
    for t in range(b + 1):
        lam = (a + b - t, t) if t else ((a + b,) if a + b else ())
        coeffs[lam] = QPoly.q_power(min(m, t))
    return BasisExpansion("s", a + b, coeffs)


def gamma_graph(strip: HorizontalStrip) -> LabelledGraph:
    """Labelled inversion graph of a unicellular strip: cells in
    decreasing content order (ties broken by higher strip row first),
    edges wherever two cells could invert."""
    if not strip.is_unicellular:
        raise NotUnicellular(f"{strip.literal} has a row with more than one cell")
    cells = sorted(
        ((r.lo, i + 1) for i, r in enumerate(strip.rows)),
        key=lambda cr: (-cr[0], -cr[1]),
    )
    edges = set()
    n = len(cells)
    for a in range(n):
        ca, ra = cells[a]
        for b in range(a + 1, n):
            cb, rb = cells[b]
            if ca == cb:
                edges.add((a + 1, b + 1))
            elif ca == cb + 1 and ra < rb:
                edges.add((a + 1, b + 1))
    return LabelledGraph(n, frozenset(edges))


def llt_via_colourings(graph: LabelledGraph, k: int) -> SymFunc:
    """Ascent-weighted sum over all (not necessarily proper) colourings:
    an edge (v_a, v_b), a < b, ascends when the colour strictly grows."""
    if k < 1:
        raise ValueError("need at least one colour")
    edges = graph.sorted_edges
    terms: dict[tuple[int, ...], dict[int, int]] = {}
    for kappa in product(range(1, k + 1), repeat=graph.n):
        asc = sum(1 for a, b in edges if kappa[a - 1] < kappa[b - 1])
        v = [0] * k
        for colour in kappa:
            v[colour - 1] += 1
        exp = tuple(v)
        d = terms.setdefault(exp, {})
        d[asc] = d.get(asc, 0) + 1
    return SymFunc(k, graph.n, {e: QPoly(d) for e, d in terms.items()})


def top_q_degree(f: SymFunc) -> int:
    """Largest q-exponent appearing in any coefficient."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has no top q-degree")
    return max(c.degree for _, c in f.terms())
