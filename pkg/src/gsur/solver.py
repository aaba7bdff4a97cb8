"""Minimal balanced-range systems via set cover.

The balance relation between a bicoloring family and a candidate range list
is a boolean coverage matrix; a smallest sub-family of ranges balancing every
bicoloring is exactly a minimum set cover of its rows.  This module builds
the matrix, solves it greedily and exactly, and also walks the reduction the
other way: any set-cover instance becomes a paired-point line instance whose
minimal interval systems have the same size as its minimum covers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    BLUE,
    RED,
    BicoloringFamily,
    GSur,
    IndexInterval,
    PointSet,
    Range,
    build_certificate,
    contained_indices,
    is_balanced,
)
from .errors import BudgetExceeded, GsurError, InfeasibleRow, InvalidParams

# Branch and bound is exponential in the worst case.  Soft limits, advisory
# only: the solver is tuned for instances up to roughly this scale.
SOFT_ROW_LIMIT = 24
SOFT_CANDIDATE_LIMIT = 40


@dataclass(eq=False)
class CoverageMatrix:
    """Balance relation between a bicoloring family and candidate ranges.

    Duplicate colorings share a row: `rows[r]` is the family index of row
    r's first occurrence and `row_of[b]` the row of family member b.
    bits[r, c] is True when candidate c is balanced for row r.
    """

    ps: PointSet
    fam: BicoloringFamily
    candidates: tuple[Range, ...]
    rows: tuple[int, ...]
    row_of: tuple[int, ...]
    bits: np.ndarray

    def infeasible_rows(self) -> list[int]:
        """Family indices of bicolorings no candidate balances."""
        covered = self.bits.any(axis=1)
        return [b for b, r in enumerate(self.row_of) if not covered[r]]


def build_coverage(
    ps: PointSet, fam: BicoloringFamily, candidates: Sequence[Range]
) -> CoverageMatrix:
    """Materialize the balance relation as a boolean matrix.

    1D index-interval candidates take a prefix-sum path: interval (i, j) is
    balanced iff the +1/-1 color prefix sums agree at i and j+1 (and j > i).
    Everything else goes through containment masks and exact color counts.
    """
    candidates = tuple(candidates)
    if fam.n != ps.n:
        raise ValueError(f"family length {fam.n} != point count {ps.n}")
    seen: dict[str, int] = {}
    rows: list[int] = []
    row_of: list[int] = []
    for b, bc in enumerate(fam):
        r = seen.get(bc.colors)
        if r is None:
            r = len(rows)
            seen[bc.colors] = r
            rows.append(b)
        row_of.append(r)

    n_rows = len(rows)
    if not candidates:
        bits = np.zeros((n_rows, 0), dtype=bool)
    elif ps.dim == 1 and all(isinstance(c, IndexInterval) for c in candidates):
        los = np.array([c.lo for c in candidates])
        his = np.array([c.hi for c in candidates])
        if his.max() >= ps.n:
            raise ValueError(f"interval candidate out of range for n={ps.n}")
        signs = np.stack([fam[b].signs() for b in rows])
        prefix = np.zeros((n_rows, ps.n + 1), dtype=np.int64)
        prefix[:, 1:] = np.cumsum(signs, axis=1)
        bits = (prefix[:, his + 1] == prefix[:, los]) & (his > los)[None, :]
    else:
        masks = np.stack([contained_indices(c, ps) for c in candidates])
        pos = np.stack([fam[b].signs() > 0 for b in rows]).astype(np.int64)
        red = pos @ masks.T.astype(np.int64)
        total = masks.sum(axis=1).astype(np.int64)
        bits = (2 * red == total[None, :]) & (red >= 1)
    return CoverageMatrix(
        ps=ps,
        fam=fam,
        candidates=candidates,
        rows=tuple(rows),
        row_of=tuple(row_of),
        bits=bits,
    )


def _column_masks(bits: np.ndarray) -> list[int]:
    """Per-candidate bitmask of the rows it covers."""
    cols = []
    for c in range(bits.shape[1]):
        m = 0
        for r in np.nonzero(bits[:, c])[0]:
            m |= 1 << int(r)
        cols.append(m)
    return cols


def _greedy_pick(cols: Sequence[int], full: int) -> list[int]:
    """Classic greedy: most new rows per step, ties to the lowest index."""
    uncovered = full
    picked: list[int] = []
    while uncovered:
        best_c, best_gain = -1, 0
        for c, m in enumerate(cols):
            gain = (m & uncovered).bit_count()
            if gain > best_gain:
                best_c, best_gain = c, gain
        if best_gain == 0:
            raise GsurError("greedy ran out of useful candidates on a feasible matrix")
        picked.append(best_c)
        uncovered &= ~cols[best_c]
    return picked


def greedy_cover(cm: CoverageMatrix) -> GSur:
    """ln-factor greedy cover of the coverage matrix, as a certified GSur."""
    bad = cm.infeasible_rows()
    if bad:
        raise InfeasibleRow(bad)
    cols = _column_masks(cm.bits)
    full = (1 << cm.bits.shape[0]) - 1
    picked = _greedy_pick(cols, full)
    ranges = [cm.candidates[c] for c in picked]
    return GSur(ranges, build_certificate(cm.ps, cm.fam, ranges))


def exact_cover(cm: CoverageMatrix, budget_limit: int | None = None) -> GSur:
    """Minimum-cardinality cover by branch and bound.

    Branches on the uncovered row with the fewest covering candidates,
    trying candidates in index order; the greedy cover seeds the bound.
    budget_limit caps the cover size searched; if no cover fits the budget
    the search stops with BudgetExceeded instead of proving an optimum.
    """
    if budget_limit is not None and budget_limit < 1:
        raise InvalidParams(f"budget_limit must be a positive integer, got {budget_limit}")
    bad = cm.infeasible_rows()
    if bad:
        raise InfeasibleRow(bad)
    n_rows = cm.bits.shape[0]
    full = (1 << n_rows) - 1

    # Useless and duplicate columns never help; keep the lowest index of each
    # distinct row set so tie-breaking stays by candidate index.
    seen: set[int] = set()
    cols: list[tuple[int, int]] = []
    for c, m in enumerate(_column_masks(cm.bits)):
        if m and m not in seen:
            seen.add(m)
            cols.append((c, m))
    covering = [
        [k for k, (_, m) in enumerate(cols) if (m >> r) & 1] for r in range(n_rows)
    ]
    max_gain = max(m.bit_count() for _, m in cols)

    greedy_positions = _greedy_pick([m for _, m in cols], full)
    limit = budget_limit if budget_limit is not None else len(cols)
    best: list[int] | None = greedy_positions if len(greedy_positions) <= limit else None

    chosen: list[int] = []

    def search(uncovered: int) -> None:
        nonlocal best
        cap = len(best) if best is not None else limit + 1
        if not uncovered:
            best = list(chosen)
            return
        need = -(-uncovered.bit_count() // max_gain)
        if len(chosen) + need >= cap:
            return
        branch_row, branch_width = -1, len(cols) + 1
        u = uncovered
        while u:
            r = (u & -u).bit_length() - 1
            if len(covering[r]) < branch_width:
                branch_row, branch_width = r, len(covering[r])
            u &= u - 1
        for k in covering[branch_row]:
            chosen.append(k)
            search(uncovered & ~cols[k][1])
            chosen.pop()

    search(full)
    if best is None:
        raise BudgetExceeded(budget_limit)
    indices = sorted(cols[k][0] for k in best)
    ranges = [cm.candidates[c] for c in indices]
    return GSur(ranges, build_certificate(cm.ps, cm.fam, ranges))


@dataclass(frozen=True)
class SetCoverInstance:
    """Set cover over universe {0, ..., universe_size-1}.

    Construction checks every element appears in some subset; an uncovered
    element would make the instance infeasible (and the reduced bicoloring
    monochromatic).
    """

    universe_size: int
    subsets: tuple[frozenset[int], ...]

    def __init__(self, universe_size: int, subsets: Sequence[Sequence[int]]):
        if universe_size < 1:
            raise InvalidParams(f"universe_size must be positive, got {universe_size}")
        subs = tuple(frozenset(int(x) for x in s) for s in subsets)
        if not subs:
            raise InvalidParams("need at least one subset")
        for i, s in enumerate(subs):
            if any(x < 0 or x >= universe_size for x in s):
                raise InvalidParams(
                    f"subset {i} has elements outside 0..{universe_size - 1}: {sorted(s)}"
                )
        missing = sorted(set(range(universe_size)) - frozenset().union(*subs))
        if missing:
            raise InvalidParams(f"elements in no subset (instance infeasible): {missing}")
        object.__setattr__(self, "universe_size", int(universe_size))
        object.__setattr__(self, "subsets", subs)

    @property
    def m(self) -> int:
        return len(self.subsets)


@dataclass(frozen=True)
class ReductionOutput:
    """Line instance reduced from set cover.

    Layout, left to right at coordinates 1, 2, 3, ...: for each subset S_i a
    pair (p_i, p_i') of consecutive points, then two dummy points before the
    next pair.  Bicoloring j (one per universe element) colors p_i red and
    p_i' blue when element j is in S_i; every other point is blue.
    pair_index maps subset index -> (index of p_i, index of p_i').
    """

    ps: PointSet
    fam: BicoloringFamily
    pair_index: dict[int, tuple[int, int]]


def reduce_from_set_cover(sc: SetCoverInstance) -> ReductionOutput:
    m = sc.m
    n_pts = 2 * m + 2 * (m - 1)
    ps = PointSet([(float(c),) for c in range(1, n_pts + 1)])
    pair_index = {i: (4 * i, 4 * i + 1) for i in range(m)}
    colorings = []
    for j in range(sc.universe_size):
        colors = [BLUE] * n_pts
        for i, s in enumerate(sc.subsets):
            if j in s:
                colors[4 * i] = RED
        colorings.append("".join(colors))
    return ReductionOutput(ps=ps, fam=BicoloringFamily(colorings), pair_index=pair_index)


def extract_set_cover(ro: ReductionOutput, gsur: GSur) -> list[int]:
    """Map a feasible range system on a reduced instance back to a cover.

    Any range balanced for some bicoloring of the reduced family contains
    exactly one red point, which is some pair's left member; that pair's
    subset joins the cover.  Ranges balancing nothing are dropped.
    """
    left_of = {pair[0]: i for i, pair in ro.pair_index.items()}
    out: set[int] = set()
    for rng in gsur.ranges:
        if not any(is_balanced(rng, ro.ps, b) for b in ro.fam):
            continue
        mask = contained_indices(rng, ro.ps)
        hits = [left_of[int(p)] for p in np.nonzero(mask)[0] if int(p) in left_of]
        if len(hits) != 1:
            raise GsurError(
                f"balanced range {rng!r} contains {len(hits)} pair leaders, expected 1"
            )
        out.add(hits[0])
    return sorted(out)
