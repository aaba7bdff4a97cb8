"""Generators for tight and extremal benchmark instances.

Each generator returns a NamedInstance bundling a point set, a bicoloring
family, and (where a lower-bound argument pins it down) the expected minimal
system size together with a note saying why.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import BLUE, RED, BicoloringFamily, PointSet
from .errors import InvalidParams


@dataclass(frozen=True)
class NamedInstance:
    name: str
    ps: PointSet
    fam: BicoloringFamily
    expected_optimum: int | None = None
    note: str = ""


def _line_points(n: int) -> PointSet:
    return PointSet([(float(i),) for i in range(1, n + 1)])


def gen_prefix_family(n: int) -> NamedInstance:
    """B_i = first i points red, rest blue, for i = 1..n-1.

    An interval balanced for B_i must sit symmetrically on B_i's color
    boundary, so no interval serves two members: any interval system for
    this family has at least n-1 ranges, and adjacent pairs reach that.
    """
    if n < 2:
        raise InvalidParams(f"need n >= 2, got {n}")
    colorings = [RED * i + BLUE * (n - i) for i in range(1, n)]
    return NamedInstance(
        name=f"prefix-n{n}",
        ps=_line_points(n),
        fam=BicoloringFamily(colorings),
        expected_optimum=n - 1,
        note="lower bound: each interval balances at most one prefix bicoloring",
    )


def gen_m_restricted_family(n: int, m: int) -> NamedInstance:
    """The n-m bicolorings forcing n-m intervals under the m-restriction.

    For i = 1..n-2m+1, B_i colors the leftmost m+i-1 points red; for
    i = n-2m+2..n-m it colors the window {i-n+2m, ..., i+m-1} (1-based)
    red.  Every member has at least m points of each color.
    """
    if m < 1 or 2 * m >= n:
        raise InvalidParams(f"need 1 <= m < n/2, got n={n}, m={m}")
    colorings = []
    for i in range(1, n - m + 1):
        if i <= n - 2 * m + 1:
            red_lo, red_hi = 1, m + i - 1
        else:
            red_lo, red_hi = i - n + 2 * m, i + m - 1
        colorings.append(
            "".join(RED if red_lo <= p <= red_hi else BLUE for p in range(1, n + 1))
        )
    return NamedInstance(
        name=f"m-restricted-n{n}-m{m}",
        ps=_line_points(n),
        fam=BicoloringFamily(colorings),
        expected_optimum=n - m,
        note="lower bound: no interval balances two members of this family",
    )


def gen_2k_tightness(k: int) -> NamedInstance:
    """Single bicoloring on n = 3k-1 points with no balanced 2k-point window.

    First k-1 points blue, middle k+1 red, last k-1 blue; the blue count
    2(k-1) equals the qualifying threshold exactly, so the sliding-window
    guarantee does not apply, and indeed every 2k-window is unbalanced.
    """
    if k < 2:
        raise InvalidParams(f"need k >= 2, got {k}")
    n = 3 * k - 1
    colors = BLUE * (k - 1) + RED * (k + 1) + BLUE * (k - 1)
    return NamedInstance(
        name=f"2k-tight-k{k}",
        ps=_line_points(n),
        fam=BicoloringFamily([colors]),
        expected_optimum=None,
        note="counterexample: blue count sits exactly at the 2k threshold",
    )


def gen_embedded_line(n: int, d: int, direction: Sequence[float]) -> NamedInstance:
    """Prefix family placed collinearly in R^d at i * direction, i = 1..n.

    A ball meets the carrier line in an interval, so the prefix-family
    argument survives the embedding: n-1 balls are necessary, and the
    diametral balls of adjacent pairs suffice.
    """
    if n < 2:
        raise InvalidParams(f"need n >= 2, got {n}")
    if d < 2:
        raise InvalidParams("need d >= 2; use the 1D generators for points on a line")
    vec = tuple(float(x) for x in direction)
    if len(vec) != d:
        raise InvalidParams(f"direction has dimension {len(vec)}, expected {d}")
    if not any(vec):
        raise InvalidParams("direction must be nonzero")
    pts = [tuple(i * x for x in vec) for i in range(1, n + 1)]
    colorings = [RED * i + BLUE * (n - i) for i in range(1, n)]
    return NamedInstance(
        name=f"embedded-line-n{n}-d{d}",
        ps=PointSet(pts, dim=d),
        fam=BicoloringFamily(colorings),
        expected_optimum=n - 1,
        note="lower bound: balls meet the carrier line in intervals, "
        "so the prefix-family argument applies to any ball family",
    )
