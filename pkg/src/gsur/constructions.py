"""Constructive range systems with verified certificates.

Four constructions, each returning a GSur whose certificate names, for every
bicoloring in the family, the lowest-index range balanced for it:

- adjacent-pair intervals (n-1 ranges, works for every bicoloring),
- sliding windows of 2k points (needs both color counts above a threshold),
- adjacent pairs restricted to a prefix (for m-restricted bicolorings),
- diametral balls of a Gabriel spanning tree (n-1 balls, any dimension),
- adjacent boxes along a separating axis (the box analogue of adjacent pairs).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Ball,
    BicoloringFamily,
    Box,
    ColorCount,
    CoordInterval,
    GSur,
    IndexInterval,
    PointSet,
    build_certificate,
)
from .errors import (
    DimensionError,
    InvalidParams,
    NonQualifyingBicoloring,
    NoSeparatingAxis,
    NotMRestricted,
)
from .gabriel import gabriel_graph, spanning_tree


@dataclass(frozen=True)
class ThresholdReport:
    """Per-bicoloring color counts against the size-2k threshold.

    threshold = floor(n/(2k) + 1) * (k-1); a bicoloring qualifies when both
    its red and blue counts strictly exceed it.
    """

    k: int
    threshold: int
    counts: tuple[ColorCount, ...]
    qualifying: tuple[bool, ...]


def threshold_report(fam: BicoloringFamily, k: int) -> ThresholdReport:
    if k < 1:
        raise InvalidParams(f"k must be a positive integer, got {k}")
    n = fam.n
    threshold = (n // (2 * k) + 1) * (k - 1)
    counts = tuple(b.count() for b in fam)
    qualifying = tuple(c.red > threshold and c.blue > threshold for c in counts)
    return ThresholdReport(k=k, threshold=threshold, counts=counts, qualifying=qualifying)


def consecutive_interval_gsur(ps: PointSet, fam: BicoloringFamily) -> GSur:
    """The n-1 adjacent-pair intervals [p_i, p_{i+1}].

    Works for every bicoloring: not all adjacent pairs can be monochromatic.
    """
    _check_1d(ps, fam)
    ranges = [IndexInterval(i, i + 1) for i in range(ps.n - 1)]
    return GSur(ranges, build_certificate(ps, fam, ranges))


def size2k_interval_gsur(ps: PointSet, fam: BicoloringFamily, k: int) -> GSur:
    """Sliding windows of exactly 2k points.

    Guaranteed to contain a balanced window only when every bicoloring has
    more than floor(n/(2k) + 1)*(k-1) points of each color; refuses with
    NonQualifyingBicoloring otherwise rather than returning a partial
    certificate.
    """
    _check_1d(ps, fam)
    n = ps.n
    if n < 2 * k:
        raise InvalidParams(f"need n >= 2k, got n={n}, k={k}")
    report = threshold_report(fam, k)
    for bi, ok in enumerate(report.qualifying):
        if not ok:
            c = report.counts[bi]
            raise NonQualifyingBicoloring(bi, c.red, c.blue, report.threshold)
    ranges = [IndexInterval(j, j + 2 * k - 1) for j in range(n - 2 * k + 1)]
    return GSur(ranges, build_certificate(ps, fam, ranges))


def m_restricted_gsur(ps: PointSet, fam: BicoloringFamily, m: int) -> GSur:
    """Adjacent-pair intervals on the prefix of the first n-m+1 points.

    Every bicoloring with at least m points of each color keeps both colors
    inside the prefix, so the n-m prefix intervals suffice.  When n is even
    and m = n/2 the single full interval [p_1, p_n] is balanced for every
    such bicoloring and is returned instead.
    """
    _check_1d(ps, fam)
    n = ps.n
    if m < 1:
        raise InvalidParams(f"m must be a positive integer, got {m}")
    if 2 * m > n or (2 * m == n and n % 2 != 0):
        raise InvalidParams(f"need m < n/2 (or m = n/2 with n even), got n={n}, m={m}")
    for bi, b in enumerate(fam):
        c = b.count()
        if c.red < m or c.blue < m:
            raise NotMRestricted(bi, c.red, c.blue, m)
    if 2 * m == n:
        ranges = [IndexInterval(0, n - 1)]
    else:
        ranges = [IndexInterval(i, i + 1) for i in range(n - m)]
    return GSur(ranges, build_certificate(ps, fam, ranges))


def ball_gsur(ps: PointSet, fam: BicoloringFamily) -> GSur:
    """Diametral balls of a Gabriel spanning tree: n-1 balls in any dimension.

    Each ball contains exactly its edge's two endpoints (Gabriel property
    under closed containment), so a ball is balanced exactly when its edge
    joins opposite colors; the tree's connectivity guarantees such an edge.
    """
    if fam.n != ps.n:
        raise ValueError(f"family length {fam.n} != point count {ps.n}")
    tree = spanning_tree(gabriel_graph(ps))
    pts = ps.coords()
    ranges = []
    for i, j in tree.edges:
        center = (pts[i] + pts[j]) / 2.0
        radius = float(np.linalg.norm(pts[i] - pts[j])) / 2.0
        ranges.append(Ball(center=tuple(center), radius=radius))
    return GSur(ranges, build_certificate(ps, fam, ranges))


def box_gsur(ps: PointSet, fam: BicoloringFamily) -> GSur:
    """Adjacent-pair boxes along the lowest axis with all-distinct coordinates.

    Box i spans the two neighboring coordinates on that axis and the full
    coordinate range elsewhere, so it contains exactly two points.  For 1D
    input the boxes degenerate to coordinate intervals.
    """
    if fam.n != ps.n:
        raise ValueError(f"family length {fam.n} != point count {ps.n}")
    pts = ps.coords()
    axis = None
    for a in range(ps.dim):
        if len(set(pts[:, a])) == ps.n:
            axis = a
            break
    if axis is None:
        raise NoSeparatingAxis("every axis has a repeated coordinate value")
    order = np.argsort(pts[:, axis])
    lo = pts.min(axis=0)
    hi = pts.max(axis=0)
    ranges: list[Box | CoordInterval] = []
    for t in range(ps.n - 1):
        a0 = pts[order[t], axis]
        a1 = pts[order[t + 1], axis]
        if ps.dim == 1:
            ranges.append(CoordInterval(a0, a1))
        else:
            blo, bhi = lo.copy(), hi.copy()
            blo[axis], bhi[axis] = a0, a1
            ranges.append(Box(lo=tuple(blo), hi=tuple(bhi)))
    return GSur(ranges, build_certificate(ps, fam, ranges))


def _check_1d(ps: PointSet, fam: BicoloringFamily) -> None:
    if ps.dim != 1:
        raise DimensionError("interval constructions require a 1D point set")
    if fam.n != ps.n:
        raise ValueError(f"family length {fam.n} != point count {ps.n}")
