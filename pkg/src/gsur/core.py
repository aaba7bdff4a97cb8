"""Domain types and balance predicates for bicolored point sets.

Points live in R^d.  A bicoloring assigns 'R' or 'B' to every point (both
colors present).  A range (index interval, coordinate interval, axis-parallel
box, or Euclidean ball) is *balanced* for a bicoloring when it contains
equally many red and blue points, at least one of each.  Containment is
closed in every variant: boundary points count as inside.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from .errors import CertificateError, DimensionError, MonochromaticInput

RED = "R"
BLUE = "B"

# Relative slack for ball-boundary comparisons on non-representable inputs.
BOUNDARY_RTOL = 1e-12


class ColorCount(NamedTuple):
    red: int
    blue: int


@dataclass(frozen=True)
class PointSet:
    """Pairwise-distinct points in R^dim; 1D point sets are kept sorted.

    `points` is a tuple of coordinate tuples.  Construction rejects
    duplicates, dimension mismatches, and (for dim=1) unsorted input.
    """

    dim: int
    points: tuple[tuple[float, ...], ...]

    def __init__(self, points: Iterable[Sequence[float]], dim: int | None = None):
        pts = tuple(tuple(float(c) for c in p) for p in points)
        if len(pts) < 2:
            raise ValueError("a point set needs at least 2 points")
        d = dim if dim is not None else len(pts[0])
        if d < 1:
            raise DimensionError("dimension must be a positive integer")
        for p in pts:
            if len(p) != d:
                raise DimensionError(f"point {p} does not have dimension {d}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        if d == 1:
            xs = [p[0] for p in pts]
            if any(a >= b for a, b in zip(xs, xs[1:])):
                raise ValueError("1D points must be strictly increasing")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        return len(self.points)

    def coords(self) -> np.ndarray:
        """Points as an (n, dim) float array."""
        return np.asarray(self.points, dtype=float)

    def xs(self) -> np.ndarray:
        """1D coordinates as a flat array (dim must be 1)."""
        if self.dim != 1:
            raise DimensionError("xs() requires a 1D point set")
        return np.asarray([p[0] for p in self.points])


@dataclass(frozen=True)
class Bicoloring:
    """Red/blue labels over a point set, as a string over {R, B}."""

    colors: str

    def __post_init__(self):
        if set(self.colors) - {RED, BLUE}:
            raise ValueError(f"colors must be over {{R, B}}, got {self.colors!r}")
        if RED not in self.colors or BLUE not in self.colors:
            raise MonochromaticInput("a bicoloring needs at least one point of each color")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, i: int) -> str:
        return self.colors[i]

    def signs(self) -> np.ndarray:
        """+1 for red, -1 for blue, as an int array."""
        return np.where(np.frombuffer(self.colors.encode(), dtype="S1") == b"R", 1, -1)

    def count(self) -> ColorCount:
        r = self.colors.count(RED)
        return ColorCount(red=r, blue=len(self.colors) - r)


@dataclass(frozen=True)
class BicoloringFamily:
    """A nonempty list of bicolorings of common length (duplicates allowed)."""

    bicolorings: tuple[Bicoloring, ...]

    def __init__(self, bicolorings: Iterable[Bicoloring | str]):
        bcs = tuple(b if isinstance(b, Bicoloring) else Bicoloring(b) for b in bicolorings)
        if not bcs:
            raise ValueError("a bicoloring family must be nonempty")
        n = len(bcs[0])
        if any(len(b) != n for b in bcs):
            raise ValueError("all bicolorings in a family must have the same length")
        object.__setattr__(self, "bicolorings", bcs)

    def __len__(self) -> int:
        return len(self.bicolorings)

    def __getitem__(self, i: int) -> Bicoloring:
        return self.bicolorings[i]

    def __iter__(self):
        return iter(self.bicolorings)

    @property
    def n(self) -> int:
        return len(self.bicolorings[0])


@dataclass(frozen=True)
class IndexInterval:
    """Closed interval [p_lo, p_hi] of a sorted 1D point set, by 0-based index."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi):
            raise ValueError(f"need 0 <= lo <= hi, got [{self.lo}, {self.hi}]")

    @property
    def point_count(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class CoordInterval:
    """Closed interval [lo, hi] on the real line."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"need lo <= hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Box:
    """Closed axis-parallel box with corner vectors lo <= hi componentwise."""

    lo: tuple[float, ...]
    hi: tuple[float, ...]

    def __init__(self, lo: Sequence[float], hi: Sequence[float]):
        lo = tuple(float(c) for c in lo)
        hi = tuple(float(c) for c in hi)
        if len(lo) != len(hi):
            raise DimensionError("box corners must have equal dimension")
        if any(a > b for a, b in zip(lo, hi)):
            raise ValueError("box needs lo <= hi componentwise")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dim(self) -> int:
        return len(self.lo)


@dataclass(frozen=True)
class Ball:
    """Closed Euclidean ball."""

    center: tuple[float, ...]
    radius: float

    def __init__(self, center: Sequence[float], radius: float):
        center = tuple(float(c) for c in center)
        if radius < 0:
            raise ValueError("ball radius must be nonnegative")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", float(radius))

    @property
    def dim(self) -> int:
        return len(self.center)


Range = Union[IndexInterval, CoordInterval, Box, Ball]


@dataclass(frozen=True)
class GSur:
    """A family of ranges plus a certificate: bicoloring index -> index of a
    range balanced for it."""

    ranges: tuple[Range, ...]
    certificate: dict[int, int]

    def __init__(self, ranges: Iterable[Range], certificate: dict[int, int]):
        object.__setattr__(self, "ranges", tuple(ranges))
        object.__setattr__(self, "certificate", dict(certificate))

    @property
    def size(self) -> int:
        return len(self.ranges)


def contains(rng: Range, point: Sequence[float], ps: PointSet | None = None) -> bool:
    """Closed containment test.  IndexInterval needs the owning 1D PointSet."""
    if isinstance(rng, IndexInterval):
        if ps is None:
            raise DimensionError("IndexInterval containment needs the owning point set")
        if ps.dim != 1 or len(point) != 1:
            raise DimensionError("IndexInterval applies to 1D point sets only")
        if rng.hi >= ps.n:
            raise ValueError(f"interval [{rng.lo}, {rng.hi}] out of range for n={ps.n}")
        x = float(point[0])
        return ps.points[rng.lo][0] <= x <= ps.points[rng.hi][0]
    if isinstance(rng, CoordInterval):
        if len(point) != 1:
            raise DimensionError("CoordInterval applies to 1D points only")
        return rng.lo <= float(point[0]) <= rng.hi
    if isinstance(rng, Box):
        if len(point) != rng.dim:
            raise DimensionError(f"point dimension {len(point)} != box dimension {rng.dim}")
        return all(a <= float(x) <= b for a, x, b in zip(rng.lo, point, rng.hi))
    if isinstance(rng, Ball):
        if len(point) != rng.dim:
            raise DimensionError(f"point dimension {len(point)} != ball dimension {rng.dim}")
        d2 = sum((float(x) - c) ** 2 for x, c in zip(point, rng.center))
        r2 = rng.radius * rng.radius
        return d2 <= r2 * (1.0 + BOUNDARY_RTOL)
    raise TypeError(f"not a range: {rng!r}")


def contained_indices(rng: Range, ps: PointSet) -> np.ndarray:
    """Boolean mask over ps: which points lie in the closed range."""
    if isinstance(rng, IndexInterval):
        if ps.dim != 1:
            raise DimensionError("IndexInterval applies to 1D point sets only")
        if rng.hi >= ps.n:
            raise ValueError(f"interval [{rng.lo}, {rng.hi}] out of range for n={ps.n}")
        mask = np.zeros(ps.n, dtype=bool)
        mask[rng.lo : rng.hi + 1] = True
        return mask
    if isinstance(rng, CoordInterval):
        xs = ps.xs()
        return (xs >= rng.lo) & (xs <= rng.hi)
    if isinstance(rng, Box):
        if rng.dim != ps.dim:
            raise DimensionError(f"box dimension {rng.dim} != point-set dimension {ps.dim}")
        c = ps.coords()
        return np.all((c >= np.asarray(rng.lo)) & (c <= np.asarray(rng.hi)), axis=1)
    if isinstance(rng, Ball):
        if rng.dim != ps.dim:
            raise DimensionError(f"ball dimension {rng.dim} != point-set dimension {ps.dim}")
        d2 = np.sum((ps.coords() - np.asarray(rng.center)) ** 2, axis=1)
        return d2 <= rng.radius * rng.radius * (1.0 + BOUNDARY_RTOL)
    raise TypeError(f"not a range: {rng!r}")


def balance_count(rng: Range, ps: PointSet, b: Bicoloring) -> ColorCount:
    """Exact red/blue counts of the points of ps inside the closed range."""
    if len(b) != ps.n:
        raise ValueError(f"bicoloring length {len(b)} != point count {ps.n}")
    mask = contained_indices(rng, ps)
    red = int(np.count_nonzero(mask & (np.frombuffer(b.colors.encode(), dtype="S1") == b"R")))
    return ColorCount(red=red, blue=int(np.count_nonzero(mask)) - red)


def is_balanced(rng: Range, ps: PointSet, b: Bicoloring) -> bool:
    """True iff the range contains equally many red and blue points, >= 1 each.

    Empty ranges are not balanced.
    """
    red, blue = balance_count(rng, ps, b)
    return red == blue and red >= 1


def enumerate_candidate_intervals(ps: PointSet) -> list[IndexInterval]:
    """All n(n+1)/2 index intervals in lexicographic order.

    Any balanced coordinate interval can be shrunk onto the points it
    contains, so index intervals form a complete candidate set in 1D.
    """
    if ps.dim != 1:
        raise DimensionError("candidate intervals require a 1D point set")
    n = ps.n
    return [IndexInterval(i, j) for i in range(n) for j in range(i, n)]


def prefix_balance(ps: PointSet, b: Bicoloring) -> list[int]:
    """Prefix sums s_0..s_n of +1 per red / -1 per blue point.

    IndexInterval(i, j) is balanced iff s_{j+1} == s_i and j > i (a single
    point is never balanced).
    """
    if ps.dim != 1:
        raise DimensionError("prefix balance requires a 1D point set")
    if len(b) != ps.n:
        raise ValueError(f"bicoloring length {len(b)} != point count {ps.n}")
    s = [0]
    for ch in b.colors:
        s.append(s[-1] + (1 if ch == RED else -1))
    return s


def build_certificate(
    ps: PointSet, fam: BicoloringFamily, ranges: Sequence[Range]
) -> dict[int, int]:
    """Map each bicoloring to the lowest-index balanced range.

    Raises CertificateError listing every bicoloring no range balances.
    All-interval range lists on 1D point sets take a vectorized prefix-sum
    path; anything else falls back to per-range counting.
    """
    ranges = list(ranges)
    cert: dict[int, int] = {}
    uncovered = []
    if ranges and ps.dim == 1 and all(isinstance(r, IndexInterval) for r in ranges):
        los = np.array([r.lo for r in ranges])
        his = np.array([r.hi for r in ranges])
        if his.max() >= ps.n:
            raise ValueError(f"interval candidate out of range for n={ps.n}")
        signs = np.stack([b.signs() for b in fam])
        prefix = np.zeros((len(fam), ps.n + 1), dtype=np.int64)
        prefix[:, 1:] = np.cumsum(signs, axis=1)
        bits = (prefix[:, his + 1] == prefix[:, los]) & (his > los)[None, :]
        covered = bits.any(axis=1)
        firsts = np.argmax(bits, axis=1)
        for bi in range(len(fam)):
            if covered[bi]:
                cert[bi] = int(firsts[bi])
            else:
                uncovered.append(bi)
    else:
        for bi, b in enumerate(fam):
            for ri, rng in enumerate(ranges):
                if is_balanced(rng, ps, b):
                    cert[bi] = ri
                    break
            else:
                uncovered.append(bi)
    if uncovered:
        raise CertificateError(uncovered)
    return cert


def gsur_failures(ps: PointSet, fam: BicoloringFamily, ranges: Sequence[Range]) -> list[int]:
    """Indices of bicolorings that no range in the collection balances."""
    return [
        bi for bi, b in enumerate(fam)
        if not any(is_balanced(rng, ps, b) for rng in ranges)
    ]


def verify_certificate(ps: PointSet, fam: BicoloringFamily, gsur: GSur) -> bool:
    """Re-check that the certificate maps every bicoloring to a balanced range."""
    for bi in range(len(fam)):
        ri = gsur.certificate.get(bi)
        if ri is None or not (0 <= ri < len(gsur.ranges)):
            return False
        if not is_balanced(gsur.ranges[ri], ps, fam[bi]):
            return False
    return True
