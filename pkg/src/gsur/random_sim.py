"""Random balanced-interval statistics, Monte Carlo and closed form.

Discrete model: m red points among m+n positions, uniformly at random;
t_stat and s_stat are the point counts of the smallest and largest balanced
interval, and E is the event that at least three blue points sit before the
first red, after the last red, and between each consecutive pair of reds
(E forces every balanced interval down to a single red-blue pair).

Continuous model: m red and n blue coordinates drawn i.i.d. uniform on
[0, 1].  m_len is the length of the shortest balanced interval, measured
tight against its endpoints; l_len is the length of the longest one, where
an interval realizing a balanced window may stretch to just inside the
neighboring points, or to the domain ends 0 and 1 at the boundary.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import BLUE, RED, Bicoloring
from .errors import InvalidParams

# Exact rational arithmetic below this size; float products beyond it.
_EXACT_LIMIT = 64


@dataclass(frozen=True)
class DiscreteTrial:
    m: int
    n: int
    t_stat: int
    s_stat: int
    event_e: bool

    def __post_init__(self):
        if not (2 <= self.t_stat <= self.s_stat <= self.m + self.n):
            raise ValueError(
                f"need 2 <= t <= s <= m+n, got t={self.t_stat}, s={self.s_stat}"
            )
        if self.t_stat % 2 or self.s_stat % 2:
            raise ValueError("balanced interval point counts are even")
        if self.event_e and self.s_stat != 2:
            raise ValueError("event E forces the largest balanced interval to 2 points")


@dataclass(frozen=True)
class ContinuousTrial:
    m: int
    n: int
    m_len: float
    l_len: float

    def __post_init__(self):
        if not (0.0 < self.m_len <= self.l_len <= 1.0):
            raise ValueError(
                f"need 0 < m_len <= l_len <= 1, got {self.m_len}, {self.l_len}"
            )


def _group_stats(prefix: np.ndarray):
    """Group positions of the prefix array by equal value.

    Returns (pair_a, pair_b, first, last): consecutive same-value position
    pairs with pair_a < pair_b (minima come from these) and the extreme
    positions of each value occurring more than once (maxima come from
    these).  Every pair (a, b) is a balanced window of points a+1 .. b.
    """
    idx = np.argsort(prefix, kind="stable")
    vals = prefix[idx]
    same = vals[1:] == vals[:-1]
    pair_a = idx[:-1][same]
    pair_b = idx[1:][same]
    starts = np.flatnonzero(np.r_[True, ~same])
    ends = np.r_[starts[1:], len(idx)] - 1
    multi = ends > starts
    return pair_a, pair_b, idx[starts[multi]], idx[ends[multi]]


def _prefix_of(signs: np.ndarray) -> np.ndarray:
    prefix = np.zeros(len(signs) + 1, dtype=np.int64)
    prefix[1:] = np.cumsum(signs)
    return prefix


def smallest_largest_balanced(colors: str | Bicoloring) -> tuple[int, int]:
    """Point counts (t, s) of the smallest and largest balanced interval.

    O(n): balanced intervals are exactly the pairs of equal prefix-balance
    values, so t is the closest same-value pair (always 2: two adjacent
    points of opposite color exist) and s the widest.
    """
    b = colors if isinstance(colors, Bicoloring) else Bicoloring(colors)
    pair_a, pair_b, first, last = _group_stats(_prefix_of(b.signs()))
    return int((pair_b - pair_a).min()), int((last - first).max())


def sample_discrete(m: int, n: int, seed: int) -> DiscreteTrial:
    """One trial: a uniform m-subset of m+n positions colored red."""
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    total = m + n
    reds = np.sort(rng.choice(total, size=m, replace=False))
    signs = np.full(total, -1, dtype=np.int64)
    signs[reds] = 1
    pair_a, pair_b, first, last = _group_stats(_prefix_of(signs))
    t = int((pair_b - pair_a).min())
    s = int((last - first).max())
    event = bool(
        reds[0] >= 3
        and total - 1 - reds[-1] >= 3
        and (np.diff(reds) >= 4).all()
    )
    return DiscreteTrial(m=m, n=n, t_stat=t, s_stat=s, event_e=event)


def sample_continuous_points(m: int, n: int, seed: int) -> tuple[np.ndarray, str]:
    """Sorted coordinates and the left-to-right color string of one trial.

    Replays the exact draw of sample_continuous for the same seed.
    """
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    xs = rng.random(m + n)
    order = np.argsort(xs, kind="stable")
    colors = "".join(RED if int(i) < m else BLUE for i in order)
    return xs[order], colors


def continuous_stats(xs, colors: str | Bicoloring) -> tuple[float, float]:
    """(m_len, l_len) for sorted coordinates in [0, 1] with their colors.

    m_len is the tight span of the shortest balanced window; l_len stretches
    the longest window's interval out to its outer neighbors, or to the
    domain ends 0 and 1.
    """
    xs = np.asarray(xs, dtype=float)
    b = colors if isinstance(colors, Bicoloring) else Bicoloring(colors)
    if xs.ndim != 1 or len(xs) != len(b.colors):
        raise ValueError(f"need one coordinate per color, got {xs.shape}")
    if (np.diff(xs) < 0).any():
        raise ValueError("coordinates must be sorted ascending")
    if xs[0] < 0.0 or xs[-1] > 1.0:
        raise ValueError("coordinates must lie within [0, 1]")
    ext = np.empty(len(xs) + 2)
    ext[0] = 0.0
    ext[1:-1] = xs
    ext[-1] = 1.0
    pair_a, pair_b, first, last = _group_stats(_prefix_of(b.signs()))
    m_len = float((ext[pair_b] - ext[pair_a + 1]).min())
    l_len = float((ext[last + 1] - ext[first]).max())
    return m_len, l_len


def sample_continuous(m: int, n: int, seed: int) -> ContinuousTrial:
    """One trial: m red and n blue coordinates i.i.d. uniform on [0, 1]."""
    xs, colors = sample_continuous_points(m, n, seed)
    m_len, l_len = continuous_stats(xs, colors)
    return ContinuousTrial(m=m, n=n, m_len=m_len, l_len=l_len)


def _check_e_params(m: int, n: int) -> None:
    if m < 1:
        raise InvalidParams(f"need m >= 1, got {m}")
    if n <= 3 * (m + 2):
        raise InvalidParams(f"need n > 3(m+2) = {3 * (m + 2)}, got n={n}")


def prob_e_exact(m: int, n: int) -> Fraction:
    """Exact rational P(E) = C(n-2m-3, m) / C(m+n, m).

    Stars and bars: reserving 3 blues per gap (m+1 gaps) leaves n-3m-3 free
    blues, so C(n-2m-3, m) of the C(m+n, m) red placements satisfy E.
    """
    _check_e_params(m, n)
    return Fraction(math.comb(n - 2 * m - 3, m), math.comb(m + n, m))


def prob_e_closed_form(m: int, n: int) -> float:
    """P(E) as a float: exact ratio when m+n is small, else the telescoped
    product of the binomial ratio, C(n-2m-3, m) / C(m+n, m) =
    prod_j (n-2m-3-j)/(m+n-j).  Each factor is O(1), so there is no
    overflow and the relative error stays within a few ulps per factor.
    """
    _check_e_params(m, n)
    if m + n <= _EXACT_LIMIT:
        return float(prob_e_exact(m, n))
    out = 1.0
    for j in range(m):
        out *= (n - 2 * m - 3 - j) / (m + n - j)
    return out


def prob_e_lower_bound(m: int, n: int) -> float:
    """max(0, 1 - m(3m+3)/(n+1)), a closed-form lower bound on P(E)."""
    _check_e_params(m, n)
    return max(0.0, 1.0 - m * (3 * m + 3) / (n + 1))


@dataclass(frozen=True)
class ExperimentResult:
    """Per-trial records plus aggregates, reproducible from (model, m, n,
    trials, seed).  Trial t uses seed ^ t, so trials are order-independent.

    means/mins/maxs are keyed by statistic name: t_stat/s_stat for the
    discrete model, m_len/l_len for the continuous one.  p_s2 and p_event_e
    are empirical probabilities, discrete model only.
    """

    model: str
    m: int
    n: int
    trials: int
    seed: int
    records: tuple
    means: dict[str, float]
    mins: dict[str, float]
    maxs: dict[str, float]
    p_s2: float | None
    p_event_e: float | None


def run_experiment(model: str, m: int, n: int, trials: int, seed: int) -> ExperimentResult:
    if model not in ("discrete", "continuous"):
        raise InvalidParams(f"model must be 'discrete' or 'continuous', got {model!r}")
    if trials < 1:
        raise InvalidParams(f"need trials >= 1, got {trials}")
    if seed < 0:
        raise InvalidParams(f"seed must be nonnegative, got {seed}")
    if model == "discrete":
        records = tuple(sample_discrete(m, n, seed ^ t) for t in range(trials))
        fields = ("t_stat", "s_stat")
        p_s2 = sum(r.s_stat == 2 for r in records) / trials
        p_event_e = sum(r.event_e for r in records) / trials
    else:
        records = tuple(sample_continuous(m, n, seed ^ t) for t in range(trials))
        fields = ("m_len", "l_len")
        p_s2 = p_event_e = None
    cols = {f: np.array([getattr(r, f) for r in records], dtype=float) for f in fields}
    return ExperimentResult(
        model=model,
        m=m,
        n=n,
        trials=trials,
        seed=seed,
        records=records,
        means={f: float(v.mean()) for f, v in cols.items()},
        mins={f: float(v.min()) for f, v in cols.items()},
        maxs={f: float(v.max()) for f, v in cols.items()},
        p_s2=p_s2,
        p_event_e=p_event_e,
    )
