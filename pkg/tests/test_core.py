import itertools
import math

import numpy as np
import pytest

from gsur import (
    Ball,
    Bicoloring,
    BicoloringFamily,
    Box,
    CertificateError,
    ColorCount,
    CoordInterval,
    DimensionError,
    GSur,
    IndexInterval,
    MonochromaticInput,
    PointSet,
    balance_count,
    build_certificate,
    contained_indices,
    contains,
    enumerate_candidate_intervals,
    gsur_failures,
    is_balanced,
    prefix_balance,
    verify_certificate,
)


def line(n):
    return PointSet([(float(i),) for i in range(1, n + 1)])


def all_colorings(n):
    for bits in itertools.product("RB", repeat=n):
        s = "".join(bits)
        if "R" in s and "B" in s:
            yield s


class TestPointSet:
    def test_basic(self):
        ps = PointSet([(1.0, 2.0), (3.0, 4.0)])
        assert ps.n == 2 and ps.dim == 2
        assert ps.points == ((1.0, 2.0), (3.0, 4.0))

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            PointSet([(1.0,)])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            PointSet([(1.0, 2.0), (1.0, 2.0)])

    def test_rejects_dim_mismatch(self):
        with pytest.raises(DimensionError):
            PointSet([(1.0,), (1.0, 2.0)])

    def test_1d_must_be_increasing(self):
        with pytest.raises(ValueError):
            PointSet([(2.0,), (1.0,)])
        with pytest.raises(ValueError):
            PointSet([(1.0,), (1.0,)])

    def test_coords_and_xs(self):
        ps = line(3)
        assert ps.coords().shape == (3, 1)
        assert list(ps.xs()) == [1.0, 2.0, 3.0]
        with pytest.raises(DimensionError):
            PointSet([(0.0, 0.0), (1.0, 1.0)]).xs()


class TestBicoloring:
    def test_signs_and_count(self):
        b = Bicoloring("RBB")
        assert list(b.signs()) == [1, -1, -1]
        assert b.count() == ColorCount(red=1, blue=2)

    def test_rejects_bad_alphabet(self):
        with pytest.raises(ValueError):
            Bicoloring("RXB")

    def test_rejects_monochromatic(self):
        with pytest.raises(MonochromaticInput):
            Bicoloring("RRR")
        with pytest.raises(MonochromaticInput):
            Bicoloring("B")

    def test_family_mixed_input_and_duplicates(self):
        fam = BicoloringFamily(["RB", Bicoloring("BR"), "RB"])
        assert len(fam) == 3 and fam.n == 2
        assert fam[2].colors == "RB"

    def test_family_rejects_empty_and_ragged(self):
        with pytest.raises(ValueError):
            BicoloringFamily([])
        with pytest.raises(ValueError):
            BicoloringFamily(["RB", "RBB"])


class TestRangeTypes:
    def test_index_interval_validation(self):
        assert IndexInterval(0, 3).point_count == 4
        with pytest.raises(ValueError):
            IndexInterval(2, 1)
        with pytest.raises(ValueError):
            IndexInterval(-1, 1)

    def test_coord_interval_validation(self):
        with pytest.raises(ValueError):
            CoordInterval(3.0, 1.0)

    def test_box_validation(self):
        with pytest.raises(ValueError):
            Box((0.0, 2.0), (1.0, 1.0))
        with pytest.raises(DimensionError):
            Box((0.0,), (1.0, 1.0))

    def test_ball_validation(self):
        with pytest.raises(ValueError):
            Ball((0.0,), -1.0)
        assert Ball((0.0, 0.0), 0.0).dim == 2


class TestContains:
    def test_ball_boundary_counts(self):
        b = Ball((0.5, 0.5), math.sqrt(2) / 2)
        assert contains(b, (0.0, 0.0))

    def test_coord_interval_closed_endpoint(self):
        assert contains(CoordInterval(1.0, 3.0), (3.0,))

    def test_box_outside_one_axis(self):
        assert not contains(Box((0.0, 0.0), (1.0, 1.0)), (2.0, 0.0))

    def test_index_interval_needs_pointset(self):
        with pytest.raises(DimensionError):
            contains(IndexInterval(0, 1), (1.0,))
        ps = line(4)
        assert contains(IndexInterval(1, 2), (2.5,), ps)
        assert not contains(IndexInterval(1, 2), (3.5,), ps)

    def test_dimension_mismatches(self):
        with pytest.raises(DimensionError):
            contains(Ball((0.0, 0.0), 1.0), (0.0,))
        with pytest.raises(DimensionError):
            contains(Box((0.0,), (1.0,)), (0.0, 0.0))

    def test_monotone_growth_never_evicts(self):
        rng = np.random.default_rng(7)
        pts = rng.normal(size=(12, 3))
        center = tuple(rng.normal(size=3))
        for r in np.linspace(0.1, 3.0, 8):
            small, big = Ball(center, r), Ball(center, r * 1.5)
            for p in pts:
                if contains(small, tuple(p)):
                    assert contains(big, tuple(p))

    def test_contained_indices_matches_contains(self):
        rng = np.random.default_rng(3)
        pts = [tuple(p) for p in rng.normal(size=(15, 2))]
        ps = PointSet(pts)
        ranges = [
            Ball(tuple(rng.normal(size=2)), 1.2),
            Box((-1.0, -1.0), (0.5, 2.0)),
        ]
        for r in ranges:
            mask = contained_indices(r, ps)
            for i, p in enumerate(pts):
                assert mask[i] == contains(r, p)


class TestBalance:
    def test_two_point_base_case(self):
        ps = line(2)
        assert balance_count(CoordInterval(1.0, 2.0), ps, Bicoloring("RB")) == (1, 1)

    def test_hand_counted_interval(self):
        ps = line(5)
        b = Bicoloring("BRRRB")
        assert balance_count(IndexInterval(0, 3), ps, b) == ColorCount(red=3, blue=1)

    def test_empty_range_not_balanced(self):
        ps = line(4)
        b = Bicoloring("RRBB")
        assert not is_balanced(CoordInterval(10.0, 11.0), ps, b)

    def test_symmetric_split_balanced(self):
        ps = line(4)
        b = Bicoloring("RRBB")
        assert is_balanced(IndexInterval(0, 3), ps, b)
        assert not is_balanced(IndexInterval(0, 1), ps, b)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            balance_count(IndexInterval(0, 1), line(3), Bicoloring("RB"))

    def test_interval_out_of_range(self):
        with pytest.raises(ValueError):
            is_balanced(IndexInterval(0, 5), line(3), Bicoloring("RBB"))


class TestEnumerateCandidates:
    def test_smallest_case(self):
        got = enumerate_candidate_intervals(line(2))
        assert got == [IndexInterval(0, 0), IndexInterval(0, 1), IndexInterval(1, 1)]

    def test_counts(self):
        assert len(enumerate_candidate_intervals(line(4))) == 10
        assert len(enumerate_candidate_intervals(line(10))) == 55

    def test_lexicographic(self):
        ivs = enumerate_candidate_intervals(line(5))
        assert ivs == sorted(ivs, key=lambda r: (r.lo, r.hi))

    def test_requires_1d(self):
        with pytest.raises(DimensionError):
            enumerate_candidate_intervals(PointSet([(0.0, 0.0), (1.0, 1.0)]))


class TestPrefixBalance:
    def test_examples(self):
        assert prefix_balance(line(2), Bicoloring("RB")) == [0, 1, 0]
        assert prefix_balance(line(4), Bicoloring("RRBB")) == [0, 1, 2, 1, 0]
        assert prefix_balance(line(5), Bicoloring("BRRRB")) == [0, -1, 0, 1, 2, 1]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_criterion_matches_is_balanced_exhaustively(self, n):
        ps = line(n)
        for colors in all_colorings(n):
            b = Bicoloring(colors)
            s = prefix_balance(ps, b)
            for iv in enumerate_candidate_intervals(ps):
                by_prefix = s[iv.hi + 1] == s[iv.lo] and iv.hi > iv.lo
                assert by_prefix == is_balanced(iv, ps, b)

    def test_shrink_completeness(self):
        # a balanced coordinate interval shrinks onto its contained points
        rng = np.random.default_rng(11)
        for _ in range(60):
            n = int(rng.integers(2, 20))
            xs = np.sort(rng.choice(200, size=n, replace=False)).astype(float)
            ps = PointSet([(x,) for x in xs])
            colors = "".join(rng.choice(["R", "B"], size=n))
            if "R" not in colors or "B" not in colors:
                continue
            b = Bicoloring(colors)
            lo, hi = sorted(rng.uniform(-5, 205, size=2))
            ci = CoordInterval(lo, hi)
            if is_balanced(ci, ps, b):
                inside = np.flatnonzero(contained_indices(ci, ps))
                iv = IndexInterval(int(inside[0]), int(inside[-1]))
                assert is_balanced(iv, ps, b)


class TestCertificates:
    def test_lowest_index_rule(self):
        ps = line(4)
        fam = BicoloringFamily(["RBRB"])
        # intervals [0,1] and [2,3] are both balanced; lowest index wins
        ranges = [IndexInterval(2, 3), IndexInterval(0, 1)]
        cert = build_certificate(ps, fam, ranges)
        assert cert == {0: 0}

    def test_certificate_error_lists_all_uncovered(self):
        ps = line(4)
        fam = BicoloringFamily(["RRBB", "RRRB", "RBBB"])
        with pytest.raises(CertificateError) as ei:
            build_certificate(ps, fam, [IndexInterval(2, 3)])
        assert ei.value.uncovered == [0, 2]

    def test_generic_path_matches_interval_path(self):
        ps = line(6)
        fam = BicoloringFamily(["RRBBRB", "BRBRBR", "RBBBBR"])
        ivs = enumerate_candidate_intervals(ps)
        # same ranges as coordinate intervals force the generic path
        cis = [CoordInterval(ps.points[r.lo][0], ps.points[r.hi][0]) for r in ivs]
        assert build_certificate(ps, fam, ivs) == build_certificate(ps, fam, cis)

    def test_gsur_failures_and_verify(self):
        ps = line(4)
        fam = BicoloringFamily(["RRBB", "RBBB"])
        ranges = [IndexInterval(1, 2)]
        assert gsur_failures(ps, fam, ranges) == [1]
        good = GSur(
            [IndexInterval(0, 3), IndexInterval(0, 1)],
            {0: 0, 1: 1},
        )
        assert verify_certificate(ps, fam, good)
        assert not verify_certificate(ps, fam, GSur(good.ranges, {0: 0}))
        assert not verify_certificate(ps, fam, GSur(good.ranges, {0: 0, 1: 5}))
        assert not verify_certificate(ps, fam, GSur(good.ranges, {0: 1, 1: 1}))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_adjacent_pair_always_balanced(self, n):
        ps = line(n)
        adjacent = [IndexInterval(i, i + 1) for i in range(n - 1)]
        for colors in all_colorings(n):
            cert = build_certificate(ps, BicoloringFamily([colors]), adjacent)
            assert 0 in cert
