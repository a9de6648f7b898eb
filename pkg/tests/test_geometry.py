from fractions import Fraction as F

import pytest

from sospart.exact import frac_eval
from sospart.farey import FareyInterval, InvalidInterval, farey_intervals, farey_sequence, mediant
from sospart.geometry import (
    TRAPEZOID,
    TRIANGLE_LEFT,
    TRIANGLE_RIGHT,
    DegenerateN,
    NotInFarey,
    NotSosPermutation,
    area_extremes,
    crossing_coordinates,
    domain_of,
    gap_area_integral,
    interior_point,
    partition,
    refine,
    shoelace_area,
    strip_regions,
    three_area_values,
)
from sospart.sos import SosPerm, count_sos, cyclic_shift, gap_profile, sos_permutation, sos_recurrence

P = SosPerm.parse


def test_worked_example_domain():
    dom = domain_of(P("9 2 7 0 5 3 8 1 6 4"))
    assert (dom.interval.lo, dom.interval.hi) == (F(2, 5), F(3, 7))
    assert (dom.j_bot, dom.j_top) == (4, 2)
    assert dom.area == F(1, 490)
    assert dom.shape == TRIANGLE_RIGHT
    assert shoelace_area(dom.vertices) == F(1, 490)


@pytest.mark.parametrize("n", [1, 2, 5, 9, 14])
def test_identity_domain(n):
    dom = domain_of(SosPerm(tuple(range(n + 1))))
    assert (dom.interval.lo, dom.interval.hi) == (F(0), F(1, n))
    assert (dom.j_bot, dom.j_top) == (0, 1)
    assert dom.area == F(1, 2 * n)
    assert dom.shape == (TRIANGLE_LEFT if n > 1 else dom.shape)


def test_domain_021_against_grid():
    dom = domain_of(P("021"))
    assert (dom.interval.lo, dom.interval.hi) == (F(1, 2), F(1))
    # triangle (1/2, 0), (1, 0), (1/2, 1/2)
    assert (dom.j_bot, dom.j_top, dom.area) == (0, 1, F(1, 8))
    g = 200
    inside = 0
    for i in range(g):
        alpha = F(2 * i + 1, 2 * g)
        for j in range(g):
            beta = F(2 * j + 1, 2 * g)
            if any((k * alpha + beta).denominator == 1 for k in (1, 2)):
                continue
            label = sos_permutation(alpha, beta, 2)
            assert (label == dom.perm) == dom.contains(alpha, beta)
            inside += label == dom.perm
    assert inside / g ** 2 == pytest.approx(1 / 8, abs=0.01)


@pytest.mark.parametrize("text", ["0132", "1023", "10234", "0 2 1 3 4"])
def test_domain_of_rejects_non_sos(text):
    with pytest.raises((NotSosPermutation, ValueError)):
        domain_of(P(text))


def test_non_sos_permutations_rejected_exhaustively():
    from itertools import permutations

    from sospart.sos import enumerate_sos

    for n in (2, 3, 4):
        good = set(enumerate_sos(n))
        for p in permutations(range(n + 1)):
            perm = SosPerm(p)
            if perm in good:
                assert domain_of(perm).perm == perm
            else:
                with pytest.raises(NotSosPermutation):
                    domain_of(perm)


def test_strip_examples():
    areas = [d.area for d in strip_regions(FareyInterval(F(2, 5), F(3, 7), 9), 9)]
    allowed = {F(1, 350), F(1, 490), F(6, 1225)}
    assert set(areas) <= allowed and F(6, 1225) == F(1, 350) + F(1, 490)
    assert sum(areas) == F(1, 35)

    doms = strip_regions(FareyInterval(F(0), F(1, 2), 2), 2)
    assert sorted(d.area for d in doms) == [F(1, 8), F(1, 8), F(1, 4)]
    assert TRAPEZOID not in {d.shape for d in doms}

    doms = strip_regions(FareyInterval(F(0), F(1), 1), 1)
    assert [d.area for d in doms] == [F(1, 2), F(1, 2)]


def test_strip_rejects_invalid():
    with pytest.raises(InvalidInterval):
        strip_regions(FareyInterval(F(2, 5), F(3, 7), 9), 12)


def test_strip_order_top_to_bottom():
    iv = FareyInterval(F(2, 5), F(3, 7), 9)
    doms = strip_regions(iv, 9)
    m = mediant(iv)
    tops = [d.top(m) for d in doms]
    assert tops == sorted(tops, reverse=True)
    assert tops[0] == 1 and doms[-1].bottom(m) == 0
    for upper, lower in zip(doms, doms[1:]):
        assert upper.bottom(m) == lower.top(m)


@pytest.mark.parametrize("n, count", [(1, 2), (2, 6), (3, 16), (4, 30)])
def test_partition_counts(n, count):
    part = partition(n)
    assert len(part) == count == count_sos(n)
    assert part.total_area == 1


def test_partition_labels_match_figures():
    labels_n2 = {"012", "201", "120", "210", "102", "021"}
    labels_n3 = {"0123", "3012", "2301", "1230", "0312", "2031", "1203", "3120", "0213", "3021",
            "1302", "2130", "0321", "1032", "2103", "3210"}
    assert {str(d.perm) for d in partition(2)} == labels_n2
    assert {str(d.perm) for d in partition(3)} == labels_n3


@pytest.mark.parametrize("n", range(1, 26))
def test_partition_invariants(n):
    part = partition(n)
    assert len(part) == count_sos(n)
    assert part.total_area == 1
    for iv, doms in part.strips():
        values = three_area_values(iv)
        assert sum(d.area for d in doms) == iv.width
        assert len(doms) == n + 1
        shapes = {d.shape for d in doms}
        assert (TRAPEZOID in shapes) == (n + 1 < iv.b + iv.d)
        for dom in doms:
            assert shoelace_area(dom.vertices) == dom.area
            assert dom.area == values[dom.shape]
        distinct = sorted({d.area for d in doms})
        assert len(distinct) <= 3
        if len(distinct) == 3:
            assert distinct[2] == distinct[0] + distinct[1]


@pytest.mark.parametrize("n", range(1, 13))
def test_membership_soundness(n):
    for dom in partition(n):
        x, y = interior_point(dom)
        assert sos_permutation(x, y, n) == dom.perm
        # bottom edge belongs to the domain, top edge does not
        assert sos_permutation(x, dom.bottom(x), n) == dom.perm
        assert dom.contains(x, dom.bottom(x))
        assert sos_permutation(x, dom.top(x) % 1, n) != dom.perm
        assert not dom.contains(x, dom.top(x))


@pytest.mark.parametrize("n", range(1, 10))
def test_beta_ranges_tile_each_vertical(n):
    for iv, doms in partition(n).strips():
        for t in (F(1, 3), F(1, 2), F(7, 9)):
            x = iv.lo + iv.width * t
            spans = sorted(d.beta_range_at(x) for d in doms)
            assert spans[0][0] == 0 and spans[-1][1] == 1
            for (_, hi), (lo, _) in zip(spans, spans[1:]):
                assert hi == lo


def test_refine_examples():
    assert {str(p) for p in refine(P("120"))} == {"1230", "1203", "3120"}
    assert {str(p) for p in refine(P("201"))} == {"2301", "2031"}
    assert {str(p) for p in refine(P("3120"))} == {"31420"}


@pytest.mark.parametrize("n", range(1, 13))
def test_refinement_partitions_every_domain(n):
    children_seen = []
    for dom in partition(n):
        kids = refine(dom.perm)
        assert 1 <= len(kids) <= 3
        assert sum(domain_of(k).area for k in kids) == dom.area
        children_seen.extend(kids)
    # every domain at n + 1 sits inside exactly one parent
    assert sorted(children_seen, key=lambda p: p.entries) == sorted(
        (d.perm for d in partition(n + 1)), key=lambda p: p.entries)


def test_refine_rejects_non_sos():
    with pytest.raises(NotSosPermutation):
        refine(P("0132"))


@pytest.mark.parametrize("x, n, expected", [
    (F(3, 7), 7, [F(k, 7) for k in range(1, 8)]),
    (F(0), 5, [F(1)]),
    (F(1, 2), 3, [F(1, 2), F(1)]),
])
def test_crossing_coordinates(x, n, expected):
    assert crossing_coordinates(x, n) == expected


@pytest.mark.parametrize("n", range(1, 16))
def test_crossings_are_multiples_of_one_over_b(n):
    for x in farey_sequence(n)[:-1]:
        b = x.denominator
        assert crossing_coordinates(x, n) == [F(k, b) for k in range(1, b + 1)]


def test_crossing_coordinates_rejects():
    with pytest.raises(NotInFarey):
        crossing_coordinates(F(5, 12), 9)


def _gap_line(iv, n, k):
    """Fit the k-th gap (beta = 0) through two interior sample points."""
    x0 = iv.lo + iv.width / 3
    x1 = iv.lo + 2 * iv.width / 3
    g0 = gap_profile(x0, 0, n).gaps[k]
    g1 = gap_profile(x1, 0, n).gaps[k]
    slope = (g1 - g0) / (x1 - x0)
    return slope, g0 - slope * x0


def _integral(slope, intercept, lo, hi):
    # Simpson's rule, exact for linear integrands
    f = lambda x: slope * x + intercept  # noqa: E731
    return (hi - lo) / 6 * (f(lo) + 4 * f((lo + hi) / 2) + f(hi))


def test_gap_integral_examples():
    iv = FareyInterval(F(2, 5), F(3, 7), 9)
    assert gap_area_integral(iv, 9, 0) == F(1, 490) == _integral(5, -2, iv.lo, iv.hi)
    assert gap_area_integral(iv, 9, 9) == F(1, 350) == _integral(-7, 3, iv.lo, iv.hi)
    assert sum(gap_area_integral(iv, 9, k) for k in range(10)) == iv.width


@pytest.mark.parametrize("n", range(1, 13))
def test_gap_integral_matches_sampled_gaps_and_areas(n):
    for iv in farey_intervals(n):
        doms = strip_regions(iv, n)
        base = sos_recurrence(iv, n)
        for k in range(n + 1):
            value = gap_area_integral(iv, n, k)
            assert value == _integral(*_gap_line(iv, n, k), iv.lo, iv.hi)
            assert doms[k].perm == cyclic_shift(base, n - k)
            assert value == doms[k].area


def test_gap_integral_bad_index():
    with pytest.raises(ValueError):
        gap_area_integral(FareyInterval(F(0), F(1), 1), 1, 2)


def _extreme_sets(n):
    mid = list(range(1, n))
    return (
        {SosPerm(tuple([0, n] + mid)), SosPerm(tuple(mid[::-1] + [n, 0])),
         SosPerm(tuple(mid + [0, n])), SosPerm(tuple([n, 0] + mid[::-1]))},
        {SosPerm(tuple(range(n + 1))), SosPerm(tuple(range(n, -1, -1)))},
    )


def test_area_extremes_seven():
    lo, lo_set, hi, hi_set = area_extremes(7)
    assert lo == F(1, 588) and hi == F(1, 14)
    assert P("07123456") in lo_set
    assert {str(p) for p in hi_set} == {"01234567", "76543210"}
    assert (lo_set, hi_set) == _extreme_sets(7)


@pytest.mark.parametrize("n, lo, hi", [(2, F(1, 8), F(1, 4)), (3, F(1, 36), F(1, 6))])
def test_area_extremes_small(n, lo, hi):
    got = area_extremes(n)
    assert (got[0], got[2]) == (lo, hi)
    assert got[0] == F(1, 2 * n * n * (n - 1))


def test_area_extremes_degenerate():
    with pytest.raises(DegenerateN):
        area_extremes(1)


def test_vertices_inside_unit_square():
    for n in range(1, 16):
        for dom in partition(n):
            for x, y in dom.vertices:
                assert dom.interval.lo <= x <= dom.interval.hi
                assert 0 <= y <= 1
                assert dom.bottom(x) <= y <= dom.top(x)


def test_floor_lemma_matches_top_line():
    # beta-bands from the sorted values at beta = 0 reproduce the bounding lines
    for n in (4, 7, 10):
        for iv in farey_intervals(n):
            x = mediant(iv)
            for dom in strip_regions(iv, n):
                assert dom.top(x) == 1 - frac_eval(x, 0, dom.perm[-1])
                if dom.perm[0] != 0:
                    assert dom.bottom(x) == 1 - frac_eval(x, 0, dom.perm[0])
