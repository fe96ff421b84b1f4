import pytest
from hypothesis import given, strategies as st

from triparts.cranks import (
    AffineMap2,
    RectanglePlan,
    arrangement_2m_minus_2,
    build_arrangement,
    c_ls,
    c_ls_histogram,
    case_labels,
    cycle_decomposition,
    cycle_lengths,
    ehrhart_crank,
    ehrhart_crank_closed_form,
    histogram,
    is_uniform,
    normalize_case_label,
    permutation_cycles,
    plan_crank,
    rectangle_cycle_step,
    row_permutation,
    step_deltas,
    step_f,
    vertex_crank_values,
)
from triparts.congruence import is_divisible, non_witnessed_residues, residues_pos
from triparts.ehrhart import box_compose
from triparts.partitions import enumerate_partitions

# ---------------------------------------------------------------------------
# c_ls and histograms


def test_c_ls_pins():
    assert c_ls((17, 3, 2), 5) == 0
    assert c_ls((7, 1, 1), 7) == 6
    for m in (2, 3, 5, 7, 11):
        assert c_ls((3, 3, 3), m) == 0


def test_histogram_pins():
    assert histogram(8, 5, c_ls).counts == (1, 1, 1, 1, 1)
    assert histogram(9, 7, c_ls).counts == (1, 0, 1, 2, 1, 1, 1)
    assert histogram(22, 5, c_ls).counts == (8, 8, 8, 8, 8)


def test_histogram_totals():
    for n in (8, 9, 22, 40):
        h = histogram(n, 5, c_ls)
        assert sum(h.counts) == len(enumerate_partitions(n))


def test_fast_histogram_matches_enumeration():
    for m in (5, 7, 11):
        for n in range(0, 250):
            assert c_ls_histogram(n, m) == histogram(n, m, c_ls)


def test_uniformity_tracks_divisibility():
    for m in (5, 11):
        for n in range(3, 400):
            uniform = is_uniform(c_ls_histogram(n, m))
            assert uniform == is_divisible(n, m), (n, m)


def test_plus_family_witness_profile():
    # c_ls splits evenly on most divisible classes mod 42, but provably
    # not on the two exceptional ones
    ch = residues_pos(7)
    skip = non_witnessed_residues(7)
    for n in range(3, 1000):
        if n % 42 not in ch.residues:
            continue
        uniform = is_uniform(c_ls_histogram(n, 7))
        if n % 42 in skip:
            continue  # no claim either way on the exceptional classes
        assert uniform, n
    assert not is_uniform(c_ls_histogram(9, 7))
    assert not is_uniform(c_ls_histogram(33, 7))


# ---------------------------------------------------------------------------
# vertex values and deltas


def test_vertex_values_minus5_0_5():
    # raw corner values -5, 0, 5 reduce to (0,0,0) mod 5 and (6,0,5) mod 11
    for kprime in range(3):
        k = 5 * kprime + 1
        assert vertex_crank_values((6, 1, 1), k - 1, 5) == (0, 0, 0)
        k = 11 * kprime + 3
        assert vertex_crank_values((6, 1, 1), k - 1, 11) == (6, 0, 5)
    assert vertex_crank_values((1, 1, 1), 0, 7) == (0, 0, 0)


def test_step_deltas_constants():
    assert step_deltas() == {"L->R": -3, "L->T": -6, "R->T": -3}


# ---------------------------------------------------------------------------
# the dedicated 2m-2 arrangement


def test_arrangement_kprime0_placements():
    plan = arrangement_2m_minus_2(5)
    assert plan.dims(0) == (5, 1)
    cells = plan.cells(0)
    order = [cells[(x, 0)][0] for x in range(5)]
    assert order == [(6, 1, 1), (4, 2, 2), (5, 2, 1), (3, 3, 2), (4, 3, 1)]
    # the height-14 remainder rides the empty triangle T_{-1} at k'=0
    assert all(mu != (8, 4, 2) for mu, _ in cells.values())


def test_arrangement_kprime1_cover():
    plan = arrangement_2m_minus_2(5)
    assert plan.dims(1) == (20, 6)
    rep = plan.verify_cover(1)
    assert rep.ok, rep.detail
    assert rep.cells == 120  # = p(38,3)
    assert len(enumerate_partitions(38)) == 120


def test_arrangement_rejects_bad_modulus():
    for bad in (7, 9, 35, 4):
        with pytest.raises(ValueError):
            arrangement_2m_minus_2(bad)


def test_ehrhart_crank_pins():
    plan = arrangement_2m_minus_2(5)
    assert ehrhart_crank(plan, (6, 1, 1)) == 0
    assert ehrhart_crank(plan, (4, 2, 2)) == 1
    assert ehrhart_crank(plan, (4, 3, 1)) == 4


def test_ehrhart_crank_rejects_foreign_remainder():
    plan = arrangement_2m_minus_2(5)
    with pytest.raises(ValueError):
        ehrhart_crank(plan, (3, 1, 1))


def test_ehrhart_crank_uniform_small():
    plan = arrangement_2m_minus_2(5)
    for kprime in range(3):
        n = plan.n_for(kprime)
        assert is_uniform(histogram(n, 5, plan_crank(plan)))


def test_closed_form_pins():
    assert ehrhart_crank_closed_form((6, 1, 1), 5) == 0
    assert ehrhart_crank_closed_form((4, 2, 2), 5) == 1
    plan = arrangement_2m_minus_2(5)
    assert ehrhart_crank_closed_form((13, 4, 3), 5) == ehrhart_crank(plan, (13, 4, 3))


def test_closed_form_pointwise_n20():
    plan = arrangement_2m_minus_2(5)
    for lam in enumerate_partitions(20):
        assert ehrhart_crank_closed_form(lam, 5) == ehrhart_crank(plan, lam)


def test_closed_form_rejects_off_progression():
    with pytest.raises(ValueError):
        ehrhart_crank_closed_form((3, 3, 3), 5)
    with pytest.raises(ValueError):
        ehrhart_crank_closed_form((5, 2, 2), 5)


def test_rectangle_walk_kprime0():
    plan = arrangement_2m_minus_2(5)
    walk = [(6, 1, 1)]
    for _ in range(5):
        walk.append(rectangle_cycle_step(plan, walk[-1]))
    assert walk == [
        (6, 1, 1), (4, 2, 2), (5, 2, 1), (3, 3, 2), (4, 3, 1), (6, 1, 1),
    ]


def test_rectangle_rows_decrease_c_ls_by_3():
    plan = arrangement_2m_minus_2(5)
    for start in ((6, 1, 1), (20, 11, 7), (17, 14, 7)):
        cur = start
        for _ in range(plan.dims(plan.kprime_for(sum(start)))[0]):
            nxt = rectangle_cycle_step(plan, cur)
            assert (c_ls(nxt, 5) - c_ls(cur, 5)) % 5 == (-3) % 5
            cur = nxt
        assert cur == start  # row cycle length = ell1(k')


def test_row_cycle_length_20_at_kprime1():
    plan = arrangement_2m_minus_2(5)
    start = (36, 1, 1)
    cur = rectangle_cycle_step(plan, start)
    length = 1
    while cur != start:
        cur = rectangle_cycle_step(plan, cur)
        length += 1
    assert length == 20


# ---------------------------------------------------------------------------
# generic arrangements


def test_case_labels():
    assert set(case_labels()) == {
        "0", "1", "2", "-1", "-2", "2m-2", "2m+1", "-(2m-2)", "-(2m+1)",
    }


def test_normalize_case_label():
    assert normalize_case_label("2m-2") == "2m-2"
    assert normalize_case_label(8, 5) == "2m-2"
    assert normalize_case_label(11, 5) == "2m+1"
    assert normalize_case_label(-8, 5) == "-(2m-2)"
    assert normalize_case_label(0, 5) == "0"
    with pytest.raises(ValueError):
        normalize_case_label(3, 5)
    with pytest.raises(ValueError):
        normalize_case_label(8)  # numeric needs m
    with pytest.raises(ValueError):
        normalize_case_label("fifth")


def test_build_matches_table_dimensions():
    # ell1 = 3mk', ell2 = mk' for the 0 row; 3mk'-1 x mk' for the -1 row
    plan0 = build_arrangement("0", 5)
    plan1 = build_arrangement("-1", 5)
    for kprime in range(4):
        assert plan0.dims(kprime) == (15 * kprime, 5 * kprime)
        assert plan1.dims(kprime) == (max(0, 15 * kprime - 1), 5 * kprime)
    # numeric r' resolves to the same case as the dedicated constructor
    generic = build_arrangement(8, 5)
    dedicated = arrangement_2m_minus_2(5)
    for kprime in range(4):
        assert generic.dims(kprime) == dedicated.dims(kprime)


def test_build_all_cases_cover_and_uniform():
    for label in case_labels():
        plan = build_arrangement(label, 5)
        for kprime in range(3):
            rep = plan.verify_cover(kprime)
            assert rep.ok, (label, kprime, rep.detail)
            n = plan.n_for(kprime)
            if n >= 3:
                h = histogram(n, 5, plan_crank(plan))
                assert is_uniform(h), (label, n, h)
                assert sum(h.counts) == len(enumerate_partitions(n))


def test_build_rejects_bad_modulus():
    with pytest.raises(ValueError):
        build_arrangement("0", 7)


# ---------------------------------------------------------------------------
# plan plumbing


def test_affine_map_validation():
    with pytest.raises(ValueError):
        AffineMap2(((1, 1, 1), (0, 0, 0)), (0, 0))  # constant on triangles
    with pytest.raises(ValueError):
        AffineMap2(((1, 0), (0, 1)), (0, 0))  # wrong shape
    mp = AffineMap2(((1, 0, 0), (0, 1, 0)), (3, 4))
    assert mp.apply((2, 5, 1)) == (5, 9)
    assert mp == AffineMap2(((1, 0, 0), (0, 1, 0)), (3, 4))


def test_plan_constructor_validation():
    mp = AffineMap2(((1, 1, 2), (1, 0, 0)), (0, 0))
    with pytest.raises(ValueError):
        RectanglePlan("2m-2", 8, 7, (21, 7), (7, 1), 1,
                      [((6, 1, 1), 1, mp)], (1, 0, 0), (1, 0))
    with pytest.raises(ValueError):
        RectanglePlan("2m-2", 8, 5, (15, 5), (5, 1), 1,
                      [((6, 1, 1), 1, mp), ((6, 1, 1), 1, mp)],
                      (1, 0, 0), (1, 0))
    with pytest.raises(ValueError):
        RectanglePlan("2m-2", 8, 5, (15, 5), (5, 1), 1,
                      [((6, 1, 1), 1, mp)], (1, 0, 0), (1, 1))


def test_kprime_for_rejects_off_progression():
    plan = arrangement_2m_minus_2(5)
    assert plan.kprime_for(8) == 0
    assert plan.kprime_for(38) == 1
    with pytest.raises(ValueError):
        plan.kprime_for(20)


# ---------------------------------------------------------------------------
# the cycling permutation


def test_step_f_pins():
    assert step_f((18, 3, 1), 5) == (19, 2, 1)
    assert step_f((20, 1, 1), 5) == (11, 10, 1)
    assert step_f((12, 5, 5), 5) == (10, 10, 2)


def test_step_f_rejects_non_qualifying():
    with pytest.raises(ValueError):
        step_f((10, 2, 2), 5)  # 14 mod 30 is not a divisible class


def test_cycle_decomposition_22_5():
    dec = cycle_decomposition(22, 5)
    assert cycle_lengths(dec) == [10, 10, 20]
    assert sum(len(c) for c in dec.cycles) == 40
    # cyclic consistency and constant crank shift +1
    for cyc in dec.cycles:
        for i, lam in enumerate(cyc):
            nxt = cyc[(i + 1) % len(cyc)]
            assert step_f(lam, 5) == nxt
            assert (c_ls(nxt, 5) - c_ls(lam, 5)) % 5 == 1


def test_row_permutation_22_5():
    assert permutation_cycles(row_permutation(22, 5)) == [
        (1,), (2, 3, 5), (4, 7, 6),
    ]


def test_single_cycle_at_8():
    dec = cycle_decomposition(8, 5)
    assert cycle_lengths(dec) == [5]
    assert set(dec.cycles[0]) == set(enumerate_partitions(8))


@given(st.sampled_from([(n, m) for m in (5, 11) for n in range(3, 200)
                        if is_divisible(n, m)]))
def test_step_f_bijection_small(nm):
    n, m = nm
    parts = enumerate_partitions(n)
    images = [step_f(lam, m) for lam in parts]
    assert sorted(images) == sorted(parts)
    for lam, img in zip(parts, images):
        assert (c_ls(img, m) - c_ls(lam, m)) % m == 1


def test_cycle_lengths_divisible_by_m():
    for m in (5, 11):
        for n in range(3, 140):
            if not is_divisible(n, m):
                continue
            for length in cycle_lengths(cycle_decomposition(n, m)):
                assert length % m == 0, (n, m, length)
