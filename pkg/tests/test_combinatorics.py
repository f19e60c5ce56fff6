import itertools

import pytest

from schurcut.combinatorics import (
    CutWindow,
    admits_col_cut,
    admits_row_cut,
    canonical,
    classical_kostka,
    col_cut,
    conjugate,
    dominates,
    entry_counts,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_sstd,
    enumerate_std,
    gamma_compositions,
    gamma_set,
    is_semistandard,
    lambda_compositions,
    lambda_set,
    row_cut,
    row_filled_tableau,
    sigma_compositions,
    sigma_gamma,
    sigma_set,
    split_partition_pair,
    split_tableau,
    superstandard_tableau,
    tableau_shape,
    tableau_weight,
    weight_class,
    weight_class_orbit,
)


def conjugate_by_column_count(lam):
    """Independent oracle: count boxes per column of the Young diagram."""
    cols = []
    j = 0
    while any(p > j for p in lam):
        cols.append(sum(1 for p in lam if p > j))
        j += 1
    return tuple(cols)


class TestConjugate:
    def test_known_values(self):
        assert conjugate((3, 2)) == (2, 2, 1)
        assert conjugate((5,)) == (1, 1, 1, 1, 1)
        assert conjugate((5, 2, 2, 1)) == conjugate_by_column_count((5, 2, 2, 1))

    def test_involution_small(self):
        for n in range(13):
            for lam in enumerate_partitions(n, n):
                assert conjugate(conjugate(lam)) == lam


class TestDominance:
    def test_known_values(self):
        assert dominates((5, 2, 2, 1), (4, 3, 2, 1))
        assert dominates((3, 1), (3, 1))
        assert not dominates((2, 2), (3, 1))

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            dominates((2,), (1,))

    @pytest.mark.parametrize("n,d", [(6, 6), (8, 4), (7, 3)])
    def test_partial_order(self, n, d):
        parts = enumerate_partitions(n, d)
        for lam in parts:
            assert dominates(lam, lam)
        for lam, mu in itertools.permutations(parts, 2):
            if dominates(lam, mu) and dominates(mu, lam):
                assert lam == mu
        for lam, mu, nu in itertools.product(parts, repeat=3):
            if dominates(lam, mu) and dominates(mu, nu):
                assert dominates(lam, nu)

    def test_composition_dominance_via_sorting(self):
        assert dominates((1, 3), (2, 2))
        assert not dominates((1, 2, 1), (3, 1))


class TestEnumeration:
    def test_compositions_4_2(self):
        assert set(enumerate_compositions(4, 2)) == {
            (2, 2),
            (3, 1),
            (1, 3),
            (4, 0),
            (0, 4),
        }

    def test_empty_partition(self):
        assert enumerate_partitions(0, 3) == ((),)

    def test_count_partitions_4_2(self):
        assert len(enumerate_partitions(4, 2)) == 3

    @pytest.mark.parametrize("n,d", [(5, 3), (6, 4), (7, 2)])
    def test_order_refines_dominance(self, n, d):
        parts = enumerate_partitions(n, d)
        index = {lam: i for i, lam in enumerate(parts)}
        for lam, mu in itertools.permutations(parts, 2):
            if dominates(lam, mu):
                assert index[lam] <= index[mu]

    def test_no_duplicates(self):
        comps = enumerate_compositions(6, 3)
        assert len(comps) == len(set(comps))
        assert all(sum(c) == 6 and len(c) == 3 for c in comps)


class TestCuts:
    def test_row_cut_values(self):
        assert row_cut((7, 5, 3, 3, 2, 1), 3) == ((7, 5, 3), (3, 2, 1))
        lam = (4, 2, 1)
        assert row_cut(lam, 6) == (lam, ())

    def test_col_cut_oracle(self):
        # independent route: conjugate, slice, conjugate back
        for lam in enumerate_partitions(7, 4):
            for c in range(8):
                conj = conjugate(lam)
                left = conjugate(conj[:c])
                right = conjugate(conj[c:])
                assert col_cut(lam, c) == (left, right)
        assert col_cut((3, 2), 1) == ((1, 1), (2, 1))

    def test_admits(self):
        assert admits_row_cut((7, 5, 3, 3, 2, 1), (5, 5, 5, 2, 2, 2), 3)
        assert admits_row_cut((5, 2, 2, 1), (5, 2, 2, 1), 2)
        assert admits_row_cut((5, 2, 2, 1), (4, 3, 2, 1), 2)
        assert admits_col_cut((3, 2), (3, 2), 1)
        assert not admits_col_cut((4, 1), (3, 2), 2)


class TestWindows:
    def test_two_element_window(self):
        got = lambda_set(10, 4, CutWindow(2, 2, 7))
        assert set(got) == {(5, 2, 2, 1), (4, 3, 2, 1)}

    def test_six_element_window(self):
        got = lambda_set(11, 5, CutWindow(3, 2, 9))
        expected = {
            (5, 2, 2, 2),
            (4, 3, 2, 2),
            (3, 3, 3, 2),
            (5, 2, 2, 1, 1),
            (4, 3, 2, 1, 1),
            (3, 3, 3, 1, 1),
        }
        assert set(got) == expected

    def test_vacuous_window(self):
        for n, d in [(4, 2), (5, 3)]:
            assert lambda_set(n, d, CutWindow(0, n, 0)) == list(
                enumerate_partitions(n, d)
            )

    def test_sigma_gamma_examples(self):
        assert sigma_gamma(10, 4, CutWindow(2, 2, 7)) == (
            (5, 2, 2, 1),
            (4, 3, 2, 1),
        )
        assert sigma_gamma(11, 5, CutWindow(3, 2, 9)) == (
            (5, 2, 2, 2),
            (3, 3, 3, 1, 1),
        )

    def test_singleton_window(self):
        sigma, gamma = sigma_gamma(5, 3, CutWindow(1, 2, 2))
        assert sigma == gamma == (2, 2, 1)

    def test_empty_window_is_error(self):
        with pytest.raises(ValueError):
            sigma_gamma(5, 2, CutWindow(1, 5, 1))

    @pytest.mark.parametrize("n,d", [(6, 3), (7, 4), (8, 3)])
    def test_formula_against_enumeration_everywhere(self, n, d):
        # sigma_gamma itself validates against enumeration and raises on
        # mismatch; sweeping all windows exercises that validation.
        for r in range(0, d + 1):
            for c in range(0, n + 1):
                for m in range(0, n + 1):
                    w = CutWindow(r, c, m)
                    if lambda_set(n, d, w):
                        sigma_gamma(n, d, w)

    @pytest.mark.parametrize(
        "n,d,w",
        [
            (10, 4, CutWindow(2, 2, 7)),
            (11, 5, CutWindow(3, 2, 9)),
            (8, 3, CutWindow(1, 3, 3)),
        ],
    )
    def test_saturation_and_intersection(self, n, d, w):
        sat = sigma_set(n, d, w)
        cosat = gamma_set(n, d, w)
        all_parts = enumerate_partitions(n, d)
        # saturated: downward closed; co-saturated: upward closed
        for mu in sat:
            for nu in all_parts:
                if dominates(mu, nu):
                    assert nu in sat
        for mu in cosat:
            for nu in all_parts:
                if dominates(nu, mu):
                    assert nu in cosat
        _, gamma = sigma_gamma(n, d, w)
        assert gamma in cosat
        assert set(sat) & set(cosat) == set(lambda_set(n, d, w))

    def test_composition_sets_cover_window_compositions(self):
        n, d, w = 6, 3, CutWindow(1, 2, 3)
        sig = sigma_compositions(n, d, w)
        gam = gamma_compositions(n, d, w)
        for mu in lambda_compositions(n, d, w):
            assert mu in sig and mu in gam

    def test_split_partition_pair(self):
        w = CutWindow(2, 2, 7)
        top, bottom = split_partition_pair((5, 2, 2, 1), (4, 3, 2, 1), w)
        assert top == ((5, 2), (4, 3))
        assert bottom == ((2, 1), (2, 1))
        same = split_partition_pair((5, 2, 2, 1), (5, 2, 2, 1), w)
        assert same == (((5, 2), (5, 2)), ((2, 1), (2, 1)))

    def test_split_membership_failure(self):
        with pytest.raises(ValueError):
            split_partition_pair((6, 2, 1, 1), (4, 3, 2, 1), CutWindow(2, 2, 7))

    @pytest.mark.parametrize("n,d", [(6, 3), (8, 4)])
    def test_dominance_splits_across_cut(self, n, d):
        for r in range(1, d):
            for c in range(0, n + 1):
                for m in range(0, n + 1):
                    w = CutWindow(r, c, m)
                    members = lambda_set(n, d, w)
                    for lam, mu in itertools.product(members, repeat=2):
                        (lt, mt), (lb, mb) = split_partition_pair(lam, mu, w)
                        assert dominates(lam, mu) == (
                            dominates(lt, mt) and dominates(lb, mb)
                        )


class TestTableaux:
    def test_superstandard(self):
        assert superstandard_tableau((3, 2)) == ((1, 1, 1), (2, 2))
        assert row_filled_tableau((3, 2)) == ((1, 2, 3), (4, 5))

    def test_weight_and_shape(self):
        t = ((1, 1, 3), (2, 2))
        assert tableau_shape(t) == (3, 2)
        assert tableau_weight(t) == (2, 2, 1)
        assert tableau_weight(t, 4) == (2, 2, 1, 0)

    def test_sstd_weight_22(self):
        assert enumerate_sstd((2, 2), (2, 2)) == (((1, 1), (2, 2)),)
        assert classical_kostka((3, 1), (2, 2)) == 1
        assert enumerate_sstd((3, 1), (2, 2)) == (((1, 1, 2), (2,)),)
        assert classical_kostka((4,), (2, 2)) == 1

    def test_unique_sstd_of_own_weight(self):
        for n in range(1, 8):
            for lam in enumerate_partitions(n, 4):
                assert enumerate_sstd(lam, lam) == (superstandard_tableau(lam),)

    def test_semistandard_predicate(self):
        assert is_semistandard(((1, 1, 2), (2, 3)))
        assert not is_semistandard(((1, 2), (1, 3)))  # column repeats
        assert not is_semistandard(((2, 1),))  # row decreases

    def test_entry_counts_example(self):
        S = ((1, 1, 3), (2, 2, 4))
        counts = entry_counts(S, 4)
        assert counts[1][3] == 1  # letter 4 in row 2
        assert counts[1][1] == 2  # letter 2 in row 2
        assert counts[0][2] == 1  # letter 3 in row 1
        assert counts[0][0] == 2  # letter 1 in row 1
        assert sum(counts[i][j] for i in range(4) for j in range(4)) == 6
        T = ((1, 1, 2), (3, 3, 4))
        tc = entry_counts(T, 4)
        assert tc[0][1] == 1 and tc[1][2] == 2 and tc[1][3] == 1

    def test_entry_counts_upper_triangular(self):
        for lam in enumerate_partitions(5, 3):
            for mu in enumerate_compositions(5, 3):
                for t in enumerate_sstd(lam, mu):
                    counts = entry_counts(t, 3)
                    for i in range(3):
                        for j in range(i):
                            assert counts[i][j] == 0
                    for j in range(3):
                        assert sum(counts[i][j] for i in range(3)) == mu[j]

    def test_entry_counts_rejects_bad_tableau(self):
        with pytest.raises(ValueError):
            entry_counts(((2, 1),), 2)

    def test_superstandard_counts_diagonal(self):
        lam = (3, 2, 1)
        counts = entry_counts(superstandard_tableau(lam), 3)
        for i in range(3):
            for j in range(3):
                assert counts[i][j] == (lam[i] if i == j else 0)


class TestWeightClasses:
    def test_orbits_shape_22(self):
        # column-reading standard tableau of shape (2,2)
        s1 = ((1, 2), (3, 4))
        assert weight_class(s1, (2, 2)) == ((1, 1), (2, 2))
        assert weight_class_orbit(((1, 1), (2, 2)), (2, 2)) == (s1,)

    def test_orbit_shape_31_has_two_members(self):
        T = ((1, 1, 2), (2,))
        orb = weight_class_orbit(T, (2, 2))
        assert len(orb) == 2
        assert set(orb) == {((1, 2, 3), (4,)), ((1, 2, 4), (3,))}

    def test_identity_weight_is_bijective(self):
        for lam in enumerate_partitions(5, 5):
            omega = (1,) * 5
            images = [weight_class(t, omega) for t in enumerate_std(lam)]
            assert all(img is not None for img in images)
            assert len(set(images)) == len(images)
            assert set(images) == set(enumerate_sstd(lam, omega))

    def test_non_semistandard_relabelling_is_none(self):
        # entries 1,2 share a column but land in the same row class
        t = ((1, 3), (2, 4))
        assert weight_class(t, (2, 2)) == ((1, 2), (1, 2)) or weight_class(
            t, (2, 2)
        ) is None


class TestSplitTableau:
    FIGURE = (
        (1, 1, 1, 1, 1, 2, 3),
        (2, 2, 2, 2, 3),
        (3, 3, 3),
        (4, 4, 5),
        (5, 6),
        (6,),
    )

    def test_figure_split(self):
        top, bottom = split_tableau(self.FIGURE, 3, 15)
        assert top == ((1, 1, 1, 1, 1, 2, 3), (2, 2, 2, 2, 3), (3, 3, 3))
        assert bottom == ((1, 1, 2), (2, 3), (3,))

    def test_superstandard_splits_superstandardly(self):
        lam = (4, 3, 2, 1)
        top, bottom = split_tableau(superstandard_tableau(lam), 2, 7)
        assert top == superstandard_tableau((4, 3))
        assert bottom == superstandard_tableau((2, 1))

    def test_standard_split_shifts_by_box_count(self):
        t = row_filled_tableau((3, 2, 1))
        top, bottom = split_tableau(t, 1, 3)
        assert top == ((1, 2, 3),)
        assert bottom == ((1, 2), (3,))

    def test_split_counts_multiply(self):
        lam, mu, r = (5, 2, 2, 1), (4, 3, 2, 1), 2
        lt, lb = row_cut(lam, r)
        mt, mb = row_cut(mu, r)
        lhs = classical_kostka(lam, mu)
        rhs = classical_kostka(lt, mt) * classical_kostka(lb, mb)
        assert lhs == rhs

    @pytest.mark.parametrize("n,d", [(6, 3), (8, 4)])
    def test_split_bijection_on_windows(self, n, d):
        for r in range(1, d):
            for c in range(0, n + 1):
                for m in range(0, n + 1):
                    w = CutWindow(r, c, m)
                    members = lambda_set(n, d, w)
                    for lam, mu in itertools.product(members, repeat=2):
                        tabs = enumerate_sstd(lam, mu)
                        split = [split_tableau(S, r, m) for S in tabs]
                        assert len(set(split)) == len(split)
                        lt, lb = row_cut(lam, r)
                        mt, mb = row_cut(mu, r)
                        expected = set(
                            itertools.product(
                                enumerate_sstd(lt, mt), enumerate_sstd(lb, mb)
                            )
                        )
                        assert set(split) == expected
