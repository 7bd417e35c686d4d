import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle import all_partitions, euler_p
from theta_forge.errors import ContradictoryConstraint, NotSubMultiset, ParameterDomain
from theta_forge.partitions import (
    UNRESTRICTED,
    Constraint,
    Partition,
    count,
    counts,
    diff,
    durfee_height,
    enumerate_partitions,
    iter_partitions,
    mex,
    mex_mod,
    modular_rows,
    pm_class,
    slice_parts,
    slice_pm,
    staircase,
    statistics,
    union,
)
from theta_forge.qseries import inverse, poch, pochhammer_product

DISTINCT = Constraint(distinct=True)
ODD = Constraint(modulus=2, residues={1})

partitions = st.lists(st.integers(1, 20), max_size=10).map(Partition)


class TestEnumeration:
    """Constrained enumeration and counting."""

    def test_distinct_five(self):
        got = enumerate_partitions(5, DISTINCT)
        assert sorted(got) == sorted([Partition([5]), Partition([4, 1]), Partition([3, 2])])
        assert count(5, DISTINCT) == 3

    def test_zero(self):
        assert enumerate_partitions(0, DISTINCT) == [Partition([])]
        assert count(0, Constraint(forbidden_divisor=7)) == 1

    def test_regular(self):
        assert count(5, Constraint(forbidden_divisor=3)) == 5
        assert count(4, Constraint(forbidden_divisor=3)) == 4
        assert count(6, Constraint(distinct=True, forbidden_divisor=5)) == 3

    def test_residues(self):
        assert count(5, Constraint(modulus=3, residues={1, 2})) == 5

    def test_complete_and_duplicate_free(self):
        p = euler_p(40)
        for n in range(41):
            got = list(iter_partitions(n))
            assert len(got) == len(set(got)) == p[n]

    def test_matches_naive(self):
        for n in range(16):
            assert set(iter_partitions(n)) == {Partition(x) for x in all_partitions(n)}

    def test_unrestricted_count_matches_series(self):
        p = inverse(pochhammer_product([poch(1, 1)], 60))
        assert counts(60, UNRESTRICTED) == list(p.coeffs)

    @pytest.mark.parametrize("R", range(2, 9))
    def test_pm_class_counts_match_products(self, R):
        for S in range(1, R):
            divide = [poch(S, R)] if 2 * S == R else [poch(S, R), poch(R - S, R)]
            series = pochhammer_product([], 60, divide=divide)
            assert counts(60, pm_class(S, R)) == list(series.coeffs)

    def test_euler_distinct_equals_odd(self):
        assert counts(60, DISTINCT) == counts(60, ODD)

    def test_odd_series(self):
        series = pochhammer_product([], 60, divide=[poch(1, 4), poch(3, 4)])
        assert list(series.coeffs) == counts(60, DISTINCT)

    @given(
        st.integers(0, 18),
        st.booleans(),
        st.integers(1, 4),
        st.lists(st.integers(1, 6), max_size=2),
        st.lists(st.tuples(st.integers(1, 6), st.integers(0, 2)), max_size=2),
    )
    def test_enumeration_respects_constraint(self, n, distinct, modulus, required, caps):
        caps = dict(caps)
        try:
            c = Constraint(
                distinct=distinct,
                modulus=modulus,
                residues=set(range(modulus)),
                required_parts=tuple(required),
                max_multiplicity=caps,
            )
        except ContradictoryConstraint:
            return
        got = enumerate_partitions(n, c)
        naive = [Partition(x) for x in all_partitions(n) if c.satisfied_by(Partition(x))]
        assert sorted(got) == sorted(naive)
        assert count(n, c) == len(got)

    def test_contradictions(self):
        with pytest.raises(ContradictoryConstraint):
            Constraint(modulus=3)
        with pytest.raises(ContradictoryConstraint):
            Constraint(forbidden_divisor=1)
        with pytest.raises(ContradictoryConstraint):
            Constraint(min_part=5, max_part=2)
        with pytest.raises(ContradictoryConstraint):
            Constraint(distinct=True, required_parts=(2, 2))

    def test_constraint_json(self):
        c = Constraint(modulus=5, residues={1, 4}, max_multiplicity={1: 3}, required_parts=(4,))
        assert Constraint.from_dict(json.loads(c.to_json())) == c


class TestStatistics:
    """mex, lengths and multiplicities."""

    def test_mex(self):
        assert mex(Partition([7, 7, 5, 3, 2, 2, 1])) == 4
        assert mex(Partition([])) == 1
        assert mex(Partition([1, 1])) == 2

    def test_mex_mod(self):
        assert mex_mod(Partition([3]), 4, 3) == 7
        assert mex_mod(Partition([]), 4, 1) == 1
        assert mex_mod(Partition([1, 5, 9]), 4, 1) == 13
        with pytest.raises(ParameterDomain):
            mex_mod(Partition([]), 4, 0)

    def test_record(self):
        s = statistics(Partition([5, 3, 2, 2, 1]))
        assert (s.length, s.even_length_count, s.odd_length_count, s.size) == (5, 2, 3, 13)
        assert s.m(2) == 2 and s.m(4) == 0
        e = statistics(Partition([]))
        assert (e.length, e.even_length_count, e.odd_length_count, e.size) == (0, 0, 0, 0)

    def test_odd_length_parity(self):
        for n in range(20):
            for p in iter_partitions(n):
                assert statistics(p).odd_length_count % 2 == n % 2


class TestPartitionOps:
    """Multiset operations, slices and staircases."""

    def test_union_diff(self):
        assert union(Partition([3, 1]), Partition([2])) == Partition([3, 2, 1])
        assert diff(Partition([3, 2, 1]), Partition([2])) == Partition([3, 1])
        with pytest.raises(NotSubMultiset):
            diff(Partition([3]), Partition([2]))

    @given(partitions, partitions)
    def test_union_then_diff(self, a, b):
        u = union(a, b)
        assert diff(u, b) == a
        assert list(u) == sorted(u, reverse=True)

    def test_staircase_domain(self):
        with pytest.raises(ParameterDomain):
            staircase(5, 5, 1)

    def test_staircase(self):
        s = staircase(3, 5, 4)
        assert s == Partition([18, 13, 8, 3]) and s.size == 42
        assert staircase(3, 5, 0) == Partition([])
        assert staircase(1, 3, 2) == Partition([4, 1])

    @given(st.integers(2, 9), st.data(), st.integers(0, 8))
    def test_staircase_size(self, R, data, j):
        S = data.draw(st.integers(1, R - 1))
        assert staircase(S, R, j).size == j * (j - 1) * R // 2 + j * S

    def test_slices(self):
        p = Partition([10, 9, 8, 7, 3, 2])
        assert slice_parts(p, 0, 3) == Partition([9, 3])
        assert slice_parts(Partition([]), 1, 3) == Partition([])
        assert slice_pm(p, 1, 3) == Partition([10, 8, 7, 2])

    def test_indexing(self):
        p = Partition([5, 3, 1])
        assert p.part(0) == float("inf")
        assert p.part(1) == 5 and p.part(4) == 0
        assert p.from_end(0) == 1 and p.from_end(2) == 5

    def test_json(self):
        p = Partition([4, 4, 1])
        assert Partition.from_json(p.to_json()) == p


class TestModularDiagrams:
    """R-modular rows and the (k+2,3)-Durfee rectangle."""

    def test_rows(self):
        assert modular_rows(Partition([10, 9, 8, 8, 7, 3, 2]), 3) == [4, 3, 3, 3, 3, 1, 1]
        assert modular_rows(Partition([5]), 5) == [1]
        assert modular_rows(Partition([]), 4) == []

    def test_durfee(self):
        assert durfee_height(Partition([]), 3) == 0
        assert durfee_height(Partition([3 * 2 + 1]), 0) == 1
        # rows (4,4,4,1): a x (a+k+2) boxes
        assert durfee_height(Partition([12, 12, 12, 3]), 0) == 2
        assert durfee_height(Partition([12, 12, 12, 3]), 1) == 1
        assert durfee_height(Partition([12, 12, 12, 3]), 2) == 0
        assert durfee_height(Partition([15, 15, 15]), 0) == 3
