import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from theta_forge.errors import NonUnitConstantTerm
from theta_forge.qseries import TruncatedSeries, add, inverse, mul, shift, truncate

T = TruncatedSeries


def series(order=None, lo=-50, hi=50):
    orders = st.just(order) if order is not None else st.integers(0, 12)
    return orders.flatmap(
        lambda n: st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1).map(
            lambda c: T(c, order=n)
        )
    )


def same_order(k):
    return st.integers(0, 10).flatmap(lambda n: st.tuples(*[series(n)] * k))


unit_series = st.tuples(st.sampled_from([1, -1]), series()).map(
    lambda t: T([t[0], *t[1].coeffs[1:]], order=t[1].order)
)


class TestExamples:
    """Small hand-checked expansions."""

    def test_add(self):
        assert add(T([1, -1]), T([0, 1])) == T([1, 0])
        a = T([3, 0, 4])
        assert a + T.zero(2) == a
        assert T([1, 0, 1]) + T([1, 0, 1]) == T([2, 0, 2])

    def test_add_takes_min_order(self):
        assert (T([1, 1, 1], order=2) + T([1], order=0)).order == 0

    def test_mul(self):
        assert mul(T([1, -1], order=3), T([1, 1, 1, 1], order=3)) == T.one(3)
        a = T([2, -1, 5])
        assert a * T.one(2) == a
        assert T([1, 1], order=2) ** 2 == T([1, 2, 1])

    def test_shift(self):
        assert shift(T.one(5), 3) == T.monomial(3, 5)
        a = T([1, 2, 3])
        assert shift(a, 0) == a
        assert shift(T([1, 1], order=2), 2) == T([0, 0, 1])

    def test_inverse(self):
        assert inverse(T([1, -1], order=4)) == T([1] * 5)
        assert inverse(T.one(7)) == T.one(7)

    def test_inverse_needs_unit(self):
        with pytest.raises(NonUnitConstantTerm):
            inverse(T([2, 1]))
        with pytest.raises(NonUnitConstantTerm):
            inverse(T([0, 1]))

    def test_truncate(self):
        assert truncate(T([1, 2, 3, 4]), 1) == T([1, 2])

    def test_negative_unit_inverse(self):
        assert inverse(T([-1, 1], order=3)) == T([-1, -1, -1, -1])


class TestRingLaws:
    """Commutative ring axioms modulo q^(N+1)."""

    @given(same_order(2))
    def test_add_commutes(self, ab):
        a, b = ab
        assert a + b == b + a

    @given(same_order(3))
    def test_add_associates(self, abc):
        a, b, c = abc
        assert (a + b) + c == a + (b + c)

    @given(same_order(2))
    def test_mul_commutes(self, ab):
        a, b = ab
        assert a * b == b * a

    @given(same_order(3))
    def test_mul_associates(self, abc):
        a, b, c = abc
        assert (a * b) * c == a * (b * c)

    @given(same_order(3))
    def test_distributes(self, abc):
        a, b, c = abc
        assert a * (b + c) == a * b + a * c

    @given(same_order(2), st.integers(0, 10))
    def test_truncation_is_a_ring_map(self, ab, cut):
        a, b = ab
        cut = min(cut, a.order)
        assert truncate(a * b, cut) == truncate(a, cut) * truncate(b, cut)

    @given(same_order(1))
    def test_subtraction(self, a):
        (a,) = a
        assert a - a == T.zero(a.order)


class TestInverse:
    """inverse is two-sided for every unit constant term."""

    @given(unit_series)
    def test_two_sided(self, a):
        one = T.one(a.order)
        assert a * inverse(a) == one
        assert inverse(a) * a == one

    @given(unit_series)
    def test_involutive(self, a):
        assert inverse(inverse(a)) == a

    def test_big_coefficients_stay_exact(self):
        a = T([1, -(2**70), 3**40], order=6)
        b = inverse(a)
        assert a * b == T.one(6)
        assert b[1] == 2**70


class TestSerialization:
    """JSON round trips keep every digit."""

    @given(series(lo=-(2**80), hi=2**80))
    def test_roundtrip(self, a):
        assert T.from_json(a.to_json()) == a

    def test_shape(self):
        data = json.loads(T([1, 0, -1]).to_json())
        assert data["order"] == 2
        assert [int(c) for c in data["coeffs"]] == [1, 0, -1]
