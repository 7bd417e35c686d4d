import pytest

from oracle import all_partitions
from theta_forge.errors import ParameterDomain, UnknownStatistic
from theta_forge.partitions import special_count, special_names, u_set_count
from theta_forge.qseries import u_series


def naive_mex(p, start=1, step=1):
    m = start
    while m in p:
        m += step
    return m


def naive(n, keep):
    return sum(1 for p in all_partitions(n) if keep(p))


def is_distinct(p):
    return len(set(p)) == len(p)


def in_d5(p):
    return is_distinct(p) and all(x % 5 for x in p)


def naive_b3(p, i, k):
    if any(x % 3 == 0 for x in p):
        return False
    mu = [x for x in p if x % 3 == i]
    if any(3 * t + i not in mu for t in range(k + 1)):
        return False
    rows = [(x + 2) // 3 for x in mu]
    a = 0
    while a < len(rows) and rows[a] >= a + 1 + k + 2:
        a += 1
    below = rows[a] if a < len(rows) else 0
    return below < a + k + 2


class TestExcludantFamilies:
    """Families cut out by the mex statistic."""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_mk(self, k):
        def keep(p):
            above = sum(1 for x in p if x > k)
            return naive_mex(p) == k and above > len(p) - above

        for n in range(19):
            assert special_count("M_k", n, {"k": k}) == naive(n, keep)

    def test_mk_at_zero(self):
        for k in (1, 2, 3):
            assert special_count("M_k", 0, {"k": k}) == 0

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_xia_zhao(self, k):
        def keep(p):
            if any(i not in p for i in range(1, k + 1)):
                return False
            above = [x for x in p if x > k]
            return bool(above) and p.count(min(above)) >= k + 1

        for n in range(19):
            assert special_count("xia_zhao", n, {"k": k}) == naive(n, keep)

    @pytest.mark.parametrize("A,a", [(4, 1), (4, 3), (2, 1)])
    def test_qbar(self, A, a):
        def keep(p):
            return all(x % 2 for x in p) and naive_mex(p, a, A) % (2 * A) == (A + a) % (2 * A)

        for n in range(19):
            assert special_count("Qbar", n, {"A": A, "a": a}) == naive(n, keep)

    def test_odd_mex(self):
        def keep(p):
            return all(x % 2 for x in p) and naive_mex(p, 3, 4) == 7

        for n in range(19):
            assert special_count("odd_mex", n, {"A": 4, "a": 3, "value": 7}) == naive(n, keep)


class TestModulusFiveFamilies:
    """Distinct 5-regular partitions and the paired classes."""

    def test_d5_six(self):
        assert special_count("D5", 6) == 3

    def test_d5_naive(self):
        for n in range(21):
            total = naive(n, in_d5)
            even = naive(n, lambda p: in_d5(p) and len(p) % 2 == 0)
            assert special_count("D5", n) == total
            assert special_count("D5_even", n) == even
            assert special_count("D5_odd", n) == total - even

    @pytest.mark.parametrize("a,b", [(1, 2), (3, 4)])
    def test_pairs(self, a, b):
        banned = {a, 10 - a, b, 10 - b}
        for n in range(17):
            lam = [naive(t, lambda p: is_distinct(p) and all(x % 10 not in banned for x in p)) for t in range(n + 1)]
            mu = [naive(t, lambda p: is_distinct(p) and all(x % 5 == 0 for x in p)) for t in range(n + 1)]
            expected = sum(lam[t] * mu[n - t] for t in range(n + 1))
            assert special_count("C", n, {"a": a, "b": b}) == expected

    def test_d5_splits(self):
        for n in range(1, 41):
            rhs = special_count("C", n, {"a": 1, "b": 2}) + special_count("C", n - 1, {"a": 3, "b": 4})
            assert special_count("D5", n) == rhs

    def test_pair_domain(self):
        with pytest.raises(ParameterDomain):
            special_count("C", 5, {"a": 1, "b": 9})


class TestDurfeeFamilies:
    """3-regular partitions cut by the (k+2,3)-Durfee rectangle."""

    @pytest.mark.parametrize("i", [1, 2])
    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_b3(self, i, k):
        for n in range(23):
            assert special_count("B3", n, {"i": i, "k": k}) == naive(n, lambda p: naive_b3(p, i, k))

    def test_b3_star(self):
        def keep(p):
            zero = [x for x in p if x % 3 == 0]
            rest = tuple(x for x in p if x % 3)
            return is_distinct(zero) and naive_b3(rest, 1, 1)

        for n in range(21):
            assert special_count("B3_star", n, {"i": 1, "k": 1}) == naive(n, keep)


class TestTailFamilies:
    """Pair families read off the modulus-5 tails."""

    AGREE = [("g", 1, 1), ("h", 2, 1), ("g", 2, 1), ("g", 2, -1), ("h", 1, 1), ("h", 1, -1)]

    @pytest.mark.parametrize("xi,S,sign", AGREE)
    @pytest.mark.parametrize("k", [1, 2])
    def test_counts_match_series(self, xi, S, sign, k):
        s = u_series(xi, S, sign, k, 30)
        assert [u_set_count(n, xi, S, sign, k) for n in range(31)] == list(s.coeffs)

    @pytest.mark.parametrize(
        "xi,S,k,n,series_value,set_value",
        [("g", 1, 1, 3, 1, 0), ("g", 1, 2, 20, 1, 0), ("h", 2, 1, 1, 1, 0), ("h", 2, 2, 15, 1, 0)],
    )
    def test_minus_tails_differ_from_their_set_reading(self, xi, S, k, n, series_value, set_value):
        # recorded discrepancy: the set description misses these coefficients
        assert u_series(xi, S, -1, k, n)[n] == series_value
        assert u_set_count(n, xi, S, -1, k) == set_value

    def test_unknown_tail(self):
        with pytest.raises(ParameterDomain):
            u_set_count(5, "g", 3, 1, 1)


class TestRegistry:
    """Name lookup."""

    def test_names(self):
        assert {"M_k", "xia_zhao", "B3", "D5", "C", "Qbar", "u_set"} <= set(special_names())

    def test_unknown(self):
        with pytest.raises(UnknownStatistic):
            special_count("Mk", 3)

    def test_negative_n(self):
        assert special_count("D5", -2) == 0

    def test_missing_param(self):
        with pytest.raises(ParameterDomain):
            special_count("M_k", 3, {})
