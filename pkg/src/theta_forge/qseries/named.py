"""Named generating functions: truncated theta quotients and their companions.

Every function takes the truncation order as its last argument and returns an
exact TruncatedSeries. Infinite outer sums stop once the smallest exponent of
the next term exceeds the order.
"""
from __future__ import annotations

from ..errors import ParameterDomain
from .products import (
    apply_product,
    bilateral_theta,
    gaussian_binomial,
    poch,
    pochhammer_product,
)
from .series import TruncatedSeries


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check_sr(S: int, R: int) -> None:
    if not (isinstance(S, int) and isinstance(R, int)) or not 1 <= S < R:
        raise ParameterDomain(f"need 1 <= S < R, got S={S}, R={R}")


def _check_k(k: int, least: int = 1) -> None:
    if not isinstance(k, int) or k < least:
        raise ParameterDomain(f"need k >= {least}, got k={k}")


def geometric_block(start: int, step: int, count: int, order: int) -> TruncatedSeries:
    """q^start (1 + q^step + ... + q^((count-1) step)); empty when count <= 0."""
    return TruncatedSeries.from_terms(
        ((start + i * step, 1) for i in range(max(count, 0))), order
    )


def partition_series(order: int) -> TruncatedSeries:
    """1/(q;q)_inf."""
    return pochhammer_product([], order, divide=[poch(1, 1)])


def distinct_series(order: int) -> TruncatedSeries:
    """(-q;q)_inf, which also counts partitions into odd parts."""
    return pochhammer_product([poch(1, 1, sign=-1)], order)


def pm_class_series(S: int, R: int, order: int) -> TruncatedSeries:
    """1/(q^S, q^(R-S); q^R)_inf: partitions into parts congruent to +-S mod R.

    For S = R/2 the two factors coincide and the denominator is squared.
    """
    _check_sr(S, R)
    return pochhammer_product([], order, divide=[poch(S, R), poch(R - S, R)])


# -- truncations of the triple product ---------------------------------------

def a_series(S: int, R: int, k: int, order: int) -> TruncatedSeries:
    """Signed k-term truncation of the (S, R) triple product quotient.

    (-1)^(k-1) / (q^S, q^(R-S); q^R)_inf * sum_{j<k} (-1)^j q^(j(j+1)R/2 - jS)(1 - q^((2j+1)S))
    minus (-1)^(k-1) (q^R; q^R)_inf. k = 0 gives (q^R; q^R)_inf itself.
    """
    _check_sr(S, R)
    _check_k(k, 0)
    terms = []
    for j in range(k):
        e = j * (j + 1) * R // 2 - j * S
        terms.append((e, _sign(j)))
        terms.append((e + (2 * j + 1) * S, -_sign(j)))
    head = TruncatedSeries.from_terms(terms, order)
    body = apply_product(head, divide=[poch(S, R), poch(R - S, R)])
    sgn = _sign(k - 1)
    return (body - pochhammer_product([poch(R, R)], order)) * sgn


def y_series(S: int, R: int, k: int, order: int) -> TruncatedSeries:
    """Generating function of pairs (lambda, staircase) with at most 2k parts S.

    q^(k(k+1)R/2 - kS) (1 + q^S + ... + q^(2kS)) / (q^(R+S), q^(R-S); q^R)_inf.
    """
    _check_sr(S, R)
    _check_k(k, 0)
    head = geometric_block(k * (k + 1) * R // 2 - k * S, S, 2 * k + 1, order)
    return apply_product(head, divide=[poch(R + S, R), poch(R - S, R)])


def wang_yee(R: int, S: int, m: int, which: int, order: int) -> TruncatedSeries:
    """Signed truncations of the triple product normalised to 1.

    With Q the quotient of sum_{n=lo}^{m} (-1)^n q^(Rn(n-1)/2 + Sn) by
    (q^S, q^(R-S), q^R; q^R)_inf, which=1 uses lo = -(m-1) and returns
    (-1)^(m-1) (Q - 1); which=2 uses lo = -m and returns (-1)^m (Q - 1).
    """
    _check_sr(S, R)
    _check_k(m, 1)
    if which not in (1, 2):
        raise ParameterDomain(f"which must be 1 or 2, got {which}")
    lo = -(m - 1) if which == 1 else -m
    terms = [(R * n * (n - 1) // 2 + S * n, _sign(n)) for n in range(lo, m + 1)]
    head = TruncatedSeries.from_terms(terms, order)
    q = apply_product(head, divide=[poch(S, R), poch(R - S, R), poch(R, R)])
    sgn = _sign(m - 1) if which == 1 else _sign(m)
    return (q - 1) * sgn


def conj_2s(k: int, order: int) -> TruncatedSeries:
    """(-1)^(k-1)/(q;q^2)_inf sum_{j<k} (-1)^j q^(j^2)(1 - q^(2j+1)) - (-1)^(k-1)(q;q)_inf."""
    _check_k(k)
    terms = []
    for j in range(k):
        terms.append((j * j, _sign(j)))
        terms.append((j * j + 2 * j + 1, -_sign(j)))
    body = apply_product(TruncatedSeries.from_terms(terms, order), divide=[poch(1, 2)])
    return (body - pochhammer_product([poch(1, 1)], order)) * _sign(k - 1)


def triangular_tail(k: int, order: int) -> TruncatedSeries:
    """(-q;q)_inf sum_{n>=0} (-1)^(T_n) q^(T_(n+2k)), T_n = n(n+1)/2."""
    _check_k(k)
    terms = []
    n = 0
    while (n + 2 * k) * (n + 2 * k + 1) // 2 <= order:
        terms.append(((n + 2 * k) * (n + 2 * k + 1) // 2, _sign(n * (n + 1) // 2)))
        n += 1
    return apply_product(TruncatedSeries.from_terms(terms, order), [poch(1, 1, sign=-1)])


def ck_series(k: int, order: int) -> TruncatedSeries:
    """Generating function of c_k(n); c_1 is the distinct-partition count."""
    _check_k(k)
    if k == 1:
        return distinct_series(order)

    def tri(n):
        return n * (n + 1) // 2

    terms = [(tri(2 * (k - 1)), _sign(k - 1))]
    for j in range(k - 1):
        terms.append((tri(2 * j), _sign(j)))
        terms.append((tri(2 * j + 1), -_sign(j)))
    head = TruncatedSeries.from_terms(terms, order)
    return apply_product(head, [poch(1, 1, sign=-1)]) * _sign(k - 1)


# -- pentagonal truncations ----------------------------------------------------

def shanks_lhs(k: int, order: int) -> TruncatedSeries:
    """sum_{j=-k}^{k} (-1)^j q^(j(3j-1)/2)."""
    _check_k(k, 0)
    return TruncatedSeries.from_terms(
        ((j * (3 * j - 1) // 2, _sign(j)) for j in range(-k, k + 1)), order
    )


def shanks_rhs(k: int, order: int) -> TruncatedSeries:
    """sum_{j=0}^{k} (-1)^j (q;q)_k q^(j(j+1)/2 + jk) / (q;q)_j."""
    _check_k(k, 0)
    acc = TruncatedSeries.zero(order)
    for j in range(k + 1):
        e = j * (j + 1) // 2 + j * k
        if e > order:
            break
        term = TruncatedSeries.monomial(e, order, _sign(j))
        # (q;q)_k / (q;q)_j = (q^(j+1); q)_(k-j), a polynomial
        acc = acc + apply_product(term, [poch(j + 1, 1, count=k - j)])
    return acc


def andrews_merca_lhs(k: int, order: int) -> TruncatedSeries:
    """1/(q;q)_inf sum_{j<k} (-1)^j q^(j(3j+1)/2)(1 - q^(2j+1))."""
    _check_k(k)
    terms = []
    for j in range(k):
        e = j * (3 * j + 1) // 2
        terms.append((e, _sign(j)))
        terms.append((e + 2 * j + 1, -_sign(j)))
    return apply_product(TruncatedSeries.from_terms(terms, order), divide=[poch(1, 1)])


def andrews_merca_rhs(k: int, order: int) -> TruncatedSeries:
    """1 + (-1)^(k-1) sum_{n>=1} q^(C(k,2) + (k+1)n) / (q;q)_n [n-1 choose k-1]."""
    _check_k(k)
    acc = TruncatedSeries.zero(order)
    base = k * (k - 1) // 2
    n = max(k, 1)  # the bracket vanishes for n < k
    while base + (k + 1) * n <= order:
        term = gaussian_binomial(n - 1, k - 1, order).shift(base + (k + 1) * n)
        acc = acc + apply_product(term, divide=[poch(1, 1, count=n)])
        n += 1
    return acc * _sign(k - 1) + 1


def mk_series(k: int, order: int) -> TruncatedSeries:
    """sum_n M_k(n) q^n read off the pentagonal truncation."""
    return (andrews_merca_lhs(k, order) - 1) * _sign(k - 1)


def xia_zhao_series(k: int, order: int) -> TruncatedSeries:
    """(-1)^k/(q;q)_inf sum_{j=-k}^{k} (-1)^j q^(j(3j-1)/2)."""
    _check_k(k)
    return apply_product(shanks_lhs(k, order), divide=[poch(1, 1)]) * _sign(k)


def h1_series(k: int, order: int) -> TruncatedSeries:
    """q^(k(3k+5)/2+1)/(q^2;q^3)_inf sum_n q^(n(3n+3k+4)) / ((q^3;q^3)_n (q;q^3)_(n+k+1))."""
    _check_k(k)
    return _h_series(k, order, k * (3 * k + 5) // 2 + 1, 3 * k + 4, 1, 2)


def h2_series(k: int, order: int) -> TruncatedSeries:
    """q^(k(3k+7)/2+2)/(q;q^3)_inf sum_n q^(n(3n+3k+5)) / ((q^3;q^3)_n (q^2;q^3)_(n+k+1))."""
    _check_k(k)
    return _h_series(k, order, k * (3 * k + 7) // 2 + 2, 3 * k + 5, 2, 1)


def _h_series(k, order, lead, lin, inner, outer):
    acc = TruncatedSeries.zero(order)
    n = 0
    while lead + n * (3 * n + lin) <= order:
        term = TruncatedSeries.monomial(lead + n * (3 * n + lin), order)
        acc = acc + apply_product(
            term, divide=[poch(3, 3, count=n), poch(inner, 3, count=n + k + 1)]
        )
        n += 1
    return apply_product(acc, divide=[poch(outer, 3)])


def h1h2_series(k: int, order: int) -> TruncatedSeries:
    """H_1 + H_2, both manifestly non-negative."""
    return h1_series(k, order) + h2_series(k, order)


def h1h2_lhs(k: int, order: int) -> TruncatedSeries:
    """(-1)^k (q^3;q^3)/(q;q) sum_{j=-k}^{k} (-1)^j q^(j(3j-1)/2) + (-1)^(k-1) (q^3;q^3)."""
    _check_k(k)
    e3 = pochhammer_product([poch(3, 3)], order)
    body = apply_product(shanks_lhs(k, order), [poch(3, 3)], [poch(1, 1)])
    return body * _sign(k) + e3 * _sign(k - 1)


def b6_lhs(k: int, order: int) -> TruncatedSeries:
    """(-1)^(k-1) (q^6;q^6) + (-1)^k (q^6;q^6)/(q;q) sum_{j=-k}^{k} (-1)^j q^(j(3j-1)/2)."""
    _check_k(k)
    e6 = pochhammer_product([poch(6, 6)], order)
    body = apply_product(shanks_lhs(k, order), [poch(6, 6)], [poch(1, 1)])
    return e6 * _sign(k - 1) + body * _sign(k)


def b6_rhs(k: int, order: int) -> TruncatedSeries:
    """(-q^3;q^3)_inf (H_1 + H_2)."""
    return apply_product(h1h2_series(k, order), [poch(3, 3, sign=-1)])


# -- the T+- family ------------------------------------------------------------

def tminus_offset(R: int, S: int) -> int:
    """Power of q that makes T_- (and T_- + T_+) a power series.

    For S > R/2 the n = 1 term of T_- carries q^(R-2S) with a negative
    exponent, so those series are returned multiplied by q^d, d = max(0, 2S-R).
    """
    return max(0, 2 * S - R)


def _tcheck(R, S, k):
    _check_sr(S, R)
    _check_k(k)


def tplus(R: int, S: int, k: int, order: int) -> TruncatedSeries:
    """1/(q^S, q^(R-S); q^R) sum_{n>=k} q^(n(3n-1)R/2 + 3nS)(1 - q^(S+nR))."""
    _tcheck(R, S, k)
    terms = []
    n = k
    while n * (3 * n - 1) * R // 2 + 3 * n * S <= order:
        e = n * (3 * n - 1) * R // 2 + 3 * n * S
        terms += [(e, 1), (e + S + n * R, -1)]
        n += 1
    head = TruncatedSeries.from_terms(terms, order)
    return apply_product(head, divide=[poch(S, R), poch(R - S, R)])


def tplus_rewritten(R: int, S: int, k: int, order: int) -> TruncatedSeries:
    """T_+ as a sum of two quotients with non-negative numerators."""
    _tcheck(R, S, k)
    first = TruncatedSeries.zero(order)
    second = TruncatedSeries.zero(order)
    n = k
    while n * (3 * n - 1) * R // 2 + 3 * n * S <= order:
        first = first + geometric_block(n * (3 * n - 1) * R // 2 + 3 * n * S, R - S, n, order)
        second = second + geometric_block(n * (3 * n + 1) * R // 2 + 2 * n * S, S, n + 1, order)
        n += 1
    return apply_product(first, divide=[poch(S, R), poch(2 * R - S, R)]) + apply_product(
        second, divide=[poch(S + R, R), poch(R - S, R)]
    )


def tminus(R: int, S: int, k: int, order: int) -> TruncatedSeries:
    """q^d / (q^S, q^(R-S); q^R) sum_{n>=k} q^(n(3n+1)R/2 - 3nS)(1 - q^(S-nR)).

    d = tminus_offset(R, S); it is zero whenever S <= R/2.
    """
    _tcheck(R, S, k)
    d = tminus_offset(R, S)
    terms = []
    n = k
    while d + n * (3 * n - 1) * R // 2 - 3 * n * S + S <= order:
        e = d + n * (3 * n + 1) * R // 2 - 3 * n * S
        terms += [(e, 1), (e + S - n * R, -1)]
        n += 1
    head = TruncatedSeries.from_terms(terms, order)
    return apply_product(head, divide=[poch(S, R), poch(R - S, R)])


def tminus_rewritten(R: int, S: int, k: int, order: int) -> TruncatedSeries:
    """-q^d T_- as a sum of two quotients with non-negative numerators."""
    _tcheck(R, S, k)
    d = tminus_offset(R, S)
    first = TruncatedSeries.zero(order)
    second = TruncatedSeries.zero(order)
    n = k
    while d + n * (3 * n - 1) * R // 2 - 3 * n * S + S <= order:
        first = first + geometric_block(
            d + n * (3 * n - 1) * R // 2 - 3 * n * S + S, R - S, n, order
        )
        if n >= 2:
            second = second + geometric_block(
                d + n * (3 * n + 1) * R // 2 - 4 * n * S + S, S, n - 1, order
            )
        n += 1
    return apply_product(first, divide=[poch(S, R), poch(2 * R - S, R)]) + apply_product(
        second, divide=[poch(S + R, R), poch(R - S, R)]
    )


def conj615_sum(R: int, S: int, k: int, order: int) -> TruncatedSeries:
    """q^d (T_- + T_+), with the same offset d as tminus."""
    d = tminus_offset(R, S)
    return tminus(R, S, k, order) + tplus(R, S, k, order).shift(d)


def u_series(xi: str, S: int, sign: int, k: int, order: int) -> TruncatedSeries:
    """Generating function of the tail sums u^(+-)_(xi,S)(n) for mod-5 classes.

    xi='g' counts parts +-1 mod 5, xi='h' counts parts +-2 mod 5.
    """
    if xi not in ("g", "h"):
        raise ParameterDomain(f"xi must be 'g' or 'h', got {xi!r}")
    if S not in (1, 2) or sign not in (1, -1):
        raise ParameterDomain(f"need S in {{1, 2}} and sign +-1, got S={S}, sign={sign}")
    _check_k(k)
    terms = []
    j = k
    while True:
        if sign > 0:
            base = 5 * j * (3 * j + 1) // 2
            lo, hi = base - 3 * j * S, base + (3 * j + 1) * S
        else:
            base = 5 * j * (3 * j - 1) // 2
            lo, hi = base - (3 * j - 1) * S, base + 3 * j * S
        if lo > order:
            break
        terms += [(lo, 1), (hi, -1)]
        j += 1
    r = 1 if xi == "g" else 2
    head = TruncatedSeries.from_terms(terms, order)
    return apply_product(head, divide=[poch(r, 5), poch(5 - r, 5)])


# -- theta products at modulus 10 ------------------------------------------------

def theta10(a: int, sign: int, order: int) -> TruncatedSeries:
    """theta(sign*q^a; q^10) = (sign q^a; q^10)_inf (sign q^(10-a); q^10)_inf for 0 <= a < 10.

    For a = 0 the factor (1 - sign) is pulled out, so theta(-1; q^10) = 2(-q^10; q^10)^2.
    """
    if not 0 <= a < 10 or sign not in (1, -1):
        raise ParameterDomain(f"need 0 <= a < 10 and sign +-1, got a={a}, sign={sign}")
    if a == 0:
        if sign == 1:
            return TruncatedSeries.zero(order)
        return pochhammer_product([poch(10, 10, -1), poch(10, 10, -1)], order) * 2
    # the factor sign convention is (1 - sign' q^e); theta(-x) uses sign' = -1
    return pochhammer_product([poch(a, 10, sign), poch(10 - a, 10, sign)], order)


def _theta_prod(spec, order):
    acc = TruncatedSeries.one(order)
    for a, sg in spec:
        acc = acc * theta10(a, sg, order)
    return acc


def wsf_terms(order: int):
    """The two four-fold theta products shared by both addition formulas."""
    first = _theta_prod([(2, 1), (4, 1), (1, -1), (3, -1)], order)
    second = _theta_prod([(1, 1), (3, 1), (2, -1), (4, -1)], order)
    return first, second


def wsf1_lhs(order: int) -> TruncatedSeries:
    first, second = wsf_terms(order)
    return first + second


def wsf1_rhs(order: int) -> TruncatedSeries:
    return _theta_prod([(3, 1), (4, -1), (5, 1), (0, -1)], order)


def wsf2_lhs(order: int) -> TruncatedSeries:
    first, second = wsf_terms(order)
    return first - second


def wsf2_rhs(order: int) -> TruncatedSeries:
    return _theta_prod([(2, -1), (0, -1), (5, 1), (1, 1)], order).shift(1)


# -- the triple product with monomial z ----------------------------------------

def tgen_lhs(m: int, s: int, order: int) -> TruncatedSeries:
    """(q^s, q^(2m-s), q^(2m); q^(2m)) (q^(2m-2s), q^(2m+2s); q^(4m)) / (q^s, q^(m-s); q^m)."""
    if m < 2 or not 0 < s < m:
        raise ParameterDomain(f"need m >= 2 and 0 < s < m, got m={m}, s={s}")
    num = [poch(s, 2 * m), poch(2 * m - s, 2 * m), poch(2 * m, 2 * m),
           poch(2 * m - 2 * s, 4 * m), poch(2 * m + 2 * s, 4 * m)]
    return pochhammer_product(num, order, divide=[poch(s, m), poch(m - s, m)])


def staircase_lhs(m: int, s: int, order: int) -> TruncatedSeries:
    """(-q^(m+s); q^(2m)) (-q^(m-s); q^(2m)) (q^(2m); q^(2m))."""
    if m < 1 or not 0 < s < m:
        raise ParameterDomain(f"need 0 < s < m, got m={m}, s={s}")
    return pochhammer_product(
        [poch(m + s, 2 * m, -1), poch(m - s, 2 * m, -1), poch(2 * m, 2 * m)], order
    )


def gauss_lhs(order: int) -> TruncatedSeries:
    """(q^2;q^2)_inf / (q;q^2)_inf."""
    return pochhammer_product([poch(2, 2)], order, divide=[poch(1, 2)])


def gauss_rhs(order: int) -> TruncatedSeries:
    """sum_{n>=0} q^(n(n+1)/2)."""
    terms = []
    n = 0
    while n * (n + 1) // 2 <= order:
        terms.append((n * (n + 1) // 2, 1))
        n += 1
    return TruncatedSeries.from_terms(terms, order)


def kmr38_product(a: int, order: int) -> TruncatedSeries:
    """(q^8;q^8)_inf (-q^(4+a);q^8)_inf (-q^(4-a);q^8)_inf for a in {1, 3}."""
    if a not in (1, 3):
        raise ParameterDomain(f"a must be 1 or 3, got {a}")
    return pochhammer_product(
        [poch(8, 8), poch(4 + a, 8, -1), poch(4 - a, 8, -1)], order
    )
