"""Pochhammer products and the theta sums built from them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .. import kernels
from ..errors import ParameterDomain
from .series import TruncatedSeries


@dataclass(frozen=True)
class SignedFactorSpec:
    """prod_j (1 - sign * q**(base_exponent + j*step)) for j < count.

    count=None means the infinite product; only factors that can touch the
    retained coefficients are ever materialized.
    """

    base_exponent: int
    step: int
    sign: int = 1
    count: int | None = None

    def __post_init__(self):
        if self.base_exponent < 1 or self.step < 1:
            raise ParameterDomain(
                f"need base_exponent >= 1 and step >= 1, got {self.base_exponent}, {self.step}"
            )
        if self.sign not in (1, -1):
            raise ParameterDomain(f"sign must be +1 or -1, got {self.sign}")
        if self.count is not None and self.count < 0:
            raise ParameterDomain(f"count must be non-negative, got {self.count}")

    def exponents(self, order: int) -> Iterator[int]:
        j = 0
        while self.count is None or j < self.count:
            e = self.base_exponent + j * self.step
            if e > order:
                return
            yield e
            j += 1


def poch(a: int, r: int, sign: int = 1, count: int | None = None) -> SignedFactorSpec:
    """(sign' q^a; q^r)_count where the factor is (1 - sign*q^(a+jr)).

    poch(1, 1) is (q;q)_inf, poch(3, 3, sign=-1) is (-q^3;q^3)_inf.
    """
    return SignedFactorSpec(a, r, sign, count)


def pochhammer_product(
    factors: Iterable[SignedFactorSpec],
    order: int,
    divide: Iterable[SignedFactorSpec] = (),
) -> TruncatedSeries:
    """Exact truncated product of the numerator factors over the divide factors."""
    ops = []
    for spec in factors:
        ops.extend((e, spec.sign, False) for e in spec.exponents(order))
    for spec in divide:
        ops.extend((e, spec.sign, True) for e in spec.exponents(order))
    base = np.zeros(order + 1, dtype=np.int64)
    base[0] = 1
    return TruncatedSeries._wrap(kernels.apply_factors(base, ops))


def apply_product(
    s: TruncatedSeries,
    factors: Iterable[SignedFactorSpec] = (),
    divide: Iterable[SignedFactorSpec] = (),
) -> TruncatedSeries:
    """s times the numerator factors over the divide factors."""
    order = s.order
    ops = []
    for spec in factors:
        ops.extend((e, spec.sign, False) for e in spec.exponents(order))
    for spec in divide:
        ops.extend((e, spec.sign, True) for e in spec.exponents(order))
    return TruncatedSeries._wrap(kernels.apply_factors(s.array, ops))


def pentagonal_series(R: int, order: int) -> TruncatedSeries:
    """sum_i (-1)^i q^(R i(3i-1)/2), built from its support directly."""
    if R < 1:
        raise ParameterDomain(f"R must be positive, got {R}")
    terms = [(0, 1)]
    i = 1
    while R * i * (3 * i - 1) // 2 <= order:
        sgn = -1 if i % 2 else 1
        terms.append((R * i * (3 * i - 1) // 2, sgn))
        terms.append((R * i * (3 * i + 1) // 2, sgn))
        i += 1
    return TruncatedSeries.from_terms(terms, order)


def bilateral_theta(m: int, s: int, order: int) -> TruncatedSeries:
    """sum over all integers n of q^(n(mn+s))."""
    if m < 1 or not 0 <= s <= m:
        raise ParameterDomain(f"need m >= 1 and 0 <= s <= m, got m={m}, s={s}")
    terms = [(0, 1)]
    n = 1
    while n * (m * n - s) <= order:
        terms.append((n * (m * n - s), 1))
        terms.append((n * (m * n + s), 1))
        n += 1
    return TruncatedSeries.from_terms(terms, order)


def jtp_sum(m: int, s: int, z_sign: int, z_exp: int, order: int) -> TruncatedSeries:
    """sum_i (-z)^i q^(m(i^2-i)/2 + s i) with z = z_sign * q^z_exp."""
    if m < 1 or not 0 < s < m:
        raise ParameterDomain(f"need m >= 1 and 0 < s < m, got m={m}, s={s}")
    if z_sign not in (1, -1):
        raise ParameterDomain(f"z_sign must be +1 or -1, got {z_sign}")
    if z_exp < 0 or s + z_exp > m:
        # the i = -1 exponent is m - s - z_exp; negative powers are out of scope
        raise ParameterDomain(f"need 0 <= z_exp <= m - s, got z_exp={z_exp}")
    b = s + z_exp
    terms = []
    for direction in (1, -1):
        i = 0 if direction == 1 else -1
        while True:
            e = m * (i * i - i) // 2 + b * i
            if e > order:
                break
            # (-z_sign)^i is +-1, so its value only depends on |i|
            terms.append((e, (-z_sign) ** abs(i)))
            i += direction
    return TruncatedSeries.from_terms(terms, order)


def gaussian_binomial(n: int, k: int, order: int) -> TruncatedSeries:
    """The q-binomial coefficient [n choose k], zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return TruncatedSeries.zero(order)
    ops = [(n - k + i, 1, False) for i in range(1, k + 1) if n - k + i <= order]
    ops += [(i, 1, True) for i in range(1, k + 1) if i <= order]
    base = np.zeros(order + 1, dtype=np.int64)
    base[0] = 1
    return TruncatedSeries._wrap(kernels.apply_factors(base, ops))
