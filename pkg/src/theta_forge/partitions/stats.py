"""Partition statistics: excludants, length counts, modular diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from collections import Counter

from ..errors import ParameterDomain
from .partition import Partition


def mex(p) -> int:
    """Smallest positive integer that is not a part."""
    have = set(p)
    m = 1
    while m in have:
        m += 1
    return m


def mex_mod(p, A: int, a: int) -> int:
    """Smallest integer congruent to a modulo A (starting at a) that is not a part."""
    if A < 1 or not 0 < a <= A:
        raise ParameterDomain(f"need A >= 1 and 0 < a <= A, got A={A}, a={a}")
    have = set(p)
    m = a
    while m in have:
        m += A
    return m


@dataclass(frozen=True)
class PartitionStats:
    length: int
    even_length_count: int
    odd_length_count: int
    size: int
    multiplicity: Counter

    def m(self, a: int) -> int:
        return self.multiplicity.get(a, 0)


def statistics(p) -> PartitionStats:
    p = Partition(p)
    return PartitionStats(
        length=len(p),
        even_length_count=p.even_length,
        odd_length_count=p.odd_length,
        size=p.size,
        multiplicity=Counter(p),
    )


def modular_rows(p, R: int) -> list[int]:
    """Row lengths of the R-modular diagram: ceil(part / R) per part."""
    if R < 2:
        raise ParameterDomain(f"R must be at least 2, got {R}")
    return [-(-x // R) for x in Partition(p)]


def durfee_height(p, k: int) -> int:
    """Height a of the largest a x (a+k+2) rectangle in the 3-modular diagram."""
    rows = modular_rows(p, 3)
    a = 0
    while a < len(rows) and rows[a] >= a + 1 + k + 2:
        a += 1
    return a
