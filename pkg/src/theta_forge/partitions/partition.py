"""The Partition value type and multiset operations on it."""
from __future__ import annotations

import json
import math
from collections import Counter
from typing import Iterable

from ..errors import NotSubMultiset, ParameterDomain


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Index access follows the usual conventions: part(j) is zero past the last
    part and part(0) is infinite, so gap conditions near the start of a short
    partition read naturally.

    >>> p = Partition([2, 5, 3, 2, 1])
    >>> p
    Partition(5, 3, 2, 2, 1)
    >>> p.part(0), p.part(9), p.from_end(1)
    (inf, 0, 2)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        values = sorted((int(p) for p in parts), reverse=True)
        if values and values[-1] <= 0:
            raise ParameterDomain(f"parts must be positive, got {values[-1]}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # caller guarantees parts are already sorted and positive
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int):
        """lambda_j, 1-based; infinite for j <= 0 and zero for j > length."""
        if j <= 0:
            return math.inf
        return self[j - 1] if j <= len(self) else 0

    def from_end(self, i: int):
        """lambda_(l-i): from_end(0) is the last part."""
        return self.part(len(self) - i)

    def multiplicity(self, a: int) -> int:
        return self.count(a)

    def multiplicities(self) -> Counter:
        return Counter(self)

    @property
    def even_length(self) -> int:
        return sum(1 for p in self if p % 2 == 0)

    @property
    def odd_length(self) -> int:
        return sum(1 for p in self if p % 2)

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def largest(self) -> int:
        return self[0] if self else 0

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(list(self) + list(other))

    def diff(self, other: Iterable[int]) -> "Partition":
        have = Counter(self)
        for p in other:
            if have[p] == 0:
                raise NotSubMultiset(f"{p} is not available in {self!r}")
            have[p] -= 1
        return Partition(have.elements())

    def contains(self, other: Iterable[int]) -> bool:
        have = Counter(self)
        need = Counter(other)
        return all(have[p] >= c for p, c in need.items())

    def slice(self, s: int, r: int) -> "Partition":
        """Parts congruent to s modulo r."""
        return Partition._trusted([p for p in self if p % r == s % r])

    def slice_pm(self, s: int, r: int) -> "Partition":
        """Parts congruent to s or -s modulo r."""
        return Partition._trusted([p for p in self if p % r in (s % r, (-s) % r)])

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(json.loads(text))


def union(p: Iterable[int], r: Iterable[int]) -> Partition:
    return Partition(p).union(r)


def diff(p: Iterable[int], r: Iterable[int]) -> Partition:
    return Partition(p).diff(r)


def slice_parts(p: Iterable[int], s: int, r: int) -> Partition:
    if r < 2 or not 0 <= s < r:
        raise ParameterDomain(f"need r >= 2 and 0 <= s < r, got s={s}, r={r}")
    return Partition(p).slice(s, r)


def slice_pm(p: Iterable[int], s: int, r: int) -> Partition:
    if r < 2 or not 0 <= s < r:
        raise ParameterDomain(f"need r >= 2 and 0 <= s < r, got s={s}, r={r}")
    return Partition(p).slice_pm(s, r)


def staircase(S: int, R: int, j: int) -> Partition:
    """Distinct parts iR + S for 0 <= i < j; size j(j-1)R/2 + jS."""
    if j < 0 or not 0 < S < R:
        raise ParameterDomain(f"need j >= 0 and 0 < S < R, got S={S}, R={R}, j={j}")
    return Partition._trusted([i * R + S for i in range(j - 1, -1, -1)])
