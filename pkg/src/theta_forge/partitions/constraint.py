"""Declarative partition families and exhaustive enumeration over them."""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping

import numpy as np

from .. import kernels
from ..errors import ContradictoryConstraint
from .partition import Partition


def _freeze_caps(caps) -> tuple:
    if caps is None:
        return ()
    if isinstance(caps, Mapping):
        caps = caps.items()
    return tuple(sorted((int(v), int(c)) for v, c in caps))


@dataclass(frozen=True)
class Constraint:
    """Conjunction of clauses a partition must satisfy.

    residues are taken modulo modulus; forbidden_divisor makes the family
    l-regular (several divisors may be given); max_multiplicity caps individual
    values; required_parts is a multiset that must be contained.

    >>> Constraint(distinct=True, forbidden_divisor=5).satisfied_by(Partition([6]))
    True
    """

    modulus: int | None = None
    residues: frozenset | None = None
    distinct: bool = False
    max_multiplicity: tuple = field(default=())
    min_part: int | None = None
    max_part: int | None = None
    required_parts: tuple = ()
    forbidden_divisor: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "max_multiplicity", _freeze_caps(self.max_multiplicity))
        object.__setattr__(self, "required_parts", tuple(sorted(self.required_parts, reverse=True)))
        fd = self.forbidden_divisor
        if fd is None:
            fd = ()
        elif isinstance(fd, int):
            fd = (fd,)
        object.__setattr__(self, "forbidden_divisor", tuple(sorted(set(fd))))
        if self.residues is not None:
            object.__setattr__(self, "residues", frozenset(int(r) for r in self.residues))
        self._validate()

    def _validate(self):
        if self.modulus is not None:
            if self.modulus < 1:
                raise ContradictoryConstraint(f"modulus must be positive, got {self.modulus}")
            if self.residues is None:
                raise ContradictoryConstraint("modulus given without residues")
            bad = [r for r in self.residues if not 0 <= r < self.modulus]
            if bad:
                raise ContradictoryConstraint(f"residues {bad} outside 0..{self.modulus - 1}")
            if not self.residues:
                raise ContradictoryConstraint("empty residue set admits no parts")
        elif self.residues is not None:
            raise ContradictoryConstraint("residues given without modulus")
        if any(d < 1 for d in self.forbidden_divisor):
            raise ContradictoryConstraint("forbidden divisors must be positive")
        if 1 in self.forbidden_divisor:
            raise ContradictoryConstraint("every part is divisible by 1")
        if any(c < 0 for _, c in self.max_multiplicity):
            raise ContradictoryConstraint("multiplicity caps must be non-negative")
        if self.min_part is not None and self.max_part is not None and self.min_part > self.max_part:
            raise ContradictoryConstraint(f"min_part {self.min_part} > max_part {self.max_part}")
        for v, c in Counter(self.required_parts).items():
            if v < 1 or not self.allowed(v) or c > self.cap(v):
                raise ContradictoryConstraint(f"required part {v} (x{c}) is forbidden")

    # -- clause evaluation --------------------------------------------------
    def allowed(self, v: int) -> bool:
        if self.modulus is not None and v % self.modulus not in self.residues:
            return False
        if any(v % d == 0 for d in self.forbidden_divisor):
            return False
        if self.min_part is not None and v < self.min_part:
            return False
        if self.max_part is not None and v > self.max_part:
            return False
        return True

    def cap(self, v: int) -> int | float:
        c = dict(self.max_multiplicity).get(v, math.inf)
        return min(c, 1) if self.distinct else c

    def required(self, v: int) -> int:
        return self.required_parts.count(v)

    def satisfied_by(self, p) -> bool:
        counts = Counter(p)
        for v, c in counts.items():
            if not self.allowed(v) or c > self.cap(v):
                return False
        return all(counts[v] >= c for v, c in Counter(self.required_parts).items())

    def __and__(self, other: "Constraint") -> "Constraint":
        if self.modulus is None:
            modulus, residues = other.modulus, other.residues
        elif other.modulus is None:
            modulus, residues = self.modulus, self.residues
        else:
            modulus = math.lcm(self.modulus, other.modulus)
            residues = frozenset(
                r for r in range(modulus)
                if r % self.modulus in self.residues and r % other.modulus in other.residues
            )
        caps = dict(self.max_multiplicity)
        for v, c in other.max_multiplicity:
            caps[v] = min(caps.get(v, c), c)
        need = Counter(self.required_parts) | Counter(other.required_parts)
        lo = [x for x in (self.min_part, other.min_part) if x is not None]
        hi = [x for x in (self.max_part, other.max_part) if x is not None]
        return Constraint(
            modulus=modulus,
            residues=residues,
            distinct=self.distinct or other.distinct,
            max_multiplicity=caps,
            min_part=max(lo) if lo else None,
            max_part=min(hi) if hi else None,
            required_parts=tuple(need.elements()),
            forbidden_divisor=self.forbidden_divisor + other.forbidden_divisor,
        )

    # -- value tables ---------------------------------------------------------
    def value_table(self, n: int):
        """Allowed values <= n (descending) with their multiplicity bounds."""
        vals, lo, hi = [], [], []
        for v in range(n, 0, -1):
            if not self.allowed(v):
                continue
            cap = self.cap(v)
            vals.append(v)
            lo.append(self.required(v))
            hi.append(-1 if cap == math.inf else int(cap))
        return vals, lo, hi

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "residues": sorted(self.residues) if self.residues is not None else None,
            "distinct": self.distinct,
            "max_multiplicity": {str(v): c for v, c in self.max_multiplicity},
            "min_part": self.min_part,
            "max_part": self.max_part,
            "required_parts": list(self.required_parts),
            "forbidden_divisor": list(self.forbidden_divisor),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Constraint":
        data = dict(data)
        caps = data.pop("max_multiplicity", None) or {}
        return cls(max_multiplicity={int(v): c for v, c in caps.items()}, **data)

    def with_(self, **changes) -> "Constraint":
        return replace(self, **changes)


UNRESTRICTED = Constraint()


def pm_class(S: int, R: int) -> Constraint:
    """Parts congruent to +-S modulo R."""
    return Constraint(modulus=R, residues={S % R, (-S) % R})


def iter_partitions(n: int, c: Constraint = UNRESTRICTED) -> Iterator[Partition]:
    """Yield every partition of n satisfying c, in descending lexicographic order."""
    if n < 0 or sum(c.required_parts) > n:
        return
    vals, lo, hi = c.value_table(n)
    k = len(vals)
    # reach[i][r]: can values vals[i:] (with their bounds) make r exactly
    reach = [None] * (k + 1)
    base = np.zeros(n + 1, dtype=bool)
    base[0] = True
    reach[k] = base
    for i in range(k - 1, -1, -1):
        v, l, h = vals[i], lo[i], hi[i]
        top = n // v if h < 0 else min(h, n // v)
        nxt = reach[i + 1]
        cur = np.zeros(n + 1, dtype=bool)
        for m in range(l, top + 1):
            cur[m * v:] |= nxt[: n + 1 - m * v]
        reach[i] = cur
    if not reach[0][n]:
        return
    acc: list[int] = []

    def rec(i: int, rem: int):
        if i == k:
            yield Partition._trusted(tuple(acc))
            return
        v, l, h = vals[i], lo[i], hi[i]
        top = rem // v if h < 0 else min(h, rem // v)
        nxt = reach[i + 1]
        for m in range(top, l - 1, -1):
            r = rem - m * v
            if nxt[r]:
                acc.extend([v] * m)
                yield from rec(i + 1, r)
                if m:
                    del acc[-m:]

    yield from rec(0, n)


def enumerate_partitions(n: int, c: Constraint = UNRESTRICTED) -> list[Partition]:
    return list(iter_partitions(n, c))


def count(n: int, c: Constraint = UNRESTRICTED) -> int:
    """Number of partitions of n satisfying c, via bounded-knapsack counting."""
    if n < 0 or sum(c.required_parts) > n:
        return 0
    vals, lo, hi = c.value_table(n)
    return int(kernels.knapsack(vals, lo, hi, n)[n])


def counts(n_max: int, c: Constraint = UNRESTRICTED) -> list[int]:
    """count(n, c) for every n in 0..n_max in one pass."""
    top = max([n_max, *c.required_parts])
    vals, lo, hi = c.value_table(top)
    return [int(x) for x in kernels.knapsack(vals, lo, hi, top)[: n_max + 1]]
