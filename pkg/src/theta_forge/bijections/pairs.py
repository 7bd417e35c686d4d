"""Pairs of partitions, audit traces, and the basic sign-reversing involution F."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainViolation
from ..partitions import Partition


@dataclass(frozen=True)
class PartitionPair:
    """(first, second) with the sign carried by the length of first."""

    first: Partition
    second: Partition

    def __post_init__(self):
        object.__setattr__(self, "first", Partition(self.first))
        object.__setattr__(self, "second", Partition(self.second))

    @property
    def n(self) -> int:
        return self.first.size + self.second.size

    @property
    def sign(self) -> int:
        return -1 if len(self.first) % 2 else 1

    def to_dict(self) -> dict:
        return {"first": list(self.first), "second": list(self.second)}

    def __repr__(self) -> str:
        return f"({list(self.first)}, {list(self.second)})"


@dataclass(frozen=True)
class MapTrace:
    input: object
    output: object
    case_tag: str

    def to_dict(self) -> dict:
        return {"input": self.input.to_dict(), "output": self.output.to_dict(), "case_tag": self.case_tag}


@dataclass(frozen=True)
class FixedPoint:
    """An element the involution leaves to the counting argument."""

    input: object
    case_tag: str
    survivor: bool = False

    def to_dict(self) -> dict:
        return {"input": self.input.to_dict(), "case_tag": self.case_tag, "survivor": self.survivor}


def move_largest(lam: Partition, mu: Partition) -> tuple[Partition, Partition, str]:
    """The move behind F on a (distinct, unrestricted) pair of partitions."""
    a = lam.largest()
    b = mu.largest()
    if a < b:
        return lam.union((b,)), mu.diff((b,)), "to_first"
    return lam.diff((a,)), mu.union((a,)), "to_second"


def F(p: PartitionPair) -> MapTrace:
    """Move the larger of the two largest parts across, changing len(first) by one.

    >>> F(PartitionPair((3, 1), (2,))).output
    ([1], [3, 2])
    """
    if not p.first and not p.second:
        raise DomainViolation("F is not defined on the empty pair")
    if not p.first.is_distinct():
        raise DomainViolation(f"first partition {list(p.first)} has repeated parts")
    lam, mu, tag = move_largest(p.first, p.second)
    return MapTrace(p, PartitionPair(lam, mu), tag)


def qp_set(n: int):
    """Pairs (distinct, unrestricted) of total size n, excluding (empty, empty)."""
    from ..partitions import Constraint, iter_partitions

    dist = Constraint(distinct=True)
    for a in range(n, -1, -1):
        for lam in iter_partitions(a, dist):
            for mu in iter_partitions(n - a):
                if lam or mu:
                    yield PartitionPair(lam, mu)
