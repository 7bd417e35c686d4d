"""Sign-reversing involution behind the bilateral theta identity with modulus 2m.

Elements of A(n) are kept as five colored components so that parts whose
residue classes overlap (for instance 2m+2s = -s mod 2m when 3s = 2m) remain
distinguishable, matching the product they are generated by.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..errors import DomainViolation, ParameterDomain
from ..partitions import Constraint, Partition, iter_partitions, staircase
from .pairs import FixedPoint, MapTrace, PartitionPair, move_largest

COMPONENTS = ("lam0", "lam_s", "lam_t", "mu_s", "mu_t")


@dataclass(frozen=True)
class ColoredPair:
    """(lambda, mu) split by residue class.

    lam0: distinct, 0 mod 2m; lam_s: distinct, +-s mod 2m;
    lam_t: distinct, +-(2m+2s) mod 4m; mu_s: +-s mod 2m; mu_t: +-(m+s) mod 2m.
    """

    lam0: Partition = Partition(())
    lam_s: Partition = Partition(())
    lam_t: Partition = Partition(())
    mu_s: Partition = Partition(())
    mu_t: Partition = Partition(())

    def __post_init__(self):
        for name in COMPONENTS:
            object.__setattr__(self, name, Partition(getattr(self, name)))

    @property
    def first(self) -> Partition:
        return self.lam0.union(self.lam_s).union(self.lam_t)

    @property
    def second(self) -> Partition:
        return self.mu_s.union(self.mu_t)

    @property
    def n(self) -> int:
        return sum(getattr(self, c).size for c in COMPONENTS)

    @property
    def sign(self) -> int:
        return -1 if len(self.first) % 2 else 1

    def with_(self, **parts) -> "ColoredPair":
        fields = {c: getattr(self, c) for c in COMPONENTS}
        fields.update(parts)
        return ColoredPair(**fields)

    def as_pair(self) -> PartitionPair:
        return PartitionPair(self.first, self.second)

    def to_dict(self) -> dict:
        return {c: list(getattr(self, c)) for c in COMPONENTS}

    def __repr__(self) -> str:
        body = ", ".join(f"{c}={list(getattr(self, c))}" for c in COMPONENTS if getattr(self, c))
        return f"ColoredPair({body})"


def check_ms(m: int, s: int) -> None:
    if m < 3 or not 0 < s < m:
        raise ParameterDomain(f"need m >= 3 and 0 < s < m, got m={m}, s={s}")


def component_constraints(m: int, s: int) -> dict[str, Constraint]:
    M, MM = 2 * m, 4 * m
    return {
        "lam0": Constraint(modulus=M, residues={0}, distinct=True),
        "lam_s": Constraint(modulus=M, residues={s % M, -s % M}, distinct=True),
        "lam_t": Constraint(modulus=MM, residues={(M + 2 * s) % MM, (M - 2 * s) % MM}, distinct=True),
        "mu_s": Constraint(modulus=M, residues={s % M, -s % M}),
        "mu_t": Constraint(modulus=M, residues={(m + s) % M, (m - s) % M}),
    }


def in_a(m: int, s: int, p: ColoredPair) -> bool:
    cons = component_constraints(m, s)
    return all(cons[c].satisfied_by(getattr(p, c)) for c in COMPONENTS)


@lru_cache(maxsize=64)
def _tables(m: int, s: int, n: int):
    cons = component_constraints(m, s)
    return [[tuple(iter_partitions(k, cons[c])) for k in range(n + 1)] for c in COMPONENTS]


def a_set(m: int, s: int, n: int):
    """Iterate over A(n) deterministically."""
    check_ms(m, s)
    tabs = _tables(m, s, n)

    def split(i, rem):
        if i == len(COMPONENTS) - 1:
            yield (rem,)
            return
        for k in range(rem + 1):
            for rest in split(i + 1, rem - k):
                yield (k,) + rest

    for sizes in split(0, n):
        pools = [tabs[i][k] for i, k in enumerate(sizes)]
        for combo in product(*pools):
            yield ColoredPair(*combo)


def is_survivor(m: int, s: int, p: ColoredPair) -> bool:
    """(empty, delta_(m-s,2m,k)) for k >= 0 or (empty, delta_(m+s,2m,k)) for k >= 1."""
    if p.first or p.mu_s:
        return False
    mu = p.mu_t
    k = len(mu)
    return mu == staircase(m - s, 2 * m, k) or (k >= 1 and mu == staircase(m + s, 2 * m, k))


def tgen_involution(m: int, s: int, p: ColoredPair) -> MapTrace | FixedPoint:
    """Cases 1 and 2 pair elements of opposite sign; Case 3 is left as a FixedPoint."""
    check_ms(m, s)
    if not in_a(m, s, p):
        raise DomainViolation(f"{p} is not in A(n) for m={m}, s={s}")
    if p.lam_s or p.mu_s:
        lam, mu, tag = move_largest(p.lam_s, p.mu_s)
        return MapTrace(p, p.with_(lam_s=lam, mu_s=mu), "case1." + tag)
    counts = p.mu_t.multiplicities()
    repeated = [v for v, c in counts.items() if c >= 2]
    if p.lam_t or repeated:
        a = p.lam_t.largest()
        b = max(repeated, default=0)
        if a < 2 * b:
            out = p.with_(lam_t=p.lam_t.union((2 * b,)), mu_t=p.mu_t.diff((b, b)))
            return MapTrace(p, out, "case2.i")
        out = p.with_(lam_t=p.lam_t.diff((a,)), mu_t=p.mu_t.union((a // 2, a // 2)))
        return MapTrace(p, out, "case2.ii")
    return FixedPoint(p, "case3", is_survivor(m, s, p))


def survivor_census(m: int, s: int, n: int) -> dict:
    """Signed counts over A(n), over Case 3, and over the explicit survivors."""
    total = case3 = surv = 0
    for p in a_set(m, s, n):
        total += p.sign
        r = tgen_involution(m, s, p)
        if isinstance(r, FixedPoint):
            case3 += p.sign
            if r.survivor:
                surv += p.sign
    return {"n": n, "signed_total": total, "signed_case3": case3, "signed_survivors": surv}
