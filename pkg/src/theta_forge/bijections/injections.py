"""The injections phi_1 : Y_0(n) -> Y_1(n) and phi_2 : B_1(n) -> Y_2(n).

Y_k(n) holds pairs (lambda, delta_(R-S,R,k)) of total size n where lambda has
parts congruent to +-S mod R and at most 2k parts equal to S. B_1(n) is what
phi_1 misses in Y_1(n).
"""
from __future__ import annotations

import math
from itertools import combinations

from ..errors import DomainViolation, NotSubMultiset, ParameterDomain
from ..partitions import Partition, iter_partitions, pm_class, staircase
from .pairs import MapTrace, PartitionPair

BRANCHES_SMALL = ("i", "ii", "iii.a", "iii.b.1", "iii.b.2", "iii.b.3")
BRANCHES_LARGE = ("I", "II", "III", "IV.1", "IV.2", "IV.3")


def check_rs(R: int, S: int) -> None:
    if not 1 <= S < R:
        raise ParameterDomain(f"need 1 <= S < R, got R={R}, S={S}")
    if 2 * S == R:
        raise DomainViolation("the maps need S != R/2")


def branches(R: int, S: int) -> tuple[str, ...]:
    return BRANCHES_SMALL if 2 * S < R else BRANCHES_LARGE


def stair(R: int, S: int, k: int) -> Partition:
    return staircase(R - S, R, k)


def in_y(k: int, R: int, S: int, p: PartitionPair) -> bool:
    if p.second != stair(R, S, k):
        return False
    lam = p.first
    allowed = {S % R, (-S) % R}
    return all(x % R in allowed for x in lam) and lam.count(S) <= 2 * k


def y_set(k: int, R: int, S: int, n: int) -> list[PartitionPair]:
    delta = stair(R, S, k)
    rest = n - delta.size
    if rest < 0:
        return []
    fam = pm_class(S, R).with_(max_multiplicity={S: 2 * k})
    return [PartitionPair(lam, delta) for lam in iter_partitions(rest, fam)]


# -- phi_1 ------------------------------------------------------------------------

def phi1(R: int, S: int, p: PartitionPair) -> MapTrace:
    """Case I drops a part R-S; Case II splits the last part into (last - R, S)."""
    check_rs(R, S)
    if not in_y(0, R, S, p) or p.n == 0:
        raise DomainViolation(f"{p} is not in Y_0(n) with n >= 1")
    lam = p.first
    if lam.count(R - S) >= 1:
        return MapTrace(p, PartitionPair(lam.diff((R - S,)), stair(R, S, 1)), "I")
    last = lam[-1]
    mu = lam.diff((last,)).union((last - R, S))
    return MapTrace(p, PartitionPair(mu, stair(R, S, 1)), "II")


def phi1_inverse(R: int, S: int, p: PartitionPair) -> PartitionPair | None:
    """Preimage of p under phi_1, or None when p is not in the image."""
    check_rs(R, S)
    if not in_y(1, R, S, p):
        return None
    mu = p.first
    if mu.count(S) == 0:
        cand = mu.union((R - S,))
    else:
        rest = mu.diff((S,))
        if not rest:
            return None
        y = rest[-1]
        cand = rest.diff((y,)).union((y + R,))
    pre = PartitionPair(cand, ())
    if not in_y(0, R, S, pre) or pre.n == 0:
        return None
    return pre if phi1(R, S, pre).output == p else None


def in_b1(R: int, S: int, p: PartitionPair) -> bool:
    return in_y(1, R, S, p) and phi1_inverse(R, S, p) is None


# -- phi_2 ------------------------------------------------------------------------

def _positive(parts) -> bool:
    return all(x > 0 for x in parts)


def _split_tail(R: int, S: int, xi: Partition, prefix: str) -> tuple[Partition, str]:
    """Shared tail of Case (iii)(b) and Case (IV) once xi (or zeta) is formed."""
    ell = len(xi)
    if ell == 2 or (
        ell >= 4
        and xi.from_end(3) - xi.from_end(2) < R
        and xi.from_end(4) - xi.from_end(3) < R
    ):
        return xi, prefix + ".1"
    if ell < 3:
        raise DomainViolation(f"{list(xi)} is too short for the split")
    x = xi.from_end(2)
    if x <= 2 * R + S:
        new = (x - R, R - S, S)
        tag = prefix + ".2"
    else:
        new = (x - 2 * R, R - S, R - S, S, S)
        tag = prefix + ".3"
    if not _positive(new):
        raise DomainViolation(f"split of {x} leaves a non-positive part")
    return xi.diff((x,)).union(new), tag


def _phi2_core(R: int, S: int, lam: Partition) -> tuple[Partition, str]:
    mS, mR = lam.count(S), lam.count(R - S)
    small = 2 * S < R
    try:
        if mR >= 2:
            return lam.diff((R - S, R - S, S)), "i" if small else "I"
        if mR == 0 and mS == 1:
            if len(lam) < 3:
                raise DomainViolation("needs at least three parts")
            a, b = lam.from_end(1), lam.from_end(2)
            mu = lam.diff((a, b)).union((a - R, b - R, S))
            if a - R <= 0:
                raise DomainViolation("shift leaves a non-positive part")
            return mu, "ii" if small else "II"
        if mR == 1 and mS == 2:
            x = lam.from_end(3)
            if x == math.inf or x - R <= 0:
                raise DomainViolation("needs a fourth-from-last part above R")
            return lam.diff((x, R - S)).union((x - R,)), "iii.a" if small else "III"
        if small and mR == 1 and mS == 1:
            xi = lam.diff((R + S, R - S)).union((S,))
            return _split_tail(R, S, xi, "iii.b")
        if not small and mR == 0 and mS == 2:
            zeta = lam.diff((2 * R - S,))
            return _split_tail(R, S, zeta, "IV")
    except NotSubMultiset as exc:
        raise DomainViolation(f"no branch applies to {list(lam)}: {exc}") from None
    raise DomainViolation(f"no branch applies to {list(lam)} (m(S)={mS}, m(R-S)={mR})")


def phi2(R: int, S: int, p: PartitionPair) -> MapTrace:
    """Apply the case analysis of phi_2 to an element of B_1(n)."""
    check_rs(R, S)
    if p.n in (0, R, 2 * R):
        raise DomainViolation(f"phi_2 is not defined for n = {p.n}")
    if not in_b1(R, S, p):
        raise DomainViolation(f"{p} is not in B_1(n)")
    mu, tag = _phi2_core(R, S, p.first)
    return MapTrace(p, PartitionPair(mu, stair(R, S, 2)), tag)


def image_condition(R: int, S: int, tag: str, mu: Partition) -> bool:
    """The printed description of the image of one phi_2 branch."""
    m, mr, ell = mu.count(S), mu.count(R - S), len(mu)

    def gap(i):  # mu_(l-i) - mu_(l-i+1)
        return mu.from_end(i) - mu.from_end(i - 1)

    if tag in ("i", "I"):
        return m in (0, 1)
    if tag == "ii":
        return ell >= 4 and gap(4) >= R and gap(3) < R and 2 <= m <= 4
    if tag == "iii.a":
        return ell >= 3 and gap(3) >= R and 2 <= m <= 3
    if tag in ("iii.b.1", "IV.1"):
        return ell != 3 and (ell < 4 or (gap(4) < R and gap(3) < R)) and m == 2
    if tag == "iii.b.2":
        return ell >= 5 and (m, mr) in {(3, 1), (3, 2), (4, 1)} and gap(4) < R and gap(5) >= R
    if tag == "iii.b.3":
        return ell >= 7 and m == 4 and 2 <= mr <= 3 and gap(7) >= 2 * R
    if tag == "II":
        wide = 2 * R - 2 * S if m == mr == 2 else R
        return ell >= 4 and 2 <= m <= 4 and (m, mr) != (2, 1) and gap(4) >= wide and gap(3) < R
    if tag == "III":
        wide = 2 * R - 2 * S if mr == 1 else R
        return ell >= 3 and 2 <= m <= 3 and gap(3) >= wide
    if tag == "IV.2":
        wide = 2 * R - 2 * S if (m, mr) in {(3, 1), (3, 2)} else R
        return ell >= 5 and (m, mr) in {(3, 1), (3, 2), (4, 1)} and gap(4) < R and gap(5) >= wide
    if tag == "IV.3":
        return ell >= 7 and m == 4 and mr == 2 and gap(7) >= 2 * R
    raise ParameterDomain(f"unknown branch {tag!r}")


def _safe(fn):
    try:
        return fn()
    except (NotSubMultiset, ValueError):
        return None


def _undo_split(R, S, mu, tag):
    """Candidates for xi (or zeta) given the output of a split sub-branch."""
    if tag.endswith(".1"):
        return [mu]
    out = []
    for y in set(mu):
        if tag.endswith(".2"):
            c = _safe(lambda: mu.diff((y, R - S, S)).union((y + R,)))
        else:
            c = _safe(lambda: mu.diff((y, R - S, R - S, S, S)).union((y + 2 * R,)))
        if c is not None:
            out.append(c)
    return out


def _candidates(R: int, S: int, tag: str, mu: Partition) -> list[Partition]:
    if tag in ("i", "I"):
        return [mu.union((R - S, R - S, S))]
    if tag in ("ii", "II"):
        rest = _safe(lambda: mu.diff((S,)))
        if rest is None:
            return []
        cands = set()
        for i, j in combinations(range(len(rest)), 2):
            parts = list(rest)
            parts[i] += R
            parts[j] += R
            cands.add(Partition(parts))
        return list(cands)
    if tag in ("iii.a", "III"):
        return [mu.diff((y,)).union((y + R, R - S)) for y in set(mu)]
    if tag.startswith("iii.b"):
        return [
            c for xi in _undo_split(R, S, mu, tag)
            if (c := _safe(lambda: xi.diff((S,)).union((R + S, R - S)))) is not None
        ]
    if tag.startswith("IV"):
        return [zeta.union((2 * R - S,)) for zeta in _undo_split(R, S, mu, tag)]
    raise ParameterDomain(f"unknown branch {tag!r}")


def phi2_inverse(R: int, S: int, p: PartitionPair, tag: str | None = None) -> list[PartitionPair]:
    """All preimages of p under phi_2 (at most one when phi_2 is injective)."""
    check_rs(R, S)
    if not in_y(2, R, S, p) or p.n in (0, R, 2 * R):
        return []
    found = []
    for t in ([tag] if tag else branches(R, S)):
        for lam in _candidates(R, S, t, p.first):
            pre = PartitionPair(lam, stair(R, S, 1))
            if not in_b1(R, S, pre):
                continue
            try:
                tr = phi2(R, S, pre)
            except DomainViolation:
                continue
            if tr.output == p and tr.case_tag == t and pre not in found:
                found.append(pre)
    return found


def in_b2(R: int, S: int, p: PartitionPair) -> bool:
    return in_y(2, R, S, p) and p.n not in (0, R, 2 * R) and not phi2_inverse(R, S, p)


def residual_set(level: int, R: int, S: int, n: int) -> list[PartitionPair]:
    """B_1(n) or B_2(n): the part of Y_level(n) not hit by the previous map."""
    check_rs(R, S)
    if level == 1:
        images = {phi1(R, S, p).output for p in y_set(0, R, S, n) if n >= 1}
        return [p for p in y_set(1, R, S, n) if p not in images]
    if level == 2:
        if n in (0, R, 2 * R):
            raise DomainViolation(f"B_2 is not defined for n = {n}")
        images = {phi2(R, S, p).output for p in residual_set(1, R, S, n)}
        return [p for p in y_set(2, R, S, n) if p not in images]
    raise ParameterDomain(f"level must be 1 or 2, got {level}")


def b1_witness(R: int, S: int, m: int) -> PartitionPair:
    """Explicit element of B_1(mR) for m = 1, 2 or m >= 12."""
    if m == 1:
        parts = (S,)
    elif m == 2:
        parts = (R - S, S, S)
    elif m >= 12:
        parts = ((m - 3) * R + S, R - S, R - S, S, S)
    else:
        raise ParameterDomain(f"no explicit witness for m = {m}")
    return PartitionPair(parts, stair(R, S, 1))


def b2_witness(R: int, S: int, m: int) -> PartitionPair:
    """Explicit element of B_2(mR) for m = 5, 7 or m >= 22."""
    if m == 5:
        parts = (R - S,) * 2 + (S,) * 4
    elif m == 7:
        parts = (R + S,) + (R - S,) * 3 + (S,) * 4
    elif m >= 22:
        parts = ((m - 8) * R - S,) + (R + S,) * 2 + (R - S,) * 3 + (S,) * 4
    else:
        raise ParameterDomain(f"no explicit witness for m = {m}")
    return PartitionPair(parts, stair(R, S, 2))


def audit_phi1(R: int, S: int, n_max: int) -> dict:
    """First failures of totality, injectivity and Case I/II disjointness up to n_max."""
    check_rs(R, S)
    out = {"total": None, "injective": None, "disjoint": None, "checked": 0}
    for n in range(1, n_max + 1):
        seen = {}
        for p in y_set(0, R, S, n):
            try:
                tr = phi1(R, S, p)
            except DomainViolation as exc:
                out["total"] = out["total"] or {"n": n, "input": repr(p), "error": str(exc)}
                continue
            out["checked"] += 1
            if tr.output in seen and out["injective"] is None:
                out["injective"] = {"n": n, "inputs": [repr(seen[tr.output]), repr(p)]}
            seen[tr.output] = p
            case_by_image = "II" if tr.output.first.count(S) else "I"
            if case_by_image != tr.case_tag and out["disjoint"] is None:
                out["disjoint"] = {"n": n, "input": repr(p), "tag": tr.case_tag}
    return out


def audit_phi2(R: int, S: int, n_max: int) -> dict:
    """First failures of the phi_2 checks up to n_max.

    total: some element of B_1(n) has no applicable branch; injective: two
    inputs share an output; own_image: an output misses its branch's printed
    description; disjoint: an output also meets another branch's description.
    """
    check_rs(R, S)
    keys = ("total", "injective", "own_image", "disjoint")
    out = {k: None for k in keys}
    out["checked"] = 0
    out["tags"] = {t: 0 for t in branches(R, S)}
    for n in range(1, n_max + 1):
        if n in (R, 2 * R):
            continue
        seen = {}
        for p in residual_set(1, R, S, n):
            try:
                tr = phi2(R, S, p)
            except DomainViolation as exc:
                out["total"] = out["total"] or {"n": n, "input": repr(p), "error": str(exc)}
                continue
            out["checked"] += 1
            out["tags"][tr.case_tag] += 1
            mu = tr.output.first
            if tr.output in seen and out["injective"] is None:
                a, ta = seen[tr.output]
                out["injective"] = {
                    "n": n, "output": repr(tr.output),
                    "inputs": [f"{a!r} [{ta}]", f"{p!r} [{tr.case_tag}]"],
                }
            seen[tr.output] = (p, tr.case_tag)
            if out["own_image"] is None and not image_condition(R, S, tr.case_tag, mu):
                out["own_image"] = {"n": n, "input": repr(p), "output": repr(tr.output), "tag": tr.case_tag}
            if out["disjoint"] is None:
                others = [t for t in branches(R, S) if t != tr.case_tag and image_condition(R, S, t, mu)]
                if others:
                    out["disjoint"] = {
                        "n": n, "output": repr(tr.output), "tag": tr.case_tag, "also": others,
                    }
    return out
