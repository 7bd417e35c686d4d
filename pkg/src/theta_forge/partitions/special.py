"""Counts of the special partition families, by filtered enumeration."""
from __future__ import annotations

from typing import Callable, Mapping

from ..errors import ParameterDomain, UnknownStatistic
from .constraint import Constraint, count, counts, iter_partitions, pm_class
from .partition import Partition, staircase
from .stats import durfee_height, mex_mod, modular_rows

REGULAR3 = Constraint(forbidden_divisor=3)
ODD = Constraint(modulus=2, residues={1})


def _int(params, key, least=None):
    if key not in params:
        raise ParameterDomain(f"missing parameter {key}")
    try:
        v = int(params[key])
    except (TypeError, ValueError):
        raise ParameterDomain(f"{key} must be an integer") from None
    if least is not None and v < least:
        raise ParameterDomain(f"{key} must be at least {least}, got {v}")
    return v


# -- excludant families ---------------------------------------------------------

def is_mk_member(p: Partition, k: int) -> bool:
    """k is the least missing integer and more parts exceed k than fall below it."""
    have = set(p)
    if k in have or any(i not in have for i in range(1, k)):
        return False
    above = sum(1 for x in p if x > k)
    return above > len(p) - above


def is_xia_zhao_member(p: Partition, k: int) -> bool:
    """1..k all occur and the smallest part above k occurs at least k+1 times."""
    have = set(p)
    if any(i not in have for i in range(1, k + 1)):
        return False
    above = [x for x in p if x > k]
    return bool(above) and p.count(above[-1]) >= k + 1


# -- Durfee-rectangle families ---------------------------------------------------

def is_b3_member(p: Partition, i: int, k: int) -> bool:
    """Membership of a 3-regular partition in the family B_3^i for parameter k.

    The parts 3t+i (0 <= t <= k) must all occur in the residue-i slice, and the
    first row of its 3-modular diagram below the (k+2, 3)-Durfee rectangle must
    be shorter than the rectangle's width.
    """
    mu = p.slice(i, 3)
    have = set(mu)
    if any(3 * t + i not in have for t in range(k + 1)):
        return False
    a = durfee_height(mu, k)
    rows = modular_rows(mu, 3)
    below = rows[a] if a < len(rows) else 0
    return below < a + k + 2


def b3_count(n: int, i: int, k: int) -> int:
    return sum(1 for p in iter_partitions(n, REGULAR3) if is_b3_member(p, i, k))


def b3_star_count(n: int, i: int, k: int) -> int:
    """lambda^(0,3) distinct and the 3-regular remainder in B_3^i."""
    dist3 = Constraint(modulus=3, residues={0}, distinct=True)
    return sum(count(t, dist3) * b3_count(n - t, i, k) for t in range(0, n + 1, 3))


# -- modulus 5 and 10 families -----------------------------------------------------

D5 = Constraint(distinct=True, forbidden_divisor=5)


def c_pair_count(n: int, a: int, b: int) -> int:
    """Pairs (lambda, mu): lambda distinct avoiding +-a, +-b mod 10; mu distinct multiples of 5."""
    if not (0 < a < 10 and 0 < b < 10) or (a - b) % 10 == 0 or (a + b) % 10 == 0:
        raise ParameterDomain(f"need 0 < a, b < 10 with a != +-b mod 10, got {a}, {b}")
    banned = {a % 10, (-a) % 10, b % 10, (-b) % 10}
    lam = Constraint(modulus=10, residues=set(range(10)) - banned, distinct=True)
    mu = Constraint(modulus=5, residues={0}, distinct=True)
    lam_counts = counts(n, lam)
    mu_counts = counts(n, mu)
    return sum(lam_counts[t] * mu_counts[n - t] for t in range(n + 1))


def d5_parity_count(n: int, parity: int) -> int:
    return sum(1 for p in iter_partitions(n, D5) if len(p) % 2 == parity)


# -- odd-part excludant classes -------------------------------------------------------

def qbar_count(n: int, A: int, a: int) -> int:
    """Odd-part partitions whose mex_(A,a) is congruent to A+a modulo 2A."""
    return sum(1 for p in iter_partitions(n, ODD) if mex_mod(p, A, a) % (2 * A) == (A + a) % (2 * A))


def odd_mex_count(n: int, A: int, a: int, value: int) -> int:
    return sum(1 for p in iter_partitions(n, ODD) if mex_mod(p, A, a) == value)


# -- mod 5 tail families --------------------------------------------------------------

def _delta_diff(S, big, small):
    return list(staircase(S, 5, big).diff(staircase(S, 5, small)))


def u_set_pieces(xi: str, S: int, sign: int, j: int):
    """(companion partition, residue class, capped value, cap, exact) summands for index j."""
    key = (xi, S, sign)
    if key == ("g", 1, 1):
        return [([5 * j + 1] * j + list(staircase(1, 5, j)), 1, 1, 6 * j, False)]
    if key == ("h", 2, 1):
        return [([5 * (j - 1) + 2] * j + list(staircase(2, 5, j)), 2, 2, 6 * j, False)]
    if key == ("g", 1, -1):
        return [([5 * j + 1] * (j - 1) + list(staircase(1, 5, j)) + [4], 1, 1, 6 * j - 2, False)]
    if key == ("h", 2, -1):
        return [([5 * (j - 1) + 2] * (j - 1) + list(staircase(2, 5, j)) + [3], 2, 2, 6 * j - 2, False)]
    if key == ("g", 2, 1):
        return [(_delta_diff(4, 2 * j - 1, j - 1), 1, 1, 12 * j + 1, False)]
    if key == ("g", 2, -1):
        return [(_delta_diff(4, 2 * j - 2, j - 1) + [5 * (j - 1) + 1], 1, 1, 12 * j - 3, False)]
    if key == ("h", 1, 1):
        return [
            (_delta_diff(2, 2 * j, j), 2, 2, 3 * j - 2, False),
            (_delta_diff(3, 2 * j + 1, j + 2) + [5 * j + 3], 2, 3, 1, True),
        ]
    if key == ("h", 1, -1):
        return [
            (_delta_diff(2, 2 * j - 1, j) + [5 * (j - 1) + 3], 2, 2, 3 * j - 3, False),
            (_delta_diff(3, 2 * j, j + 1) + [5 * (j - 1) + 2], 2, 3, 1, True),
        ]
    raise ParameterDomain(f"no tail family for xi={xi!r}, S={S}, sign={sign}")


def u_set_count(n: int, xi: str, S: int, sign: int, k: int) -> int:
    """Size of the pair family read off the tail generating function."""
    total = 0
    j = k
    while True:
        pieces = u_set_pieces(xi, S, sign, j)
        sizes = [sum(comp) for comp, *_ in pieces]
        if min(sizes) > n:
            break
        for (comp, res, val, cap, exact), size in zip(pieces, sizes):
            if size > n or cap < 0:
                continue
            fam = pm_class(res, 5).with_(max_multiplicity={val: cap})
            if exact:
                fam = fam.with_(required_parts=(val,) * cap)
            total += count(n - size, fam)
        j += 1
    return total


# -- registry -------------------------------------------------------------------------

def _mk(n, params):
    k = _int(params, "k", 1)
    c = Constraint(required_parts=tuple(range(1, k)), max_multiplicity={k: 0})
    return sum(1 for p in iter_partitions(n, c) if is_mk_member(p, k))


def _xz(n, params):
    k = _int(params, "k", 1)
    c = Constraint(required_parts=tuple(range(1, k + 1)))
    return sum(1 for p in iter_partitions(n, c) if is_xia_zhao_member(p, k))


_REGISTRY: dict[str, Callable[[int, Mapping], int]] = {
    "M_k": _mk,
    "xia_zhao": _xz,
    "B3": lambda n, p: b3_count(n, _int(p, "i", 1), _int(p, "k", 0)),
    "B3_star": lambda n, p: b3_star_count(n, _int(p, "i", 1), _int(p, "k", 0)),
    "D5": lambda n, p: count(n, D5),
    "D5_even": lambda n, p: d5_parity_count(n, 0),
    "D5_odd": lambda n, p: d5_parity_count(n, 1),
    "C": lambda n, p: c_pair_count(n, _int(p, "a"), _int(p, "b")),
    "Qbar": lambda n, p: qbar_count(n, _int(p, "A", 1), _int(p, "a", 1)),
    "odd_mex": lambda n, p: odd_mex_count(n, _int(p, "A", 1), _int(p, "a", 1), _int(p, "value", 1)),
    "u_set": lambda n, p: u_set_count(
        n, str(p.get("xi", "")), _int(p, "S", 1), _int(p, "sign", -1), _int(p, "k", 1)
    ),
}


def special_names() -> list[str]:
    return sorted(_REGISTRY)


def special_count(name: str, n: int, params: Mapping | None = None) -> int:
    """Exact size of a named family at n; zero for negative n.

    >>> special_count("D5", 6)
    3
    """
    if name not in _REGISTRY:
        raise UnknownStatistic(name)
    if n < 0:
        return 0
    return _REGISTRY[name](n, dict(params or {}))
