"""Named checks with parameter schemas and default grids."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .._backend import default_order
from ..errors import ParameterDomain, ThetaForgeError, UnknownCheck
from ..report import CheckReport
from . import checks as C

REQUIRED = object()


@dataclass(frozen=True)
class Row:
    name: str
    fn: Callable[[dict, int], CheckReport]
    params: dict  # name -> default (REQUIRED when there is none)
    grid: Callable[[], list]
    tag: str | Callable[[dict], str] = "theorem"
    summary: str = ""
    types: dict = field(default_factory=dict)

    def tag_for(self, params: dict) -> str:
        return self.tag(params) if callable(self.tag) else self.tag


def _rs(include_half=True, small_only=False):
    out = []
    for R in range(2, 8):
        for S in range(1, R):
            if not include_half and 2 * S == R:
                continue
            if small_only and 2 * S >= R:
                continue
            out.append({"R": R, "S": S})
    return out


def _ms(m_lo=2, m_hi=7):
    return [{"m": m, "s": s} for m in range(m_lo, m_hi + 1) for s in range(1, m)]


def _ks(lo, hi, **extra):
    return [{"k": k, **extra} for k in range(lo, hi + 1)]


def _with_k(base, lo, hi):
    return [{**b, "k": k} for b in base for k in range(lo, hi + 1)]


U_FAMILIES = [(xi, S, sign) for xi in ("g", "h") for S in (1, 2) for sign in (1, -1)]

_ROWS = [
    Row("euler_pentagonal", C.euler_pentagonal, {}, lambda: [{}],
        summary="pentagonal sum equals (q;q)_inf"),
    Row("shanks_trunc", C.shanks_trunc, {"k": REQUIRED}, lambda: _ks(1, 6),
        summary="finite pentagonal sum equals the Shanks finite sum"),
    Row("shanks_ineq_xz", C.shanks_ineq_xz, {"k": REQUIRED, "n_max": 40}, lambda: _ks(1, 4),
        summary="signed pentagonal shifts of p(n) are >= 0 and count the Xia-Zhao family"),
    Row("andrews_merca", C.andrews_merca, {"k": REQUIRED, "n_max": 40}, lambda: _ks(1, 4),
        summary="Andrews-Merca truncation and the M_k(n) count"),
    Row("wang_yee_nonneg", C.wang_yee_nonneg, {"R": REQUIRED, "S": REQUIRED, "m": REQUIRED},
        lambda: [{**rs, "m": m} for rs in _rs(small_only=True) for m in range(1, 6)],
        summary="both signed triple product truncations are >= 0"),
    Row("conj43", C.conj43, {"S": REQUIRED, "R": REQUIRED, "k": REQUIRED},
        lambda: _with_k(_rs(), 1, 8), tag=lambda p: "theorem" if p["k"] <= 3 else "conjecture",
        summary="a_(S,R,k) has non-negative coefficients"),
    Row("ak_yk", C.ak_yk, {"S": REQUIRED, "R": REQUIRED, "k": REQUIRED}, lambda: _with_k(_rs(), 0, 6),
        summary="a_k + a_(k+1) = y_k"),
    Row("a13_b3", C.a13_b3, {"k": REQUIRED, "n_max": 60}, lambda: _ks(1, 6),
        summary="a_(1,3,k) from 3-regular counts and rho_3"),
    Row("mk_gf", C.mk_gf, {"k": REQUIRED, "n_max": 40}, lambda: _ks(1, 4),
        summary="(q^3;q^3) times the M_k series is the (1,3) truncation"),
    Row("conj_2s", C.conj_2s, {"k": REQUIRED}, lambda: _ks(1, 8), tag="conjecture",
        summary="the modulus-2 truncation has non-negative coefficients"),
    Row("cor_bq", C.cor_bq, {}, lambda: [{}], summary="six linear inequalities for b_3 and Q"),
    Row("prop_mex", C.prop_mex, {"n_max": 50}, lambda: [{}],
        summary="odd-part mex classes dominate Q(n-1)"),
    Row("b3_identity", C.b3_identity, {"k": REQUIRED, "n_max": 40}, lambda: _ks(1, 5),
        summary="H_1 + H_2 equals the 3-regular truncation and counts B_3^1, B_3^2"),
    Row("b3_thm", C.b3_thm, {"k": REQUIRED}, lambda: _ks(1, 6),
        summary="3-regular pentagonal inequality"),
    Row("b6_thm", C.b6_thm, {"k": REQUIRED, "n_max": 30}, lambda: _ks(1, 5),
        summary="6-regular pentagonal inequality with strictness"),
    Row("b6_strict_remark", C.b6_strict_remark, {"k": REQUIRED}, lambda: _ks(1, 5),
        summary="strictness fails somewhere at or above k(3k+1)/2"),
    Row("ck_threshold", C.ck_threshold, {"k": REQUIRED}, lambda: _ks(1, 6),
        summary="least n_0 with c_k(n) >= 0 on [n_0, N]"),
    Row("tgen", C.tgen, {"m": REQUIRED, "s": REQUIRED}, lambda: _ms(),
        summary="theta quotient with modulus 2m equals sum q^(n(mn+s))"),
    Row("staircase_id", C.staircase_id, {"m": REQUIRED, "s": REQUIRED}, lambda: _ms(),
        summary="(-q^(m+s), -q^(m-s), q^(2m); q^(2m)) equals sum q^(n(mn+s))"),
    Row("tgen_survivors", C.tgen_survivors, {"m": REQUIRED, "s": REQUIRED, "n_max": 30},
        lambda: _ms(3, 5), summary="involution on A(n) and the signed survivor census"),
    Row("kmr38", C.kmr38, {"a": REQUIRED}, lambda: [{"a": 1}, {"a": 3}],
        summary="product support is {j : 16j + a^2 square}"),
    Row("d5_thm", C.d5_thm, {"n_max": 80}, lambda: [{}],
        summary="distinct 5-regular partitions split by length parity"),
    Row("wsf1", C.wsf1, {}, lambda: [{}], summary="first modulus-10 theta identity"),
    Row("wsf2", C.wsf2, {}, lambda: [{}], summary="second modulus-10 theta identity"),
    Row("tplus_nonneg", C.tplus_nonneg, {"R": REQUIRED, "S": REQUIRED, "k": REQUIRED},
        lambda: _with_k(_rs(), 1, 4), summary="T_+ >= 0, direct and rewritten forms agree"),
    Row("tminus_nonpos", C.tminus_nonpos, {"R": REQUIRED, "S": REQUIRED, "k": REQUIRED},
        lambda: _with_k(_rs(), 1, 4), summary="T_- <= 0, direct and rewritten forms agree"),
    Row("conj615_third", C.conj615_third, {"R": REQUIRED, "S": REQUIRED, "k": REQUIRED},
        lambda: _with_k(_rs(), 1, 4), tag="conjecture", summary="T_- + T_+ >= 0 scan"),
    Row("merca_u", C.merca_u,
        {"xi": REQUIRED, "S": REQUIRED, "sign": REQUIRED, "k": REQUIRED, "n_max": 50},
        lambda: [{"xi": x, "S": S, "sign": g, "k": k} for x, S, g in U_FAMILIES for k in (1, 2, 3)],
        types={"xi": str}, summary="mod-5 tail sums equal their pair-family counts"),
]

REGISTRY = {r.name: r for r in _ROWS}
TAGS = ("theorem", "conjecture")


def check_names() -> list[str]:
    return [r.name for r in _ROWS]


def get_row(name: str) -> Row:
    if name not in REGISTRY:
        raise UnknownCheck(name)
    return REGISTRY[name]


def validate(row: Row, params: dict) -> dict:
    """Fill defaults, coerce types and reject unknown or missing keys."""
    params = dict(params or {})
    extra = set(params) - set(row.params)
    if extra:
        raise ParameterDomain(f"{row.name} does not take {sorted(extra)}")
    out = {}
    for key, default in row.params.items():
        if key in params:
            typ = row.types.get(key, int)
            try:
                out[key] = typ(params[key])
            except (TypeError, ValueError):
                raise ParameterDomain(f"{key} must be {typ.__name__}, got {params[key]!r}") from None
        elif default is REQUIRED:
            raise ParameterDomain(f"{row.name} needs parameter {key}")
        else:
            out[key] = default
    return out


def run_check(name: str, params: dict | None = None, N: int | None = None) -> CheckReport:
    """Run one row exactly; ParameterDomain propagates for invalid parameters."""
    row = get_row(name)
    N = default_order() if N is None else int(N)
    if N < 0:
        raise ParameterDomain(f"order must be non-negative, got {N}")
    return row.fn(validate(row, params), N)


def _normalise_tags(tags) -> set:
    if tags is None:
        return set(TAGS)
    if isinstance(tags, str):
        tags = [tags]
    out = set()
    for t in tags:
        t = str(t).lower().rstrip("s")
        if t == "all":
            out |= set(TAGS)
        elif t in TAGS:
            out.add(t)
        elif t in ("none", ""):
            continue
        else:
            raise ParameterDomain(f"unknown tag {t!r}")
    return out


def suite_plan(tags=None) -> list[tuple[str, dict]]:
    wanted = _normalise_tags(tags)
    plan = []
    for row in _ROWS:
        for p in row.grid():
            full = validate(row, p)
            if row.tag_for(full) in wanted:
                plan.append((row.name, p))
    return plan


def run_suite(tags=None, N: int | None = None, progress: Callable | None = None) -> list[CheckReport]:
    """Run every default-grid entry whose tag is selected, in registry order."""
    out = []
    for name, p in suite_plan(tags):
        try:
            r = run_check(name, p, N)
        except ThetaForgeError as exc:
            r = CheckReport(name, p, (0, N), "fail", {"index": None, "expected": "ran", "actual": str(exc)})
        out.append(r)
        if progress:
            progress(r)
    return out


def threshold_scan(name: str, params: dict | None = None, N: int | None = None) -> CheckReport:
    if name != "ck_threshold":
        raise UnknownCheck(f"{name} has no threshold form")
    return run_check(name, params, N)
