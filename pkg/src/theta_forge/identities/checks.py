"""Row implementations: each takes validated params and an order N, returns a CheckReport."""
from __future__ import annotations

import math
import time
from functools import lru_cache

from .. import qseries as qs
from ..bijections import survivor_census, tgen_involution, a_set, verify_map
from ..partitions import count
from ..partitions import special_count as _special_count
from ..partitions.special import REGULAR3
from ..qseries import TruncatedSeries, apply_product, poch, pochhammer_product
from ..report import CheckReport


class Outcome:
    """Accumulates the first witness while a row runs."""

    def __init__(self):
        self.witness = None
        self.detail = []
        self.extra = {}

    def fail(self, index, expected, actual, what=""):
        if self.witness is None:
            self.witness = {"index": index, "expected": _num(expected), "actual": _num(actual)}
            if what:
                self.witness["what"] = what
        return self

    @property
    def ok(self):
        return self.witness is None


def _num(x):
    if isinstance(x, int) and abs(x) >= 2**53:
        return str(x)
    return x


def report(name, params, rng, out: Outcome, start, tag="theorem", **kw) -> CheckReport:
    return CheckReport(
        name=name,
        params=dict(params),
        range=tuple(rng),
        status="pass" if out.ok else "fail",
        witness=out.witness,
        runtime_ms=int(1000 * (time.perf_counter() - start)),
        tag=tag,
        detail="; ".join(out.detail),
        extra=out.extra,
        **kw,
    )


# -- comparators --------------------------------------------------------------------

def equal(out: Outcome, lhs, rhs, lo=0, hi=None, what=""):
    """Exact coefficientwise equality of two series or sequences on [lo, hi]."""
    a = lhs.coeffs if isinstance(lhs, TruncatedSeries) else lhs
    b = rhs.coeffs if isinstance(rhs, TruncatedSeries) else rhs
    hi = min(len(a), len(b)) - 1 if hi is None else hi
    for n in range(lo, hi + 1):
        if a[n] != b[n]:
            return out.fail(n, b[n], a[n], what)
    return out


def signed(out: Outcome, s, sign=1, lo=0, hi=None, strict_from=None, what=""):
    """sign * coefficient >= 0 on [lo, hi], and > 0 from strict_from on."""
    c = s.coeffs if isinstance(s, TruncatedSeries) else s
    hi = len(c) - 1 if hi is None else hi
    rel = ">= 0" if sign > 0 else "<= 0"
    for n in range(lo, hi + 1):
        v = sign * c[n]
        if v < 0:
            return out.fail(n, rel, c[n], what)
        if strict_from is not None and n >= strict_from and v == 0:
            return out.fail(n, rel.replace("=", "").strip() + " (strict)", c[n], what)
    return out


def rho(R: int, order: int) -> list[int]:
    """rho_R(n) = (-1)^i when n = R i(3i-1)/2 for some integer i, else 0."""
    out = [0] * (order + 1)
    i = 0
    while True:
        hit = False
        for j in {i, -i}:
            e = R * j * (3 * j - 1) // 2
            if e <= order:
                out[e] = -1 if j % 2 else 1
                hit = True
        if not hit:
            return out
        i += 1


def pent(j: int) -> int:
    return j * (3 * j - 1) // 2


def at(seq, n):
    return seq[n] if 0 <= n < len(seq) else 0


def sgn(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def _cached_count(name, n, frozen):
    return _special_count(name, n, dict(frozen))


def special_count(name, n, params=None):
    """Memoised family count; several rows share the same enumerations."""
    return _cached_count(name, n, tuple(sorted((params or {}).items())))


@lru_cache(maxsize=8)
def b3_counts(n_max: int) -> tuple:
    """3-regular partition counts by the enumeration engine (independent of the series code)."""
    return tuple(count(n, REGULAR3) for n in range(n_max + 1))


# -- pentagonal family ----------------------------------------------------------------

def euler_pentagonal(p, N):
    t = time.perf_counter()
    out = equal(Outcome(), qs.pentagonal_series(1, N), pochhammer_product([poch(1, 1)], N))
    return report("euler_pentagonal", p, (0, N), out, t)


def shanks_trunc(p, N):
    t = time.perf_counter()
    out = equal(Outcome(), qs.shanks_lhs(p["k"], N), qs.shanks_rhs(p["k"], N))
    return report("shanks_trunc", p, (0, N), out, t)


def shanks_ineq_xz(p, N):
    """Series sign scan on [1, N]; series equals the Xia-Zhao count on [1, min(N, n_max)]."""
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    s = qs.xia_zhao_series(k, N)
    out = signed(Outcome(), s, lo=1)
    enum = [special_count("xia_zhao", n, {"k": k}) for n in range(n_max + 1)]
    equal(out, s, enum, lo=1, hi=n_max, what="xia_zhao count")
    out.detail.append(f"n = 0 excluded: series gives {s[0]}, the family is empty")
    return report("shanks_ineq_xz", p, (1, N), out, t)


def andrews_merca(p, N):
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    out = equal(Outcome(), qs.andrews_merca_lhs(k, N), qs.andrews_merca_rhs(k, N))
    mk = qs.mk_series(k, N)
    enum = [special_count("M_k", n, {"k": k}) for n in range(n_max + 1)]
    equal(out, mk, enum, lo=1, hi=n_max, what="M_k count")
    return report("andrews_merca", p, (0, N), out, t)


def mk_gf(p, N):
    """(q^3;q^3) times the M_k series equals the (1, 3) truncation; M_k also by enumeration."""
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    m = [special_count("M_k", n, {"k": k}) for n in range(n_max + 1)]
    m[0] = 0
    lhs = apply_product(TruncatedSeries(m, n_max), [poch(3, 3)])
    out = equal(Outcome(), lhs, qs.a_series(1, 3, k, n_max), what="enumeration route")
    lhs = apply_product(qs.mk_series(k, N), [poch(3, 3)])
    equal(out, lhs, qs.a_series(1, 3, k, N), what="series route")
    return report("mk_gf", p, (0, N), out, t)


# -- triple product truncations -----------------------------------------------------

def wang_yee_nonneg(p, N):
    t = time.perf_counter()
    out = Outcome()
    for which in (1, 2):
        signed(out, qs.wang_yee(p["R"], p["S"], p["m"], which, N), what=f"truncation {which}")
    return report("wang_yee_nonneg", p, (0, N), out, t)


def conj43(p, N):
    t = time.perf_counter()
    out = signed(Outcome(), qs.a_series(p["S"], p["R"], p["k"], N))
    tag = "theorem" if p["k"] <= 3 else "conjecture"
    return report("conj43", p, (0, N), out, t, tag=tag)


def ak_yk(p, N):
    t = time.perf_counter()
    S, R, k = p["S"], p["R"], p["k"]
    lhs = qs.a_series(S, R, k, N) + qs.a_series(S, R, k + 1, N)
    out = equal(Outcome(), lhs, qs.y_series(S, R, k, N))
    return report("ak_yk", p, (0, N), out, t)


def a13_b3(p, N):
    """a_(1,3,k)(n) against signed shifts of enumerated 3-regular counts and rho_3."""
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    b3 = b3_counts(n_max)
    r3 = rho(3, n_max)
    e = sgn(k - 1)
    rhs = [
        e * sum(sgn(j) * at(b3, n - pent(j)) for j in range(-(k - 1), k + 1)) - e * r3[n]
        for n in range(n_max + 1)
    ]
    out = equal(Outcome(), qs.a_series(1, 3, k, n_max), rhs)
    return report("a13_b3", p, (0, n_max), out, t)


def conj_2s(p, N):
    t = time.perf_counter()
    out = signed(Outcome(), qs.conj_2s(p["k"], N))
    return report("conj_2s", p, (0, N), out, t, tag="conjecture")


def cor_bq(p, N):
    """The six linear inequalities for b_3 and Q."""
    t = time.perf_counter()
    out = Outcome()
    rows = {
        3: (qs.pm_class_series(1, 3, N).coeffs, [0, 1, 2, 5, 7, 12]),
        4: (qs.distinct_series(N).coeffs, [0, 1, 3, 6, 10, 15]),
    }
    for R, (f, shifts) in rows.items():
        r = rho(R, N)
        for length, sign in ((2, 1), (4, -1), (6, 1)):
            vals = [
                sum(sgn((i + 1) // 2) * at(f, n - shifts[i]) for i in range(length)) - r[n]
                for n in range(N + 1)
            ]
            signed(out, vals, sign, what=f"R={R}, {length} terms")
    return report("cor_bq", p, (0, N), out, t)


def prop_mex(p, N):
    """Odd-part mex classes: the inequality and the two difference identities."""
    t = time.perf_counter()
    n_max = min(N, p["n_max"])
    Q = qs.distinct_series(n_max).coeffs
    out = Outcome()

    def tri(j):
        return j * (j + 1) // 2

    tail = qs.triangular_tail(1, n_max)
    for n in range(n_max + 1):
        q43 = special_count("Qbar", n, {"A": 4, "a": 3})
        q41 = special_count("Qbar", n, {"A": 4, "a": 1})
        if q43 + q41 < at(Q, n - 1):
            return report("prop_mex", p, (0, n_max), out.fail(n, f">= {at(Q, n - 1)}", q43 + q41), t)
        if q43 + q41 - at(Q, n - 1) != tail[n]:
            out.fail(n, tail[n], q43 + q41 - at(Q, n - 1), "excess vs triangular tail series")
        j = 0
        while tri(4 * j + 1) <= n:
            d43 = at(Q, n - tri(4 * j + 2)) - at(Q, n - tri(4 * j + 4))
            c43 = special_count("odd_mex", n, {"A": 4, "a": 3, "value": 8 * j + 7})
            d41 = at(Q, n - tri(4 * j + 1)) - at(Q, n - tri(4 * j + 3))
            c41 = special_count("odd_mex", n, {"A": 4, "a": 1, "value": 8 * j + 5})
            if d43 != c43:
                out.fail(n, d43, c43, f"mex_(4,3) = {8 * j + 7}")
            if d41 != c41:
                out.fail(n, d41, c41, f"mex_(4,1) = {8 * j + 5}")
            j += 1
        if not out.ok:
            break
    return report("prop_mex", p, (0, n_max), out, t)


# -- Shanks-based identities ---------------------------------------------------------

def b3_identity(p, N):
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    h = qs.h1h2_series(k, N)
    out = equal(Outcome(), h, qs.h1h2_lhs(k, N))
    enum = [special_count("B3", n, {"i": 1, "k": k}) + special_count("B3", n, {"i": 2, "k": k})
            for n in range(n_max + 1)]
    equal(out, h, enum, hi=n_max, what="B_3^1 + B_3^2 count")
    return report("b3_identity", p, (0, N), out, t)


def b3_thm(p, N):
    t = time.perf_counter()
    k = p["k"]
    b3 = qs.pm_class_series(1, 3, N).coeffs
    r3 = rho(3, N)
    vals = [
        sgn(k) * sum(sgn(j) * at(b3, n - pent(j)) for j in range(-k, k + 1)) + sgn(k - 1) * r3[n]
        for n in range(N + 1)
    ]
    out = signed(Outcome(), vals)
    return report("b3_thm", p, (0, N), out, t)


def b6_values(k: int, N: int) -> list[int]:
    b6 = pochhammer_product([poch(6, 6)], N, divide=[poch(1, 1)]).coeffs
    r6 = rho(6, N)
    return [
        sgn(k - 1) * (r6[n] - sum(sgn(j) * at(b6, n - pent(j)) for j in range(-k, k + 1)))
        for n in range(N + 1)
    ]


def b6_thm(p, N):
    t = time.perf_counter()
    k, n_max = p["k"], min(N, p["n_max"])
    bound = (k + 1) * (3 * (k + 1) - 1) // 2
    vals = b6_values(k, N)
    out = signed(Outcome(), vals, strict_from=bound)
    equal(out, vals, qs.b6_rhs(k, N), what="series route")
    equal(out, qs.b6_lhs(k, N), qs.b6_rhs(k, N), what="b6 identity")
    enum = [special_count("B3_star", n, {"i": 1, "k": k}) + special_count("B3_star", n, {"i": 2, "k": k})
            for n in range(n_max + 1)]
    equal(out, vals, enum, hi=n_max, what="B_3^1* + B_3^2* count")
    zeros = [n for n in range(k * (3 * k + 1) // 2, min(bound, N + 1)) if vals[n] == 0]
    out.extra["zeros_below_strict_bound"] = zeros
    out.detail.append(f"strict from n = {bound}")
    return report("b6_thm", p, (0, N), out, t)


def b6_strict_remark(p, N):
    """Find n >= k(3k+1)/2 where the b_6 expression vanishes."""
    t = time.perf_counter()
    k = p["k"]
    lo = k * (3 * k + 1) // 2
    vals = b6_values(k, N)
    zeros = [n for n in range(lo, N + 1) if vals[n] == 0]
    out = Outcome()
    if zeros:
        out.extra["equality_at"] = zeros
        out.detail.append(f"equality at n = {zeros[0]} >= {lo}")
    else:
        out.fail(N, f"a zero in [{lo}, {N}]", "none")
    return report("b6_strict_remark", p, (lo, N), out, t)


def ck_threshold(p, N):
    t = time.perf_counter()
    c = qs.ck_series(p["k"], N).coeffs
    n0 = N + 1
    while n0 > 0 and c[n0 - 1] >= 0:
        n0 -= 1
    out = Outcome()
    if n0 > N:
        out.fail(N, ">= 0", c[N], "no non-negative tail")
        return report("ck_threshold", p, (0, N), out, t)
    negs = [n for n in range(n0) if c[n] < 0]
    out.extra["last_negative"] = negs[-1] if negs else None
    r = report("ck_threshold", p, (0, N), out, t, threshold=n0)
    r.status = "threshold"
    return r


# -- theta identities with modulus 2m ------------------------------------------------------

def tgen(p, N):
    t = time.perf_counter()
    m, s = p["m"], p["s"]
    out = equal(Outcome(), qs.tgen_lhs(m, s, N), qs.bilateral_theta(m, s, N))
    if m == 2:
        equal(out, qs.gauss_lhs(N), qs.gauss_rhs(N), what="Gauss route")
    return report("tgen", p, (0, N), out, t)


def staircase_id(p, N):
    t = time.perf_counter()
    m, s = p["m"], p["s"]
    out = equal(Outcome(), qs.staircase_lhs(m, s, N), qs.bilateral_theta(m, s, N))
    return report("staircase_id", p, (0, N), out, t)


def tgen_survivors(p, N):
    """Cases 1-2 form a sign-reversing involution; signed survivors give the theta coefficients."""
    t = time.perf_counter()
    m, s, n_max = p["m"], p["s"], min(N, p["n_max"])
    theta = qs.bilateral_theta(m, s, n_max)
    out = Outcome()

    def fn(x):
        return tgen_involution(m, s, x)

    def dom(n):
        return a_set(m, s, n)

    for kind in ("involution", "sign_reversing"):
        r = verify_map(kind, fn, dom, range(n_max + 1))
        if not r.passed:
            out.fail(r.witness["index"], r.witness["expected"], r.witness["actual"], kind)
    for n in range(n_max + 1):
        c = survivor_census(m, s, n)
        for key in ("signed_total", "signed_case3", "signed_survivors"):
            if c[key] != theta[n]:
                out.fail(n, theta[n], c[key], key)
    return report("tgen_survivors", p, (0, n_max), out, t)


def kmr38(p, N):
    t = time.perf_counter()
    a = p["a"]
    support = [int(math.isqrt(16 * j + a * a) ** 2 == 16 * j + a * a) for j in range(N + 1)]
    out = equal(Outcome(), qs.kmr38_product(a, N), support)
    out.extra["support"] = [j for j, v in enumerate(support) if v]
    return report("kmr38", p, (0, N), out, t)


# -- modulus 10 ------------------------------------------------------------------------

def d5_thm(p, N):
    t = time.perf_counter()
    n_max = min(N, p["n_max"])
    out = Outcome()
    for n in range(1, n_max + 1):
        c12 = special_count("C", n, {"a": 1, "b": 2})
        c34 = special_count("C", n - 1, {"a": 3, "b": 4})
        d, de, do = (special_count(x, n) for x in ("D5", "D5_even", "D5_odd"))
        if d != c12 + c34:
            out.fail(n, c12 + c34, d, "D5")
        elif de != c12:
            out.fail(n, c12, de, "D5 even length")
        elif do != c34:
            out.fail(n, c34, do, "D5 odd length")
        if not out.ok:
            break
    return report("d5_thm", p, (1, n_max), out, t)


def wsf1(p, N):
    t = time.perf_counter()
    out = equal(Outcome(), qs.wsf1_lhs(N), qs.wsf1_rhs(N))
    return report("wsf1", p, (0, N), out, t)


def wsf2(p, N):
    t = time.perf_counter()
    out = equal(Outcome(), qs.wsf2_lhs(N), qs.wsf2_rhs(N))
    return report("wsf2", p, (0, N), out, t)


# -- T+- and the mod 5 tails --------------------------------------------------------------

def tplus_nonneg(p, N):
    t = time.perf_counter()
    R, S, k = p["R"], p["S"], p["k"]
    direct = qs.tplus(R, S, k, N)
    out = signed(Outcome(), direct)
    equal(out, direct, qs.tplus_rewritten(R, S, k, N), what="rewritten form")
    return report("tplus_nonneg", p, (0, N), out, t)


def tminus_nonpos(p, N):
    t = time.perf_counter()
    R, S, k = p["R"], p["S"], p["k"]
    direct = qs.tminus(R, S, k, N)
    out = signed(Outcome(), direct, sign=-1)
    equal(out, -direct, qs.tminus_rewritten(R, S, k, N), what="rewritten form")
    out.detail.append(f"series multiplied by q^{qs.tminus_offset(R, S)}")
    return report("tminus_nonpos", p, (0, N), out, t)


def conj615_third(p, N):
    t = time.perf_counter()
    R, S, k = p["R"], p["S"], p["k"]
    s = qs.conj615_sum(R, S, k, N)
    out = signed(Outcome(), s)
    out.extra["nonpositive"] = s.is_nonpositive()
    out.detail.append(f"series multiplied by q^{qs.tminus_offset(R, S)}")
    return report("conj615_third", p, (0, N), out, t, tag="conjecture")


def merca_u(p, N):
    t = time.perf_counter()
    xi, S, sign, k = p["xi"], p["S"], p["sign"], p["k"]
    n_max = min(N, p["n_max"])
    s = qs.u_series(xi, S, sign, k, N)
    out = signed(Outcome(), s, what="series sign")
    enum = [special_count("u_set", n, {"xi": xi, "S": S, "sign": sign, "k": k}) for n in range(n_max + 1)]
    equal(out, s, enum, hi=n_max, what="set description count")
    return report("merca_u", p, (0, N), out, t)
