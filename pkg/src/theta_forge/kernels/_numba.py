"""njit-compiled int64 kernels.

Every kernel carries a float64 magnitude shadow of the integer work and
refuses (returns ok=False) once the shadow reaches 2**62, so an int64
result is only ever returned when it is exact.
"""
import numpy as np
from numba import njit

LIMIT = 4.611686018427388e18  # 2**62


@njit(cache=True)
def convolve(a, b, order):
    out = np.zeros(order + 1, np.int64)
    shadow = np.zeros(order + 1, np.float64)
    na = min(a.shape[0], order + 1)
    nb = min(b.shape[0], order + 1)
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        fa = abs(np.float64(ai))
        for j in range(min(nb, order + 1 - i)):
            bj = b[j]
            if bj != 0:
                out[i + j] += ai * bj
                shadow[i + j] += fa * abs(np.float64(bj))
    for k in range(order + 1):
        if shadow[k] >= LIMIT:
            return out, False
    return out, True


@njit(cache=True)
def invert(a, order):
    c = np.zeros(order + 1, np.int64)
    a0 = a[0]
    c[0] = a0
    na = a.shape[0]
    for n in range(1, order + 1):
        acc = 0
        sh = 0.0
        for j in range(1, min(n, na - 1) + 1):
            aj = a[j]
            if aj != 0:
                cj = c[n - j]
                acc += aj * cj
                sh += abs(np.float64(aj)) * abs(np.float64(cj))
        if sh >= LIMIT:
            return c, False
        c[n] = -a0 * acc
    return c, True


@njit(cache=True)
def apply_factors(c, exps, signs, divide):
    n = c.shape[0]
    for f in range(exps.shape[0]):
        e = exps[f]
        s = signs[f]
        if e >= n:
            continue
        if divide[f]:
            sh = np.empty(n, np.float64)
            for i in range(n):
                sh[i] = abs(np.float64(c[i]))
            for i in range(e, n):
                sh[i] += sh[i - e]
                if sh[i] >= LIMIT:
                    return f
            for i in range(e, n):
                c[i] += s * c[i - e]
        else:
            for i in range(e, n):
                if abs(np.float64(c[i])) + abs(np.float64(c[i - e])) >= LIMIT:
                    return f
            for i in range(n - 1, e - 1, -1):
                c[i] -= s * c[i - e]
    return exps.shape[0]


@njit(cache=True)
def knapsack(values, lo, hi, n):
    cap = np.int64(4611686018427387904)
    dp = np.zeros(n + 1, np.int64)
    dp[0] = 1
    for idx in range(values.shape[0]):
        v = values[idx]
        top = n // v
        h = hi[idx]
        if h < 0 or h > top:
            h = top
        l = lo[idx]
        new = np.zeros(n + 1, np.int64)
        if l <= h:
            for r in range(min(v, n + 1)):
                cnt = (n - r) // v + 1
                w = np.int64(0)
                for i in range(cnt):
                    if i - l >= 0:
                        w += dp[r + (i - l) * v]
                    if i - h - 1 >= 0:
                        w -= dp[r + (i - h - 1) * v]
                    if w >= cap:
                        return new, False
                    new[r + i * v] = w
        dp = new
    return dp, True
