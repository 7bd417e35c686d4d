"""Pure-numpy twins of the njit kernels, same contracts and same guards."""
import numpy as np

LIMIT = 4.611686018427388e18  # 2**62


def _fabs(x):
    return np.abs(x.astype(np.float64))


def convolve(a, b, order):
    a = a[: order + 1]
    b = b[: order + 1]
    out = np.zeros(order + 1, np.int64)
    if a.size == 0 or b.size == 0:
        return out, True
    shadow = np.convolve(_fabs(a), _fabs(b))[: order + 1]
    if shadow.size and shadow.max() >= LIMIT:
        return out, False
    full = np.convolve(a, b)[: order + 1]
    out[: full.size] = full
    return out, True


def invert(a, order):
    c = np.zeros(order + 1, np.int64)
    c[0] = a[0]
    fa = _fabs(a)
    na = a.shape[0]
    for n in range(1, order + 1):
        m = min(n, na - 1)
        if m < 1:
            continue
        tail = c[n - m : n][::-1]
        sh = float(np.dot(fa[1 : m + 1], _fabs(tail)))
        if sh >= LIMIT:
            return c, False
        c[n] = -a[0] * int(np.dot(a[1 : m + 1], tail))
    return c, True


def apply_factors(c, exps, signs, divide):
    n = c.shape[0]
    for f in range(len(exps)):
        e = int(exps[f])
        s = int(signs[f])
        if e >= n:
            continue
        if divide[f]:
            sh = _fabs(c)
            for start in range(e, n, e):
                stop = min(start + e, n)
                sh[start:stop] += sh[start - e : stop - e]
            if sh.max() >= LIMIT:
                return f
            for start in range(e, n, e):
                stop = min(start + e, n)
                c[start:stop] += s * c[start - e : stop - e]
        else:
            if (_fabs(c[e:]) + _fabs(c[:-e])).max() >= LIMIT:
                return f
            c[e:] -= s * c[:-e]
    return len(exps)


def knapsack(values, lo, hi, n):
    dp = np.zeros(n + 1, np.int64)
    dp[0] = 1
    for v, l, h in zip(values, lo, hi):
        v, l, h = int(v), int(l), int(h)
        top = n // v
        if h < 0 or h > top:
            h = top
        new = np.zeros(n + 1, np.int64)
        shadow = np.zeros(n + 1, np.float64)
        fdp = dp.astype(np.float64)
        for m in range(l, h + 1):
            shift = m * v
            shadow[shift:] += fdp[: n + 1 - shift]
        if shadow.max() >= LIMIT:
            return new, False
        for m in range(l, h + 1):
            shift = m * v
            new[shift:] += dp[: n + 1 - shift]
        dp = new
    return dp, True
