"""Arbitrary-precision fallbacks on plain lists of Python ints.

Used only when an int64 kernel reports that its result would not fit.
"""


def convolve(a, b, order):
    out = [0] * (order + 1)
    nb = min(len(b), order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai:
            for j in range(min(nb, order + 1 - i)):
                out[i + j] += ai * b[j]
    return out


def invert(a, order):
    a0 = a[0]
    c = [0] * (order + 1)
    c[0] = a0
    for n in range(1, order + 1):
        acc = 0
        for j in range(1, min(n, len(a) - 1) + 1):
            if a[j]:
                acc += a[j] * c[n - j]
        c[n] = -a0 * acc
    return c


def apply_factors(c, factors):
    c = list(c)
    n = len(c)
    for e, s, divide in factors:
        if e >= n:
            continue
        if divide:
            for i in range(e, n):
                c[i] += s * c[i - e]
        else:
            for i in range(n - 1, e - 1, -1):
                c[i] -= s * c[i - e]
    return c


def knapsack(values, lo, hi, n):
    dp = [0] * (n + 1)
    dp[0] = 1
    for v, l, h in zip(values, lo, hi):
        top = n // v
        if h < 0 or h > top:
            h = top
        new = [0] * (n + 1)
        for m in range(l, h + 1):
            shift = m * v
            for t in range(shift, n + 1):
                new[t] += dp[t - shift]
        dp = new
    return dp
