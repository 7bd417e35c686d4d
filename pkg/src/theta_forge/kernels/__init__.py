"""Dispatch layer for the hot integer kernels.

Coefficient vectors travel as 1-d numpy arrays: int64 while every entry is
below 2**62 in magnitude, object dtype (Python ints) beyond that. The fast
kernels work on int64 only and report when their result would not fit; the
caller then redoes the step exactly in Python ints.
"""
from __future__ import annotations

import numpy as np

from .._backend import default_backend
from . import _exact, _numpy

_SAFE = 1 << 62
_impl = _numpy
_name = "numpy"


def set_backend(name: str) -> None:
    """Switch between the 'numba' and 'numpy' kernels at run time."""
    global _impl, _name
    if name == "numba":
        from . import _numba
        _impl = _numba
    elif name == "numpy":
        _impl = _numpy
    else:
        raise ValueError(f"unknown backend {name!r}")
    _name = name


def backend() -> str:
    return _name


def as_coeffs(values) -> np.ndarray:
    """Pack integers into the narrowest exact array (int64 or object)."""
    vals = [int(v) for v in values]
    if all(-_SAFE < v < _SAFE for v in vals):
        return np.array(vals, dtype=np.int64)
    return np.array(vals, dtype=object)


def _is_fast(*arrays) -> bool:
    return all(a.dtype == np.int64 for a in arrays)


def _ints(a) -> list:
    return [int(v) for v in a]


def convolve(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    if _is_fast(a, b):
        out, ok = _impl.convolve(a, b, order)
        if ok:
            return out
    return as_coeffs(_exact.convolve(_ints(a), _ints(b), order))


def invert(a: np.ndarray, order: int) -> np.ndarray:
    """Reciprocal of a series whose constant term is +1 or -1."""
    if _is_fast(a):
        out, ok = _impl.invert(a, order)
        if ok:
            return out
    return as_coeffs(_exact.invert(_ints(a), order))


def apply_factors(c: np.ndarray, factors) -> np.ndarray:
    """Multiply or divide c by a run of binomials (1 - sign*q**exp).

    factors is a sequence of (exp, sign, divide) triples. Returns a new array.
    """
    factors = [(int(e), int(s), bool(d)) for e, s, d in factors]
    if not factors:
        return c.copy()
    if _is_fast(c):
        work = c.copy()
        exps = np.array([f[0] for f in factors], dtype=np.int64)
        signs = np.array([f[1] for f in factors], dtype=np.int64)
        divide = np.array([f[2] for f in factors], dtype=np.bool_)
        done = _impl.apply_factors(work, exps, signs, divide)
        if done == len(factors):
            return work
        # the kernel stops before touching the factor that would overflow
        c, factors = work, factors[done:]
    return as_coeffs(_exact.apply_factors(_ints(c), factors))


def knapsack(values, lo, hi, n: int) -> np.ndarray:
    """Count multisets of the given values summing to 0..n.

    Value values[i] must be used between lo[i] and hi[i] times (hi < 0 means
    unbounded). Values must be distinct positive integers.
    """
    v = np.asarray(values, dtype=np.int64)
    l = np.asarray(lo, dtype=np.int64)
    h = np.asarray(hi, dtype=np.int64)
    dp, ok = _impl.knapsack(v, l, h, n)
    if ok:
        return dp
    return as_coeffs(_exact.knapsack(_ints(v), _ints(l), _ints(h), n))


set_backend(default_backend())
