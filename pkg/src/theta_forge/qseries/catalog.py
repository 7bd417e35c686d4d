"""Name-based access to every series constructor."""
from __future__ import annotations

from typing import Callable, Mapping

from ..errors import ParameterDomain, UnknownSeriesName
from . import named
from .products import bilateral_theta, gaussian_binomial, jtp_sum, pentagonal_series
from .series import TruncatedSeries

# name -> (constructor, parameter names in call order, defaults)
_CATALOG: dict[str, tuple[Callable, tuple[str, ...], dict]] = {
    "pentagonal": (pentagonal_series, ("R",), {"R": 1}),
    "bilateral_theta": (bilateral_theta, ("m", "s"), {}),
    "jtp_sum": (jtp_sum, ("m", "s", "z_sign", "z_exp"), {"z_sign": 1, "z_exp": 0}),
    "gaussian_binomial": (gaussian_binomial, ("n", "k"), {}),
    "partition": (named.partition_series, (), {}),
    "distinct": (named.distinct_series, (), {}),
    "pm_class": (named.pm_class_series, ("S", "R"), {}),
    "a_series": (named.a_series, ("S", "R", "k"), {}),
    "y_series": (named.y_series, ("S", "R", "k"), {}),
    "h1": (named.h1_series, ("k",), {}),
    "h2": (named.h2_series, ("k",), {}),
    "h1h2": (named.h1h2_series, ("k",), {}),
    "h1h2_lhs": (named.h1h2_lhs, ("k",), {}),
    "b6_lhs": (named.b6_lhs, ("k",), {}),
    "b6_rhs": (named.b6_rhs, ("k",), {}),
    "ck": (named.ck_series, ("k",), {}),
    "shanks_lhs": (named.shanks_lhs, ("k",), {}),
    "shanks_rhs": (named.shanks_rhs, ("k",), {}),
    "xia_zhao": (named.xia_zhao_series, ("k",), {}),
    "andrews_merca_lhs": (named.andrews_merca_lhs, ("k",), {}),
    "andrews_merca_rhs": (named.andrews_merca_rhs, ("k",), {}),
    "mk": (named.mk_series, ("k",), {}),
    "wang_yee_1": (lambda R, S, m, order: named.wang_yee(R, S, m, 1, order), ("R", "S", "m"), {}),
    "wang_yee_2": (lambda R, S, m, order: named.wang_yee(R, S, m, 2, order), ("R", "S", "m"), {}),
    "conj_2s": (named.conj_2s, ("k",), {}),
    "triangular_tail": (named.triangular_tail, ("k",), {}),
    "tplus": (named.tplus, ("R", "S", "k"), {}),
    "tplus_rewritten": (named.tplus_rewritten, ("R", "S", "k"), {}),
    "tminus": (named.tminus, ("R", "S", "k"), {}),
    "tminus_rewritten": (named.tminus_rewritten, ("R", "S", "k"), {}),
    "conj615_sum": (named.conj615_sum, ("R", "S", "k"), {}),
    "u_series": (named.u_series, ("xi", "S", "sign", "k"), {}),
    "theta10": (named.theta10, ("a", "sign"), {}),
    "wsf1_lhs": (named.wsf1_lhs, (), {}),
    "wsf1_rhs": (named.wsf1_rhs, (), {}),
    "wsf2_lhs": (named.wsf2_lhs, (), {}),
    "wsf2_rhs": (named.wsf2_rhs, (), {}),
    "tgen_lhs": (named.tgen_lhs, ("m", "s"), {}),
    "staircase_lhs": (named.staircase_lhs, ("m", "s"), {}),
    "gauss_lhs": (named.gauss_lhs, (), {}),
    "gauss_rhs": (named.gauss_rhs, (), {}),
    "kmr38": (named.kmr38_product, ("a",), {}),
}


def series_names() -> list[str]:
    return sorted(_CATALOG)


def series_params(name: str) -> tuple[str, ...]:
    if name not in _CATALOG:
        raise UnknownSeriesName(name)
    return _CATALOG[name][1]


def _coerce(key: str, value):
    if key == "xi":
        return str(value)
    if isinstance(value, bool):
        raise ParameterDomain(f"{key} must be an integer")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ParameterDomain(f"{key} must be an integer, got {value!r}") from None


def auxiliary_series(name: str, params: Mapping | None, order: int) -> TruncatedSeries:
    """Build the named series with the given parameters through q**order.

    >>> auxiliary_series("ck", {"k": 1}, 9).coeffs
    (1, 1, 1, 2, 2, 3, 4, 5, 6, 8)
    """
    if name not in _CATALOG:
        raise UnknownSeriesName(name)
    func, keys, defaults = _CATALOG[name]
    params = dict(params or {})
    extra = set(params) - set(keys)
    if extra:
        raise ParameterDomain(f"{name} does not take {sorted(extra)}")
    args = []
    for key in keys:
        if key in params:
            args.append(_coerce(key, params[key]))
        elif key in defaults:
            args.append(defaults[key])
        else:
            raise ParameterDomain(f"{name} needs parameter {key}")
    if order < 0:
        raise ParameterDomain(f"order must be non-negative, got {order}")
    return func(*args, order)
