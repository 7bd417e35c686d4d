"""Exact truncated power series and the named products and theta sums."""
from .catalog import auxiliary_series, series_names, series_params
from .named import (
    a_series,
    andrews_merca_lhs,
    andrews_merca_rhs,
    b6_lhs,
    b6_rhs,
    ck_series,
    conj615_sum,
    conj_2s,
    distinct_series,
    gauss_lhs,
    gauss_rhs,
    geometric_block,
    h1_series,
    h1h2_lhs,
    h1h2_series,
    h2_series,
    kmr38_product,
    mk_series,
    partition_series,
    pm_class_series,
    shanks_lhs,
    shanks_rhs,
    staircase_lhs,
    tgen_lhs,
    theta10,
    tminus,
    tminus_offset,
    tminus_rewritten,
    tplus,
    tplus_rewritten,
    triangular_tail,
    u_series,
    wang_yee,
    wsf1_lhs,
    wsf1_rhs,
    wsf2_lhs,
    wsf2_rhs,
    xia_zhao_series,
    y_series,
)
from .products import (
    SignedFactorSpec,
    apply_product,
    bilateral_theta,
    gaussian_binomial,
    jtp_sum,
    pentagonal_series,
    poch,
    pochhammer_product,
)
from .series import TruncatedSeries, add, inverse, mul, shift, sub, truncate

__all__ = [name for name in dir() if not name.startswith("_")]
