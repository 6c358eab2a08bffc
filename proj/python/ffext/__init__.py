"""Exact Harder-Narasimhan polygon combinatorics for vector bundles on the
Fargues-Fontaine curve: generalized Kottwitz sets, extension sets and
Newton-stratification reports, all over exact rationals."""

from ffext._ffext import (  # noqa: F401
    BudgetExceeded,
    Polygon,
    __version__,
    basic_element,
    bundle_vector,
    direct_sum,
    ext_contains,
    ext_enumerate,
    ext_semistable_pair,
    extension_union,
    extension_union_split_sums,
    format,
    fully_hn_gl,
    fully_hn_typeA,
    hn_decomposable_cuts,
    interpolate_constant,
    interpolate_general,
    involution_check,
    kottwitz_member,
    kottwitz_set,
    leq_dominance,
    levi_reductions,
    mu_negative_splits,
    parse,
    stratification_report,
    stratum_status,
    strongly_slopewise_dominates,
    tilde_ext,
    weakly_fully_hn_gl,
    weakly_fully_hn_typeA,
)
