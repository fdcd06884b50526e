"""Exact certificates for Pfaffian representations of quartic threefolds.

Thin Python surface over the C++ core: polynomial arithmetic over QQ and
GF(p), Pfaffians of skew polynomial matrices, Buchberger/Hilbert machinery,
sheaf-cohomology bookkeeping, and the named certificate pipelines.
"""

import json as _json

from ._pfq import (
    PfqError,
    __version__,
    binomial,
    bott_h,
    builtin_ideal,
    canon,
    chern_twist,
    complex_cohomology,
    complex_euler,
    curve_invariants,
    differentiate,
    dimension_audit,
    euler_char_bundle,
    evaluate_mod,
    f0_text,
    field_inv,
    groebner_basis,
    hilbert_data,
    hilbert_function,
    is_empty_projective,
    is_prime,
    jacobian_span_rank,
    m0_json,
    normal_form,
    odd_pfaffian_family,
    pfaffian,
    poly_mul,
    run_certificate,
    slice_degree,
    smoothness,
    sub_pfaffian,
    zero_locus_invariants,
)


def certificate(name, **options):
    """Run a named certificate and return the report as a dict."""
    return _json.loads(run_certificate(name, **options))


__all__ = [
    "PfqError",
    "__version__",
    "binomial",
    "bott_h",
    "builtin_ideal",
    "canon",
    "certificate",
    "chern_twist",
    "complex_cohomology",
    "complex_euler",
    "curve_invariants",
    "differentiate",
    "dimension_audit",
    "euler_char_bundle",
    "evaluate_mod",
    "f0_text",
    "field_inv",
    "groebner_basis",
    "hilbert_data",
    "hilbert_function",
    "is_empty_projective",
    "is_prime",
    "jacobian_span_rank",
    "m0_json",
    "normal_form",
    "odd_pfaffian_family",
    "pfaffian",
    "poly_mul",
    "run_certificate",
    "slice_degree",
    "smoothness",
    "sub_pfaffian",
    "zero_locus_invariants",
]
