"""Exact-arithmetic polynomiality tests and non-negativity certificates for
quotients prod(1-q^a_i) / prod(1-q^b_j)."""

import json as _json

from ._cgflib import (  # noqa: F401
    CapExceededError,
    apery,
    bijection,
    certify_json,
    cgf_form,
    corollary_bound_gk,
    corollary_bound_stanton,
    count_representable,
    cyclotomic,
    divisor_multiset,
    expand,
    factor_profile,
    frobenius,
    gk_spec,
    hsop,
    is_flat,
    is_symmetric,
    lattice_decompose,
    max_abs_coeff,
    min_coefficient,
    parse_spec,
    poly_divexact,
    poly_mul,
    polya_multiplier,
    polynomiality_delta,
    render_spec,
    run_command,
    selmer_bound,
    selmer_fast_path,
    semigroup_contains,
    stanton_spec,
)


def certify(a, b, **kwargs):
    """Run the certificate cascade; returns the report document as a dict."""
    return _json.loads(certify_json(a, b, **kwargs))
