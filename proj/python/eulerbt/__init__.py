"""Exact binomial transforms, Euler series transformations, identity
verification, Legendre polynomial representations, and alternating-series
acceleration, all over exact rational arithmetic."""

from ._core import (
    AccelTable,
    IdentityId,
    IdentityReport,
    IdentityResult,
    MPoly,
    Rat,
    Series,
    SeriesAgreement,
    VarId,
    agree,
    all_identities,
    binom_power_series,
    binomial_transform,
    derive_simons_from_ljunggren,
    euler_accelerate,
    euler_transform,
    forward_differences,
    gen_binomial,
    generalized_euler_transform,
    identity_alias,
    identity_from_string,
    identity_name,
    identity_sides,
    identity_uses_q,
    inverse_binomial_transform,
    legendre_rep20,
    legendre_rep21,
    legendre_rep22,
    legendre_reps_agree,
    legendre_rodrigues,
    ljunggren_oracle,
    mul_binomial_power,
    negbinom_series,
    rat_binomial,
    series_mul,
    series_text,
    substitute_mobius,
    verify_identity,
    verify_munarini10_chain,
    verify_munarini30_chain,
)

__all__ = [
    "AccelTable",
    "IdentityId",
    "IdentityReport",
    "IdentityResult",
    "MPoly",
    "Rat",
    "Series",
    "SeriesAgreement",
    "VarId",
    "agree",
    "all_identities",
    "binom_power_series",
    "binomial_transform",
    "derive_simons_from_ljunggren",
    "euler_accelerate",
    "euler_transform",
    "forward_differences",
    "gen_binomial",
    "generalized_euler_transform",
    "identity_alias",
    "identity_from_string",
    "identity_name",
    "identity_sides",
    "identity_uses_q",
    "inverse_binomial_transform",
    "legendre_rep20",
    "legendre_rep21",
    "legendre_rep22",
    "legendre_reps_agree",
    "legendre_rodrigues",
    "ljunggren_oracle",
    "mul_binomial_power",
    "negbinom_series",
    "rat_binomial",
    "series_mul",
    "series_text",
    "substitute_mobius",
    "verify_identity",
    "verify_munarini10_chain",
    "verify_munarini30_chain",
]
