"""alpha-generalized reversed aging intensity analysis."""

from raintensity._core import (
    Anchor,
    DomainError,
    GraiCurve,
    GridSpec,
    KdeModel,
    NumericalError,
    ParametricFamily,
    ReconstructedCdf,
    Sample,
    ShapeModel,
    ai_alpha,
    check_conditions,
    chi_square,
    chi_square_counts,
    cum_reversed_hazard_alpha,
    default_bandwidth,
    fit_ls,
    fit_pipeline,
    grai_alpha,
    grai_general,
    grai_grid,
    grai_value,
    implication_report,
    ingest_csv,
    joint_interior_grid,
    ks_test,
    mle_lambda_invllog,
    mle_lambda_invmw,
    mle_lambda_invw2,
    parse_family,
    rai_order_check,
    read_curve_tsv,
    reciprocal_duality_check,
    reconstruct_neg,
    reconstruct_pos,
    reconstruct_zero,
    reversed_hazard,
    roundtrip_error,
    write_curve_tsv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
