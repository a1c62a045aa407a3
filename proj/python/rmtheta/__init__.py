"""Local factors, adapted lattices and theta coefficients for RM abelian surfaces."""

from ._rmtheta import (
    AdaptedLattice,
    AdditiveCharacter,
    Character,
    Curve,
    Element,
    EulerFactor,
    GlobalLattice,
    HarmonicWeight,
    LocalField,
    LocalLFactor,
    MathError,
    SatakeParams,
    SchemaError,
    UnitComplex,
    ZetaNormalization,
    ZetaSeriesResult,
    __version__,
    count_points,
    dataset_from_curve_json,
    euler_factor,
    eval_harmonic,
    gauss_sum,
    invariance_subgroup_check,
    match_curve_to_hecke_json,
    ramified_epsilon,
    ramified_lfactor,
    ramified_zeta_series,
    short_vectors,
    spherical_rs_lfactor,
    theta_coefficients,
    weil_root_defect,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
