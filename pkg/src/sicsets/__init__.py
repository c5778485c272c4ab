"""SIC sets in CP^2 and CP^3: constructions, verification and the polynomial
classification of nine-point sets through two fixed points."""

from .projective import (
    ALGEBRAIC_TOL,
    GEOMETRIC_TOL,
    OMEGA,
    Configuration,
    DimensionError,
    HermitianProjector,
    ProjectivePoint,
    SICReport,
    collinear_triples,
    cross_ratio,
    delta_invariant,
    fs_distance,
    is_correctly_separated,
    moment_map,
    on_incircle,
    point,
    projector_of,
    verify_sic,
)
from .heisenberg import (
    classify_fiducial,
    clifford_M,
    clifford_residuals,
    cp3_fiducial,
    h_orbit,
    hesse_midpoint_solution,
    m_eigen_config,
    midpoint_solution,
    s_theta,
    tetrahedra_cp1,
    wh_orbit,
)
from .torus import (
    TorusCoord,
    incircle_point,
    pinch_rule,
    separation_cos,
    separation_curve,
    sigma_solutions,
    z_of,
)

__version__ = "0.1.0"

__all__ = [
    "ALGEBRAIC_TOL", "GEOMETRIC_TOL", "OMEGA", "Configuration", "DimensionError",
    "HermitianProjector", "ProjectivePoint", "SICReport", "collinear_triples", "cross_ratio",
    "delta_invariant", "fs_distance", "is_correctly_separated", "moment_map", "on_incircle",
    "point", "projector_of", "verify_sic", "classify_fiducial", "clifford_M",
    "clifford_residuals", "cp3_fiducial", "h_orbit", "hesse_midpoint_solution",
    "m_eigen_config", "midpoint_solution", "s_theta", "tetrahedra_cp1", "wh_orbit",
    "TorusCoord", "incircle_point", "pinch_rule", "separation_cos", "separation_curve",
    "sigma_solutions", "z_of",
]
