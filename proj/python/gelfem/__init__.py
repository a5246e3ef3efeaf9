"""Total Lagrangian finite elements for Flory-Rehner gels."""

from ._gelfem import (
    ConvergenceError,
    DomainError,
    MaterialParams,
    ParseError,
    energy,
    free_swelling_curve,
    generate_cube_mesh,
    nominal_stress,
    run_free_swell,
    run_model,
    run_uniaxial,
    solve_free_swelling_stretch,
    stress_and_tangent,
    uniaxial_nominal_stress,
    uniaxial_transverse_stretch,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "MaterialParams",
    "ParseError",
    "energy",
    "free_swelling_curve",
    "generate_cube_mesh",
    "nominal_stress",
    "run_free_swell",
    "run_model",
    "run_uniaxial",
    "solve_free_swelling_stretch",
    "stress_and_tangent",
    "uniaxial_nominal_stress",
    "uniaxial_transverse_stretch",
]
