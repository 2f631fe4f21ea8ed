"""Rotational surfaces from prescribed curvatures."""

from ._revolve import (
    Momentum,
    RevolveError,
    catalog_momentum,
    catalog_names,
    catalog_profile,
    curvatures,
    gauss_monomial,
    integrate_profile,
    mesh_obj,
    prescribe,
    run_cli,
)

__all__ = [
    "Momentum",
    "RevolveError",
    "catalog_momentum",
    "catalog_names",
    "catalog_profile",
    "curvatures",
    "gauss_monomial",
    "integrate_profile",
    "mesh_obj",
    "prescribe",
    "run_cli",
]
