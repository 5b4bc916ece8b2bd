"""Simulation of quantum energy teleportation as an interactive proof."""

from ._core import (
    CapacityError,
    ConfigurationError,
    DegenerateModelError,
    EmptyLevelSetError,
    MinimalModel,
    analytic_conditional,
    analytic_energy,
    chain_theta,
    conditional_table,
    delta_sensitivity,
    energy_level_set,
    observable_level_set,
    optimal_theta,
    pauli_expectations,
    run_qip,
    run_qmip,
    run_qsd,
    soundness_sweep,
    theta_level_set,
)

__all__ = [
    "CapacityError",
    "ConfigurationError",
    "DegenerateModelError",
    "EmptyLevelSetError",
    "MinimalModel",
    "analytic_conditional",
    "analytic_energy",
    "chain_theta",
    "conditional_table",
    "delta_sensitivity",
    "energy_level_set",
    "observable_level_set",
    "optimal_theta",
    "pauli_expectations",
    "run_qip",
    "run_qmip",
    "run_qsd",
    "soundness_sweep",
    "theta_level_set",
]
