"""Trigonometric phase operators and concurrence for two spin-1/2 particles.

Matrices are 4x4 complex numpy arrays over the basis
(up-up, up-down, down-up, down-down), qubit 1 being the left factor.
Sectors are named "s0" (span{up-down, down-up}) and "s1" (span{up-up, down-down}).
"""

from ._core import (
    ContractViolation,
    DimensionError,
    DomainError,
    NotInClassError,
    NotPsdError,
    QGeomError,
    analyze,
    angle_operators,
    compare_random,
    cos_big_phi,
    ensemble_density,
    entanglement_of_formation,
    expectation,
    geometric_concurrence,
    hermitian_eig,
    is_sz2_symmetric,
    mixed_concurrence,
    pauli,
    projector,
    pure_density,
    pure_state,
    rotation,
    spin_component,
    trig_expectations,
    trig_operators,
    variance,
    werner_density,
    wootters_concurrence,
)

__all__ = [
    "ContractViolation",
    "DimensionError",
    "DomainError",
    "NotInClassError",
    "NotPsdError",
    "QGeomError",
    "analyze",
    "angle_operators",
    "compare_random",
    "cos_big_phi",
    "ensemble_density",
    "entanglement_of_formation",
    "expectation",
    "geometric_concurrence",
    "hermitian_eig",
    "is_sz2_symmetric",
    "mixed_concurrence",
    "pauli",
    "projector",
    "pure_density",
    "pure_state",
    "rotation",
    "spin_component",
    "trig_expectations",
    "trig_operators",
    "variance",
    "werner_density",
    "wootters_concurrence",
]
