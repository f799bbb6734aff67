"""Squeezed two-oscillator wavefunction, its expansion and a quadrature oracle."""

from sp2kit.oscillator.logic import (
    cumulative_probability,
    entangled_wavefunction,
    expansion,
    expansion_coefficient,
    ground_wavefunction,
    hermite_function,
    hermite_table,
    partial_sum,
    squeezed_coordinates,
)
from sp2kit.oscillator.models import ExpansionCoefficient, SqueezedState
from sp2kit.oscillator.quadrature import (
    gauss_hermite,
    overlap_oracle,
    plane_integral,
    quadrature_convergence,
)

__all__ = [
    "ExpansionCoefficient",
    "SqueezedState",
    "cumulative_probability",
    "entangled_wavefunction",
    "expansion",
    "expansion_coefficient",
    "gauss_hermite",
    "ground_wavefunction",
    "hermite_function",
    "hermite_table",
    "overlap_oracle",
    "partial_sum",
    "plane_integral",
    "quadrature_convergence",
    "squeezed_coordinates",
]
