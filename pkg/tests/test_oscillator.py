import math

import numpy as np
import pytest

from sp2kit.common import InvalidArgumentError, OutOfRangeError
from sp2kit.oscillator import (
    ExpansionCoefficient,
    SqueezedState,
    cumulative_probability,
    entangled_wavefunction,
    expansion,
    expansion_coefficient,
    gauss_hermite,
    ground_wavefunction,
    hermite_function,
    hermite_table,
    overlap_oracle,
    partial_sum,
    plane_integral,
    quadrature_convergence,
    squeezed_coordinates,
)

PI_QUARTER = math.pi ** -0.25


def squeezed_frame(eta):
    """Map (s, r) onto the plane so that psi_eta^2 becomes exp(-s^2 - r^2) / pi."""
    lo, hi = math.exp(-0.5 * eta), math.exp(0.5 * eta)
    return np.array([[lo, hi], [-lo, hi]]) * math.sqrt(0.5)


def test_ground_wavefunction_values():
    assert ground_wavefunction(0.0, 0.0) == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-15)
    assert ground_wavefunction(1.0, 0.0) == pytest.approx(math.exp(-0.5) / math.sqrt(math.pi), abs=1e-15)
    grid = ground_wavefunction(np.zeros(3), np.ones(3))
    assert grid.shape == (3,)


def test_entangled_reduces_to_ground_at_zero_squeeze():
    x = np.linspace(-2.0, 2.0, 9)
    np.testing.assert_allclose(entangled_wavefunction(0.0, x, x[::-1]), ground_wavefunction(x, x[::-1]),
                               rtol=1e-14)


def test_entangled_wavefunction_value():
    expected = math.exp(-0.25 * (math.exp(-1.0) * 0.25 + math.exp(1.0) * 0.25)) / math.sqrt(math.pi)
    assert entangled_wavefunction(1.0, 0.5, 0.0) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("eta", [0.0, 0.7, 2.0])
def test_squeezed_coordinates_map_onto_ground_state(eta):
    x1, x2 = np.meshgrid(np.linspace(-3.0, 3.0, 21), np.linspace(-3.0, 3.0, 21))
    u, v = squeezed_coordinates(eta, x1, x2)
    np.testing.assert_allclose(ground_wavefunction(u, v), entangled_wavefunction(eta, x1, x2),
                               rtol=1e-12, atol=1e-300)
    assert squeezed_coordinates(0.0, 1.0, 1.0) == pytest.approx((0.0, math.sqrt(2.0)), abs=1e-15)


@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0, 2.0])
def test_wavefunctions_are_normalized(eta):
    norm = plane_integral(lambda x1, x2: entangled_wavefunction(eta, x1, x2) ** 2,
                          transform=squeezed_frame(eta))
    assert norm == pytest.approx(1.0, abs=1e-8)


def test_ground_state_normalized_without_transform():
    assert plane_integral(lambda x1, x2: ground_wavefunction(x1, x2) ** 2) == pytest.approx(1.0, abs=1e-12)


def test_expansion_coefficients_at_unit_squeeze():
    values = [c.value for c in expansion(1.0, 2)]
    assert values == pytest.approx([0.886819, 0.409814, 0.189382], abs=1e-6)
    assert values[0] == pytest.approx(0.8868188839700739, abs=1e-15)
    assert expansion_coefficient(2, 1.0) == pytest.approx(values[2], rel=1e-14)


def test_expansion_at_zero_squeeze():
    coefficients = expansion(0.0, 3)
    assert [c.k for c in coefficients] == [0, 1, 2, 3]
    assert [c.value for c in coefficients] == [1.0, 0.0, 0.0, 0.0]
    assert cumulative_probability(0, 0.0) == 1.0


def test_cumulative_probability_values():
    assert cumulative_probability(0, 1.0) == pytest.approx(0.7864477329659274, abs=1e-15)
    assert cumulative_probability(1, 1.0) == pytest.approx(1.0 - 0.2135522670340726 ** 2, abs=1e-15)
    assert 1.0 - cumulative_probability(20, 1.0) < 1e-14


@pytest.mark.parametrize("kmax", [0, 5, 20])
@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0, 2.0])
def test_probabilities_sum_to_cumulative(kmax, eta):
    total = math.fsum(c.probability for c in expansion(eta, kmax))
    assert abs(total - cumulative_probability(kmax, eta)) <= 1e-12
    assert total <= 1.0 + 1e-15


@pytest.mark.parametrize("k", range(6))
@pytest.mark.parametrize("eta", [0.5, 1.0, 2.0])
def test_oracle_matches_closed_form(k, eta):
    assert overlap_oracle(k, k, eta) == pytest.approx(expansion_coefficient(k, eta), abs=1e-6)


@pytest.mark.parametrize("j, k", [(0, 1), (1, 2), (2, 4), (5, 3)])
def test_off_diagonal_overlaps_vanish(j, k):
    assert abs(overlap_oracle(j, k, 1.0)) <= 1e-12


def test_quadrature_converges():
    assert quadrature_convergence(3, 3, 1.0) <= 1e-10
    assert quadrature_convergence(12, 12, 3.0) <= 1e-8


@pytest.mark.parametrize("j, k, eta", [(13, 0, 1.0), (0, 13, 1.0), (0, 0, 3.5), (0, 0, -0.1)])
def test_oracle_range_is_enforced(j, k, eta):
    with pytest.raises(OutOfRangeError):
        overlap_oracle(j, k, eta)


def test_oracle_range_can_be_widened():
    assert overlap_oracle(0, 0, 3.5, max_eta=4.0) == pytest.approx(expansion_coefficient(0, 3.5), abs=1e-6)


def test_hermite_functions_are_orthonormal():
    knots, weights = gauss_hermite(40)
    table = hermite_table(10, knots, weighted=False)
    gram = (table * weights) @ table.T
    np.testing.assert_allclose(gram, np.eye(11), atol=1e-12)


def test_gauss_hermite_is_cached_and_read_only():
    knots, weights = gauss_hermite(16)
    assert gauss_hermite(16)[0] is knots
    assert weights.sum() == pytest.approx(math.sqrt(math.pi), abs=1e-14)
    with pytest.raises(ValueError):
        knots[0] = 0.0


def test_hermite_function_values():
    assert hermite_function(0, 0.0) == pytest.approx(PI_QUARTER, abs=1e-15)
    assert hermite_function(1, 1.0) == pytest.approx(math.sqrt(2.0) * PI_QUARTER * math.exp(-0.5), abs=1e-15)
    expected = (4.0 * 0.25 - 2.0) / math.sqrt(8.0) * PI_QUARTER * math.exp(-0.125)
    assert hermite_function(2, 0.5) == pytest.approx(expected, abs=1e-15)
    assert hermite_table(3, np.zeros(5)).shape == (4, 5)


def test_partial_sum_converges():
    x1, x2 = 0.3, -0.2
    exact = entangled_wavefunction(1.0, x1, x2)
    errors = [abs(partial_sum(1.0, kmax, x1, x2) - exact) for kmax in (2, 10, 40)]
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] <= 1e-12


def test_partial_sum_on_arrays():
    x = np.linspace(-1.0, 1.0, 5)
    np.testing.assert_allclose(partial_sum(0.5, 40, x, -x), entangled_wavefunction(0.5, x, -x), atol=1e-12)
    assert partial_sum(0.0, 0, 0.4, 0.1) == pytest.approx(ground_wavefunction(0.4, 0.1), rel=1e-14)


def test_validation():
    with pytest.raises(InvalidArgumentError):
        expansion_coefficient(-1, 1.0)
    with pytest.raises(InvalidArgumentError, match="non-negative"):
        expansion_coefficient(1, -0.5)
    with pytest.raises(InvalidArgumentError):
        expansion(1.0, 2.5)
    with pytest.raises(InvalidArgumentError):
        SqueezedState(math.nan)
    with pytest.raises(InvalidArgumentError):
        cumulative_probability(True, 1.0)


def test_expansion_coefficient_bounds():
    c = ExpansionCoefficient(2, -0.5)
    assert c.probability == 0.25
    with pytest.raises(InvalidArgumentError, match="\\[-1, 1\\]"):
        ExpansionCoefficient(0, 1.5)
    with pytest.raises(InvalidArgumentError):
        ExpansionCoefficient(-1, 0.5)


def test_squeezed_state_properties():
    state = SqueezedState(1.0)
    assert state.ratio == pytest.approx(math.tanh(0.5), abs=1e-16)
    assert state.leading == pytest.approx(0.8868188839700739, abs=1e-15)
