"""Two-oscillator wavefunctions and their expansion in oscillator eigenfunctions.

The squeezed state is the ground state seen in rotated and squeezed coordinates::

    psi_eta(x1, x2) = (1/sqrt(pi)) exp(-(e^-eta (x1 + x2)^2 + e^eta (x1 - x2)^2) / 4)
                    = sum_k tanh(eta/2)^k / cosh(eta/2) phi_k(x1) phi_k(x2)
"""

import math

import numpy as np

from sp2kit.oscillator.models import ExpansionCoefficient, SqueezedState, require_index
from sp2kit.sp2core.factors import guarded
from sp2kit.sp2core.models import require_finite

_INV_SQRT_PI = 1.0 / math.sqrt(math.pi)
_PI_QUARTER = math.pi ** -0.25
_SQRT_HALF = math.sqrt(0.5)


def ground_wavefunction(x1, x2):
    """(1/sqrt(pi)) exp(-(x1^2 + x2^2) / 2); works on scalars and ndarrays."""
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    value = _INV_SQRT_PI * np.exp(-0.5 * (x1 * x1 + x2 * x2))
    return value if value.ndim else float(value)


def squeezed_coordinates(eta, x1, x2):
    """
    Rotate (x1, x2) by 45 degrees and squeeze.

    The rotation is (1/sqrt 2)[[1, -1], [1, 1]], the squeeze diag(e^(eta/2), e^(-eta/2)).

    Returns:
        ``(u, v)`` such that ``ground_wavefunction(u, v) == entangled_wavefunction(eta, x1, x2)``.
    """
    eta = require_finite("eta", eta)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    up = guarded(math.exp, 0.5 * eta)
    u = up * _SQRT_HALF * (x1 - x2)
    v = _SQRT_HALF * (x1 + x2) / up
    if u.ndim == 0:
        return float(u), float(v)
    return u, v


def entangled_wavefunction(eta, x1, x2):
    """
    Evaluate the squeezed two-oscillator wavefunction.

    Args:
        eta: Squeeze parameter.
        x1: First coordinate, scalar or ndarray.
        x2: Second coordinate, scalar or ndarray.

    Returns:
        The wavefunction value(s).
    """
    eta = require_finite("eta", eta)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    total = x1 + x2
    diff = x1 - x2
    exponent = 0.25 * (guarded(math.exp, -eta) * total * total + guarded(math.exp, eta) * diff * diff)
    value = _INV_SQRT_PI * np.exp(-exponent)
    return value if value.ndim else float(value)


def hermite_table(kmax, x, weighted=True):
    """
    Return normalized oscillator eigenfunctions phi_0..phi_kmax at ``x``.

    Uses the upward recurrence
    phi_(k+1) = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_(k-1), which stays
    normalized at every step. With ``weighted=False`` the Gaussian factor
    exp(-x^2/2) is left off, giving the normalized Hermite polynomials.

    Returns:
        Array of shape ``(kmax + 1,) + x.shape``.
    """
    kmax = require_index("kmax", kmax)
    x = np.asarray(x, dtype=float)
    table = np.empty((kmax + 1,) + x.shape)
    table[0] = _PI_QUARTER * (np.exp(-0.5 * x * x) if weighted else np.ones_like(x))
    if kmax >= 1:
        table[1] = math.sqrt(2.0) * x * table[0]
    for k in range(1, kmax):
        table[k + 1] = math.sqrt(2.0 / (k + 1)) * x * table[k] - math.sqrt(k / (k + 1)) * table[k - 1]
    return table


def hermite_function(k, x):
    """Normalized oscillator eigenfunction phi_k(x)."""
    value = hermite_table(k, x)[k]
    return value if value.ndim else float(value)


def expansion_coefficient(k, eta):
    """
    Return tanh(eta/2)^k / cosh(eta/2).

    Args:
        k: Non-negative index.
        eta: Squeeze parameter, >= 0.

    Returns:
        The coefficient, in [0, 1].
    """
    k = require_index("k", k)
    state = SqueezedState(eta)
    return state.leading * state.ratio ** k


def expansion(eta, kmax):
    """Return the coefficients for k = 0..kmax as :class:`ExpansionCoefficient` values."""
    kmax = require_index("kmax", kmax)
    state = SqueezedState(eta)
    ratio, value = state.ratio, state.leading
    coefficients = []
    for k in range(kmax + 1):
        coefficients.append(ExpansionCoefficient(k, value))
        value *= ratio
    return coefficients


def cumulative_probability(kmax, eta):
    """Return sum_(k <= kmax) c_k^2 = 1 - tanh(eta/2)^(2 kmax + 2)."""
    kmax = require_index("kmax", kmax)
    state = SqueezedState(eta)
    return 1.0 - state.ratio ** (2 * kmax + 2)


def partial_sum(eta, kmax, x1, x2):
    """
    Evaluate the expansion truncated after ``kmax``.

    Converges to :func:`entangled_wavefunction` as ``kmax`` grows.
    """
    coefficients = np.array([c.value for c in expansion(eta, kmax)])
    phi1 = hermite_table(kmax, x1)
    phi2 = hermite_table(kmax, x2)
    value = np.tensordot(coefficients, phi1 * phi2, axes=1)
    return value if value.ndim else float(value)
