"""Gauss-Hermite oracle for the expansion coefficients.

The overlap of phi_j(x1) phi_k(x2) with the squeezed state separates in the
rotated coordinates u = (x1 - x2)/sqrt 2, v = (x1 + x2)/sqrt 2, where the full
Gaussian weight is exp(-(1 + e^eta) u^2 / 2 - (1 + e^-eta) v^2 / 2). Rescaling each
axis turns that into exp(-s^2 - r^2), so an n-node tensor rule is exact for the
polynomial part up to total degree 2n - 1.
"""

import functools
import logging
import math

import numpy as np

from sp2kit.common.error import OutOfRangeError
from sp2kit.oscillator.logic import hermite_table
from sp2kit.oscillator.models import require_index
from sp2kit.sp2core.models import require_finite

logger = logging.getLogger(__name__)

QUADRATURE_NODES = 64
MAX_INDEX = 12
MAX_ETA = 3.0


@functools.lru_cache(maxsize=8)
def gauss_hermite(nodes):
    """
    Return read-only Gauss-Hermite knots and weights for weight exp(-x^2).

    Args:
        nodes: Number of nodes.

    Returns:
        ``(knots, weights)``.
    """
    knots, weights = np.polynomial.hermite.hermgauss(nodes)
    knots.setflags(write=False)
    weights.setflags(write=False)
    return knots, weights


def _check_range(j, k, eta, max_index, max_eta):
    j = require_index("j", j)
    k = require_index("k", k)
    eta = require_finite("eta", eta)
    if j > max_index or k > max_index:
        raise OutOfRangeError("index outside the validated quadrature range", j=j, k=k, max_index=max_index)
    if not 0.0 <= eta <= max_eta:
        raise OutOfRangeError("squeeze parameter outside the validated quadrature range", eta=eta, max_eta=max_eta)
    return j, k, eta


def overlap_oracle(j, k, eta, nodes=QUADRATURE_NODES, max_index=MAX_INDEX, max_eta=MAX_ETA):
    """
    Integrate phi_j(x1) phi_k(x2) psi_eta(x1, x2) over the plane.

    Args:
        j: Index of the first eigenfunction.
        k: Index of the second eigenfunction.
        eta: Squeeze parameter.
        nodes: Gauss-Hermite nodes per axis.
        max_index: Largest accepted index.
        max_eta: Largest accepted squeeze parameter.

    Returns:
        The overlap; equals ``expansion_coefficient(k, eta)`` when j == k and 0 otherwise.

    Raises:
        OutOfRangeError: If j, k or eta fall outside the validated range.
    """
    j, k, eta = _check_range(j, k, eta, max_index, max_eta)
    knots, weights = gauss_hermite(nodes)
    a = math.sqrt(2.0 / (1.0 + math.exp(eta)))
    b = math.sqrt(2.0 / (1.0 + math.exp(-eta)))
    u = a * knots[:, None]
    v = b * knots[None, :]
    x1 = math.sqrt(0.5) * (v + u)
    x2 = math.sqrt(0.5) * (v - u)
    h1 = hermite_table(j, x1, weighted=False)[j]
    h2 = hermite_table(k, x2, weighted=False)[k]
    integrand = h1 * h2 / math.sqrt(math.pi)
    value = a * b * float(weights @ integrand @ weights)
    logger.debug("overlap j=%d k=%d eta=%r nodes=%d -> %r", j, k, eta, nodes, value)
    return value


def quadrature_convergence(j, k, eta, nodes=QUADRATURE_NODES, max_index=MAX_INDEX, max_eta=MAX_ETA):
    """Return |I(nodes) - I(2 nodes)| for :func:`overlap_oracle`."""
    coarse = overlap_oracle(j, k, eta, nodes, max_index, max_eta)
    fine = overlap_oracle(j, k, eta, 2 * nodes, max_index, max_eta)
    return abs(coarse - fine)


def plane_integral(fn, nodes=QUADRATURE_NODES, transform=None):
    """
    Integrate ``fn(x1, x2)`` over the plane with a tensor Gauss-Hermite rule.

    The knots (s, r) are mapped to (x1, x2) = T (s, r) and the weight is factored
    out by multiplying ``fn`` with exp(s^2 + r^2). The rule is accurate when
    ``fn`` composed with T decays like exp(-s^2 - r^2) times a smooth factor.

    Args:
        fn: Vectorized callable of two ndarrays.
        nodes: Nodes per axis.
        transform: Optional invertible 2x2 matrix T; identity by default.

    Returns:
        The integral estimate.
    """
    t = np.eye(2) if transform is None else np.asarray(transform, dtype=float)
    knots, weights = gauss_hermite(nodes)
    s = knots[:, None]
    r = knots[None, :]
    x1 = t[0, 0] * s + t[0, 1] * r
    x2 = t[1, 0] * s + t[1, 1] * r
    values = np.asarray(fn(x1, x2), dtype=float) * np.exp(s * s + r * r)
    return abs(float(np.linalg.det(t))) * float(weights @ values @ weights)
