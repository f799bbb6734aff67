"""Four-by-four counterparts of the Sp(2) factors and the covering map between them.

A 2x2 unimodular matrix acts on four-vectors through the Hermitian form::

    V = [[t + z, x], [x, t - z]],    V' = m V m^T,

with y passed through. Under this map squeeze_s(eta) is the z-boost,
rotation(theta) the rotation in the x-z plane and boost_b(2 lambda) the x-boost.
"""

import logging
import math

import numpy as np

from sp2kit.common.error import InvalidArgumentError
from sp2kit.lorentz.models import FourVector, Mat4
from sp2kit.sp2core.factors import guarded, squeeze_s, wigner_matrix
from sp2kit.sp2core.models import (
    DET_TOLERANCE,
    Branch,
    Elliptic,
    Hyperbolic,
    Parabolic,
    Side,
    as_mat2,
    require_finite,
)

logger = logging.getLogger(__name__)

_BASIS = (
    FourVector(1.0, 0.0, 0.0, 0.0),
    FourVector(0.0, 1.0, 0.0, 0.0),
    FourVector(0.0, 0.0, 1.0, 0.0),
    FourVector(0.0, 0.0, 0.0, 1.0),
)


def _boost(rapidity, axis):
    rapidity = require_finite("rapidity", rapidity)
    ch, sh = guarded(math.cosh, rapidity), guarded(math.sinh, rapidity)
    data = np.eye(4)
    data[0, 0] = data[axis, axis] = ch
    data[0, axis] = data[axis, 0] = sh
    return Mat4(data)


def _rotation_xz(angle):
    angle = require_finite("angle", angle)
    c, s = math.cos(angle), math.sin(angle)
    data = np.eye(4)
    data[1, 1], data[1, 3] = c, s
    data[3, 1], data[3, 3] = -s, c
    return Mat4(data)


def four_boost_z(eta):
    """Boost along z: t' = t cosh(eta) + z sinh(eta), z' = t sinh(eta) + z cosh(eta)."""
    return _boost(eta, 3)


def four_rotation_z(phi):
    """
    Rotation in the x-z plane that leaves a particle at rest untouched.

    x' = x cos(phi) + z sin(phi), z' = -x sin(phi) + z cos(phi).
    """
    return _rotation_xz(phi)


def four_boost_x(chi):
    """Boost along x; fixes (0, 0, 0, p)."""
    return _boost(chi, 1)


def four_n(gamma):
    """
    Return the light-like little-group element N(gamma).

    Rows on (t, x, y, z)::

        (1 + g^2/2, -g, 0, -g^2/2)
        (-g,         1, 0,  g)
        (0,          0, 1,  0)
        (g^2/2,     -g, 0,  1 - g^2/2)

    It fixes (k, 0, 0, k) and N(a) N(b) = N(a + b).
    """
    g = require_finite("gamma", gamma)
    half_sq = 0.5 * g * g
    if not math.isfinite(half_sq):
        raise InvalidArgumentError("gamma too large for a finite matrix", gamma=g)
    return Mat4(np.array([
        [1.0 + half_sq, -g, 0.0, -half_sq],
        [-g, 1.0, 0.0, g],
        [0.0, 0.0, 1.0, 0.0],
        [half_sq, -g, 0.0, 1.0 - half_sq],
    ]))


def four_rotation_y(theta):
    """Full-angle rotation in the x-z plane, the image of rotation(theta)."""
    return _rotation_xz(theta)


def four_b(two_lambda):
    """Boost along x with rapidity 2 lambda, the image of boost_b(2 lambda)."""
    return _boost(two_lambda, 1)


def adjoint_action(m, v, det_tolerance=DET_TOLERANCE):
    """
    Apply a 2x2 unimodular matrix to a four-vector.

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        v: The :class:`FourVector`.
        det_tolerance: Accepted determinant error for array input.

    Returns:
        The transformed :class:`FourVector`; its Minkowski norm equals that of ``v``.

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
    """
    m = as_mat2(m, det_tolerance=det_tolerance).to_array()
    hermitian = np.array([[v.t + v.z, v.x], [v.x, v.t - v.z]])
    image = m @ hermitian @ m.T
    plus, minus = image[0, 0], image[1, 1]
    # image is symmetric; average the two off-diagonals against rounding
    x = 0.5 * (image[0, 1] + image[1, 0])
    return FourVector(0.5 * (plus + minus), x, v.y, 0.5 * (plus - minus))


def lorentz4_of(m, det_tolerance=DET_TOLERANCE):
    """
    Return the 4x4 Lorentz matrix induced by a 2x2 unimodular matrix.

    Columns are the images of the basis vectors under :func:`adjoint_action`.
    The map is a homomorphism with kernel {I, -I}.

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
    """
    m = as_mat2(m, det_tolerance=det_tolerance)
    columns = [adjoint_action(m, e).to_array() for e in _BASIS]
    return Mat4(np.column_stack(columns))


def _minus_branch(form):
    if isinstance(form, Hyperbolic):
        return form.branch is Branch.MINUS
    if isinstance(form, Parabolic):
        return form.side is Side.UPPER
    return False


def little_group_element(form, eta):
    """
    Conjugate a Wigner matrix into the little group of the boosted reference vector.

    Plus-branch forms (rotation, X+ and N+) give S(-eta) W S(eta); minus-branch
    forms (X- and N-) give S(eta) W S(-eta).

    Args:
        form: An ``Elliptic``, ``Hyperbolic`` or ``Parabolic`` value.
        eta: Squeeze parameter.

    Returns:
        The 2x2 matrix.
    """
    eta = require_finite("eta", eta)
    w = wigner_matrix(form)
    if _minus_branch(form):
        return squeeze_s(eta) @ w @ squeeze_s(-eta)
    return squeeze_s(-eta) @ w @ squeeze_s(eta)


def orbit_representative(form, eta):
    """
    Return the four-vector that ``little_group_element(form, eta)`` leaves invariant.

    * elliptic: (cosh eta, 0, 0, -sinh eta), a massive particle
    * hyperbolic X+: (-sinh eta, 0, 0, cosh eta); X-: (sinh eta, 0, 0, cosh eta)
    * parabolic N-: (1, 0, 0, 1); N+: (1, 0, 0, -1)

    Args:
        form: An ``Elliptic``, ``Hyperbolic`` or ``Parabolic`` value.
        eta: Squeeze parameter.

    Returns:
        The invariant :class:`FourVector`.
    """
    eta = require_finite("eta", eta)
    ch, sh = guarded(math.cosh, eta), guarded(math.sinh, eta)
    if isinstance(form, Elliptic):
        return FourVector(ch, 0.0, 0.0, -sh)
    if isinstance(form, Hyperbolic):
        sign = -1.0 if form.branch is Branch.PLUS else 1.0
        return FourVector(sign * sh, 0.0, 0.0, ch)
    if isinstance(form, Parabolic):
        return FourVector(1.0, 0.0, 0.0, 1.0 if form.side is Side.UPPER else -1.0)
    raise InvalidArgumentError("not a Wigner form", form=form)
