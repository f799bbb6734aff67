"""Bargmann decomposition M = R(theta1) B(2 lambda) R(theta2) and its inverse."""

import logging
import math

from sp2kit.sp2core.factors import boost_b, guarded, rotation
from sp2kit.sp2core.models import DET_TOLERANCE, BargmannParams, as_mat2, principal_angle

logger = logging.getLogger(__name__)

# below this sinh(lambda) the conjugation angle delta carries no information
_DELTA_FLOOR = 1e-300


def compose_bargmann(params):
    """
    Multiply out R(theta1) B(2 lambda) R(theta2).

    Args:
        params: The Bargmann parameters.

    Returns:
        The unimodular matrix.
    """
    return rotation(params.theta1) @ boost_b(2.0 * params.lam) @ rotation(params.theta2)


def abcd_from_bargmann(params):
    """
    Return the ABCD entries in closed form.

    With ch = cosh(lambda), sh = sinh(lambda)::

        A = ch cos(theta) - sh sin(delta)    B = sh cos(delta) - ch sin(theta)
        C = sh cos(delta) + ch sin(theta)    D = sh sin(delta) + ch cos(theta)

    Returns:
        Row-major ``(A, B, C, D)``.
    """
    ch, sh = guarded(math.cosh, params.lam), guarded(math.sinh, params.lam)
    theta, delta = params.theta, params.delta
    diag = ch * math.cos(theta)
    rot = ch * math.sin(theta)
    sym = sh * math.cos(delta)
    skew = sh * math.sin(delta)
    return (diag - skew, sym - rot, sym + rot, diag + skew)


def core_components(m):
    """
    Split a matrix into its Bargmann components.

    Returns:
        ``(ch cos theta, ch sin theta, sh cos delta, sh sin delta)`` read from
        ``(A+D)/2, (C-B)/2, (B+C)/2, (D-A)/2``.
    """
    a, b, c, d = m.entries()
    return 0.5 * (a + d), 0.5 * (c - b), 0.5 * (b + c), 0.5 * (d - a)


def conjugation_angle(sym, skew, sh):
    """Return delta = atan2(skew, sym) in (-pi, pi], or 0 when sh is too small to carry it."""
    if sh <= _DELTA_FLOOR:
        return 0.0
    return principal_angle(math.atan2(skew, sym))


def decompose_bargmann(m, det_tolerance=DET_TOLERANCE):
    """
    Recover canonical Bargmann parameters from a unimodular matrix.

    The angles come from two-argument arctangents of the core components, so
    theta and delta land in (-pi, pi]; lambda comes from sinh(lambda) and is
    never negative. When lambda is 0 the conjugation angle is undefined and set
    to 0.

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        det_tolerance: Accepted determinant error for array input.

    Returns:
        Canonical :class:`BargmannParams` (lambda >= 0).

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
    """
    m = as_mat2(m, det_tolerance=det_tolerance)
    cos_part, sin_part, sym, skew = core_components(m)
    sh = math.hypot(sym, skew)
    lam = math.asinh(sh)
    # atan2 gives -pi for a signed-zero sine
    theta = principal_angle(math.atan2(sin_part, cos_part))
    delta = conjugation_angle(sym, skew, sh)
    params = BargmannParams.from_core(theta, delta, lam)
    logger.debug("bargmann parameters theta=%r delta=%r lambda=%r", theta, delta, lam)
    return params


def cosh_two_lambda(m):
    """
    Return cosh(2 lambda) = ((A + D)^2 + (C - B)^2) / 2 - 1.

    Follows from A + D = 2 ch cos(theta) and C - B = 2 ch sin(theta).
    """
    m = as_mat2(m)
    a, b, c, d = m.entries()
    return 0.5 * ((a + d) ** 2 + (c - b) ** 2) - 1.0
