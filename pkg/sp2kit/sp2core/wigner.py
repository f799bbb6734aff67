"""Classification, eigenvalues and the Wigner normal form M = sigma G W G^-1.

The normal form is read off the equal-diagonal core K = L(delta)^-1 (sigma M) L(delta),
whose entries follow in closed form from the Bargmann components::

    k11 = k22 = ch cos(theta)
    k12 = sh - ch sin(theta)
    k21 = sh + ch sin(theta)

With lambda >= 0 the symmetric slot (k12 + k21) / 2 = sh is never negative, so
matrices always land on the plus branch: S(-eta) R(phi) S(eta), S(-eta) X+(chi) S(eta)
or, at the boundary, one of the triangular N+-(gamma) with eta fixed to 0.
"""

import logging
import math
import sys

from sp2kit.common.error import InvalidArgumentError
from sp2kit.sp2core.bargmann import conjugation_angle, core_components
from sp2kit.sp2core.factors import (
    guarded,
    rotation,
    squeeze_s,
    transformation_matrix,
    wigner_matrix,
)
from sp2kit.sp2core.models import (
    CONDITIONING_BAND,
    DET_TOLERANCE,
    PARABOLIC_TOLERANCE,
    Branch,
    EigenKind,
    EigenPair,
    Elliptic,
    Hyperbolic,
    MatrixClass,
    NormalForm,
    Parabolic,
    Side,
    as_mat2,
    require_finite,
)

logger = logging.getLogger(__name__)

_TRIANGULAR_FLOOR = math.sqrt(sys.float_info.epsilon)


def classify_half_trace(t, parabolic_tolerance=PARABOLIC_TOLERANCE):
    """Classify by half-trace: |t| < 1 - eps elliptic, |t| > 1 + eps hyperbolic."""
    distance = abs(t) - 1.0
    if distance < -parabolic_tolerance:
        return MatrixClass.ELLIPTIC
    if distance > parabolic_tolerance:
        return MatrixClass.HYPERBOLIC
    return MatrixClass.PARABOLIC


def classify(m, parabolic_tolerance=PARABOLIC_TOLERANCE, det_tolerance=DET_TOLERANCE):
    """
    Return the conjugacy class of a unimodular matrix.

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        parabolic_tolerance: Width of the parabolic band around |t| = 1.
        det_tolerance: Accepted determinant error for array input.

    Returns:
        ``MatrixClass.ELLIPTIC``, ``HYPERBOLIC`` or ``PARABOLIC``.

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
    """
    m = as_mat2(m, det_tolerance=det_tolerance)
    return classify_half_trace(m.half_trace, parabolic_tolerance)


def stability(m, parabolic_tolerance=PARABOLIC_TOLERANCE):
    """
    Return True when all powers of ``m`` stay bounded.

    That is the elliptic class plus the central elements +-I; other parabolic
    matrices grow linearly and hyperbolic ones exponentially.
    """
    m = as_mat2(m)
    kind = classify(m, parabolic_tolerance)
    if kind is MatrixClass.ELLIPTIC:
        return True
    if kind is MatrixClass.PARABOLIC:
        return abs(m.a12) <= parabolic_tolerance and abs(m.a21) <= parabolic_tolerance
    return False


def eigenvalues(m, parabolic_tolerance=PARABOLIC_TOLERANCE, det_tolerance=DET_TOLERANCE):
    """
    Return the eigenvalues E+- = t +- sqrt(t^2 - 1) of a unimodular matrix.

    Inside the parabolic band the pair collapses to (1, 1) or (-1, -1). Real
    pairs are ordered so |e_plus| > 1 and e_minus = 1 / e_plus.

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        parabolic_tolerance: Shared with :func:`classify`.
        det_tolerance: Accepted determinant error for array input.

    Returns:
        An :class:`EigenPair`.
    """
    m = as_mat2(m, det_tolerance=det_tolerance)
    t = m.half_trace
    kind = classify_half_trace(t, parabolic_tolerance)
    if kind is MatrixClass.PARABOLIC:
        unit = math.copysign(1.0, t)
        return EigenPair(EigenKind.DEGENERATE, unit, unit)
    if kind is MatrixClass.ELLIPTIC:
        s = math.sqrt((1.0 - t) * (1.0 + t))
        return EigenPair(EigenKind.UNIT_COMPLEX, complex(t, s), complex(t, -s))
    root = math.sqrt((abs(t) - 1.0) * (abs(t) + 1.0))
    e_plus = t + math.copysign(root, t)
    return EigenPair(EigenKind.REAL, e_plus, 1.0 / e_plus)


def core_entries(m):
    """Return ``(t, ch sin theta, sh, delta)`` of a matrix; the core is built from these."""
    t, rot, sym, skew = core_components(m)
    sh = math.hypot(sym, skew)
    delta = conjugation_angle(sym, skew, sh)
    return t, rot, sh, delta


def _wigner_sine(m, t, rot, sh):
    """
    Return |sin(phi/2)| or sinh(chi/2), the square root of |t^2 - det|.

    t^2 - det equals sh^2 - rot^2. Near the identity the core entries are small
    and carry the value to full relative precision; for large entries the
    half-trace form (t - 1)(t + 1) cancels less.
    """
    q = sh + abs(rot)
    if q * q < abs(m.a11) + abs(m.a22):
        s = math.sqrt(abs((sh - abs(rot)) * q))
        if s > 0.0:
            return s
    return math.sqrt(abs((t - 1.0) * (t + 1.0)))


def _is_triangular(k12, k21):
    """
    Tell whether a band core is triangular up to rounding.

    Dropping the smaller off-diagonal costs its own size. Keeping it costs a
    squeeze e^(2 eta) = large / small in G, so the cut sits at sqrt(eps) * scale.
    """
    small, large = sorted((abs(k12), abs(k21)))
    return small <= _TRIANGULAR_FLOOR * max(1.0, large)


def normal_form(
    m,
    parabolic_tolerance=PARABOLIC_TOLERANCE,
    conditioning_band=CONDITIONING_BAND,
    det_tolerance=DET_TOLERANCE,
):
    """
    Write ``m`` as sigma * G * W * G^-1.

    The central sign sigma makes the half-trace of sigma * m non-negative. The
    remaining factor is conjugated by L(delta) onto its core, and the core is
    matched against S(-eta) W S(eta):

    * elliptic: cos(phi/2) = k11, sign(phi) = sign(k21), e^(2 eta) = -k21 / k12
    * hyperbolic: cosh(chi/2) = k11, e^(2 eta) = k21 / k12
    * parabolic: N+(k21) if k12 vanishes, else N-(-k12); eta = 0

    A matrix inside the parabolic band whose smaller core off-diagonal is above
    rounding level keeps the rotation or boost form picked by the sign of
    k12 * k21; only its ``matrix_class`` says parabolic.

    G = L(delta) S(-eta).

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        parabolic_tolerance: Width of the parabolic band.
        conditioning_band: Half-trace distance from 1 below which the result is
            flagged ``near_boundary``.
        det_tolerance: Accepted determinant error for array input.

    Returns:
        The :class:`NormalForm`.

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
    """
    m = as_mat2(m, det_tolerance=det_tolerance)
    sigma = 1 if m.half_trace >= 0.0 else -1
    t, rot, sh, delta = core_entries(m.scaled_sign(sigma))
    kind = classify_half_trace(t, parabolic_tolerance)
    near_boundary = abs(t - 1.0) < conditioning_band

    k12, k21 = sh - rot, sh + rot
    s = 0.0
    if kind is not MatrixClass.PARABOLIC:
        s = _wigner_sine(m, t, rot, sh)
    elif not _is_triangular(k12, k21):
        # inside the band t^2 - 1 = k12 k21 is only known through the core
        s = math.sqrt(abs(k12 * k21))
    if s > 0.0:
        eta = math.copysign(math.log((sh + abs(rot)) / s), rot)
        if kind is MatrixClass.ELLIPTIC or (kind is MatrixClass.PARABOLIC and sh < abs(rot)):
            # |rot| > sh, so k21 = rot + sh carries the sign of rot
            form = Elliptic(2.0 * math.atan2(math.copysign(s, rot), t))
        else:
            form = Hyperbolic(2.0 * math.asinh(s), Branch.PLUS)
    else:
        eta = 0.0
        if abs(k12) <= abs(k21):
            form = Parabolic(k21, Side.LOWER)
        else:
            form = Parabolic(-k12, Side.UPPER)

    if near_boundary and not isinstance(form, Parabolic):
        logger.warning("half-trace %r lies within %g of the class boundary; normal form is ill-conditioned",
                       t, conditioning_band)
    elif near_boundary:
        logger.debug("parabolic normal form with half-trace %r", t)

    g = transformation_matrix(delta, eta, Branch.PLUS)
    logger.debug("normal form sigma=%d form=%r eta=%r delta=%r", sigma, form, eta, delta)
    return NormalForm(g=g, form=form, eta=eta, sigma=sigma, near_boundary=near_boundary,
                      classification=kind)


def reconstruct(nf):
    """
    Return sigma * G * W * G^-1.

    Args:
        nf: A :class:`NormalForm`.

    Returns:
        The reassembled matrix.
    """
    product = nf.g @ wigner_matrix(nf.form) @ nf.g.inverse()
    return product.scaled_sign(nf.sigma)


def contracted_wigner(kind, gamma, eta, side=Side.LOWER):
    """
    Return the boosted Wigner matrix that contracts onto N+-(gamma) as eta grows.

    For ``side=LOWER`` this is S(-eta) W S(eta) with W = R(phi), sin(phi/2) = gamma e^-eta,
    or W = X+(chi), sinh(chi/2) = gamma e^-eta. For ``side=UPPER`` it is
    S(eta) W S(-eta) with R(phi) or X-(chi) and the same parameter relation.
    The distance to the triangular limit is gamma e^(-2 eta) in the vanishing slot.

    Args:
        kind: ``MatrixClass.ELLIPTIC`` or ``MatrixClass.HYPERBOLIC``.
        gamma: The fixed off-diagonal value of the limit.
        eta: Squeeze parameter.
        side: Which triangular matrix is approached.

    Returns:
        The matrix.

    Raises:
        InvalidArgumentError: If the elliptic relation has no solution
            (|gamma| e^-eta > 1) or ``kind`` is parabolic.
    """
    gamma = require_finite("gamma", gamma)
    eta = require_finite("eta", eta)
    side = Side(side)
    kind = MatrixClass(kind)
    scaled = gamma * guarded(math.exp, -eta)
    if kind is MatrixClass.ELLIPTIC:
        if abs(scaled) > 1.0:
            raise InvalidArgumentError("no rotation angle satisfies sin(phi/2) = gamma e^-eta",
                                       gamma=gamma, eta=eta)
        w = rotation(2.0 * math.asin(scaled))
    elif kind is MatrixClass.HYPERBOLIC:
        chi = 2.0 * math.asinh(abs(scaled))
        if chi == 0.0:
            return wigner_matrix(Parabolic(0.0, side))
        # lower slot needs +sinh for gamma > 0, upper slot needs -sinh
        positive = (scaled > 0.0) == (side is Side.LOWER)
        w = wigner_matrix(Hyperbolic(chi, Branch.PLUS if positive else Branch.MINUS))
    else:
        raise InvalidArgumentError("contraction starts from an elliptic or hyperbolic matrix", kind=kind)

    if side is Side.LOWER:
        return squeeze_s(-eta) @ w @ squeeze_s(eta)
    return squeeze_s(eta) @ w @ squeeze_s(-eta)
