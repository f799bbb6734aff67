"""N-th powers of unimodular matrices.

:func:`power` works from a normal form and costs the same for every ``n``:
W^n is written down directly and conjugated back with two products.
:func:`power_oracle` is the independent check, plain binary exponentiation on
the entries with periodic determinant re-normalization.
"""

import logging
import math
import operator

import numpy as np

from sp2kit.common.error import InvalidArgumentError, Sp2OverflowError
from sp2kit.sp2core.factors import guarded, rotation
from sp2kit.sp2core.models import (
    DET_TOLERANCE,
    Elliptic,
    Hyperbolic,
    Mat2,
    Parabolic,
    Side,
    as_mat2,
    det_residual,
)

logger = logging.getLogger(__name__)

RENORMALIZE_INTERVAL = 32
DRIFT_THRESHOLD = 1e-12

_FOUR_PI = 4.0 * math.pi


def _exponent(n):
    if isinstance(n, bool):
        raise InvalidArgumentError("exponent must be an integer", n=n)
    try:
        n = operator.index(n)
    except TypeError:
        raise InvalidArgumentError("exponent must be an integer", n=n) from None
    if n < 0:
        raise InvalidArgumentError("exponent must be non-negative", n=n)
    return n


def _wigner_power(form, n):
    if isinstance(form, Elliptic):
        # R is 4 pi periodic under the half-angle convention
        return rotation(math.remainder(n * form.phi, _FOUR_PI))
    if isinstance(form, Hyperbolic):
        half = 0.5 * n * form.chi
        ch = guarded(math.cosh, half)
        sh = guarded(math.sinh, half) * form.branch.sign
        return Mat2(ch, sh, sh, ch)
    if isinstance(form, Parabolic):
        gamma = n * form.gamma
        if not math.isfinite(gamma):
            raise Sp2OverflowError("parabolic power leaves the floating-point range", gamma=form.gamma, n=n)
        if form.side is Side.LOWER:
            return Mat2(1.0, 0.0, gamma, 1.0)
        return Mat2(1.0, -gamma, 0.0, 1.0)
    raise InvalidArgumentError("not a Wigner form", form=form)


def _to_mat2(arr, what, det_tolerance=DET_TOLERANCE):
    if not np.all(np.isfinite(arr)):
        raise Sp2OverflowError(f"{what} leaves the floating-point range")
    return Mat2(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1], det_tolerance=det_tolerance)


def power(nf, n):
    """
    Return M^n = sigma^n * G * W^n * G^-1 for the matrix behind a normal form.

    W^n stays in the same family: R(phi)^n = R(n phi), X(chi)^n = X(n chi) on the
    same branch and N(gamma)^n = N(n gamma) on the same side.

    Args:
        nf: A :class:`NormalForm`, usually from ``normal_form(m)``.
        n: Non-negative integer exponent.

    Returns:
        The power as a ``Mat2``.

    Raises:
        InvalidArgumentError: If ``n`` is negative or not an integer.
        Sp2OverflowError: If the entries leave the binary64 range.
    """
    n = _exponent(n)
    if n == 0:
        return Mat2.identity()
    wn = _wigner_power(nf.form, n)
    sign = 1.0 if nf.sigma > 0 or n % 2 == 0 else -1.0
    g = nf.g.to_array()
    with np.errstate(over="raise", invalid="raise"):
        try:
            product = sign * (g @ wn.to_array() @ nf.g.inverse().to_array())
        except FloatingPointError:
            raise Sp2OverflowError("power leaves the floating-point range", n=n, form=nf.form) from None
    logger.debug("closed-form power n=%d form=%r", n, nf.form)
    return _to_mat2(product, "power")


def _renormalize(arr, drift_threshold):
    a, b, c, d = (float(x) for x in arr.ravel())
    if det_residual(a, b, c, d) <= drift_threshold:
        return arr
    scale = max(abs(a), abs(b), abs(c), abs(d), 1.0)
    unit = arr / scale
    # det / scale^2, formed without overflow
    scaled_det = unit[0, 0] * unit[1, 1] - unit[0, 1] * unit[1, 0]
    if scaled_det <= 0.0:
        return arr
    return unit / math.sqrt(scaled_det)


def power_oracle(m, n, renormalize_interval=RENORMALIZE_INTERVAL, drift_threshold=DRIFT_THRESHOLD):
    """
    Return m^n by binary exponentiation.

    Every ``renormalize_interval`` squarings the running square is divided by
    sqrt(det) when its determinant has drifted further than ``drift_threshold``
    from 1; the final result gets the same treatment.

    Args:
        m: A ``Mat2`` or 2x2 array-like.
        n: Non-negative integer exponent.
        renormalize_interval: Squarings between determinant checks.
        drift_threshold: Scale-relative determinant drift that triggers a correction.

    Returns:
        The power as a ``Mat2``.

    Raises:
        InvalidMatrixError: If ``m`` is not unimodular.
        Sp2OverflowError: If an intermediate product overflows.
    """
    m = as_mat2(m)
    n = _exponent(n)
    if renormalize_interval < 1:
        raise InvalidArgumentError("renormalize interval must be positive", interval=renormalize_interval)
    result = np.eye(2)
    base = m.to_array()
    squarings = 0
    remaining = n
    with np.errstate(over="raise", invalid="raise"):
        try:
            while remaining:
                if remaining & 1:
                    result = result @ base
                remaining >>= 1
                if remaining:
                    base = base @ base
                    squarings += 1
                    if squarings % renormalize_interval == 0:
                        base = _renormalize(base, drift_threshold)
            result = _renormalize(result, drift_threshold)
        except FloatingPointError:
            raise Sp2OverflowError("oracle power leaves the floating-point range", n=n) from None
    logger.debug("oracle power n=%d after %d squarings", n, squarings)
    return _to_mat2(result, "oracle power")
