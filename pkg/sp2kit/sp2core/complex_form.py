"""Conjugation between the real ABCD form and the complex SU(1,1)-style form.

``C1 = (1/sqrt 2) [[1, i], [i, 1]]`` sends R(theta) to diag(e^(i theta/2), e^(-i theta/2))
and leaves B(2 lambda) unchanged.
"""

import math

import numpy as np

from sp2kit.common.error import InvalidMatrixError
from sp2kit.sp2core.factors import boost_b
from sp2kit.sp2core.models import DET_TOLERANCE, Mat2, as_mat2

_C1 = np.array([[1.0, 1.0j], [1.0j, 1.0]]) / math.sqrt(2.0)
_C1_INV = np.array([[1.0, -1.0j], [-1.0j, 1.0]]) / math.sqrt(2.0)

IMAGINARY_TOLERANCE = 1e-12


def to_complex_form(m):
    """
    Return C1 m C1^-1 as a complex (2, 2) ndarray.

    Args:
        m: A ``Mat2`` or 2x2 array-like.

    Returns:
        The complex matrix; its determinant is 1.
    """
    m = as_mat2(m)
    return _C1 @ m.to_array() @ _C1_INV


def from_complex_form(z, det_tolerance=DET_TOLERANCE):
    """
    Undo :func:`to_complex_form`.

    Args:
        z: Complex 2x2 array-like.
        det_tolerance: Accepted determinant error of the real result.

    Returns:
        The real ``Mat2``.

    Raises:
        InvalidMatrixError: If ``z`` is not 2x2 or is not the image of a real matrix.
    """
    z = np.asarray(z, dtype=complex)
    if z.shape != (2, 2):
        raise InvalidMatrixError("matrix must be 2x2", shape=z.shape)
    back = _C1_INV @ z @ _C1
    scale = max(1.0, float(np.max(np.abs(back))))
    imaginary = float(np.max(np.abs(back.imag)))
    if imaginary > IMAGINARY_TOLERANCE * scale:
        raise InvalidMatrixError("complex matrix is not the image of a real matrix", imaginary=imaginary)
    return Mat2.from_rows(back.real, det_tolerance=det_tolerance)


def compose_bargmann_complex(params):
    """
    Return the complex form of R(theta1) B(2 lambda) R(theta2) built factor by factor.

    The rotations become diagonal phases, so the product is
    ``diag(e^(i theta1/2), e^(-i theta1/2)) B(2 lambda) diag(e^(i theta2/2), e^(-i theta2/2))``.
    """
    first = np.diag([np.exp(0.5j * params.theta1), np.exp(-0.5j * params.theta1)])
    second = np.diag([np.exp(0.5j * params.theta2), np.exp(-0.5j * params.theta2)])
    return first @ boost_b(2.0 * params.lam).to_array() @ second
