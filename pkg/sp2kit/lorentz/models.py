"""Four-vectors and 4x4 Lorentz matrices acting on (t, x, y, z)."""

import math
from dataclasses import dataclass

import numpy as np

from sp2kit.common.error import InvalidArgumentError, InvalidMatrixError
from sp2kit.sp2core.factors import guarded
from sp2kit.sp2core.models import require_finite

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
METRIC.setflags(write=False)


@dataclass(frozen=True)
class FourVector:
    """A Minkowski vector in natural units (c = 1).

    Attributes:
        t: Time (energy) component.
        x: x component.
        y: y component.
        z: z component.
    """

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            object.__setattr__(self, name, require_finite(name, getattr(self, name)))

    @classmethod
    def from_array(cls, values):
        values = np.asarray(values, dtype=float)
        if values.shape != (4,):
            raise InvalidArgumentError("four-vector needs four components", shape=values.shape)
        return cls(*values)

    @classmethod
    def massive(cls, mass, eta):
        """Return (m cosh eta, 0, 0, m sinh eta), a particle of mass m moving along z."""
        return cls(mass * guarded(math.cosh, eta), 0.0, 0.0, mass * guarded(math.sinh, eta))

    def to_array(self):
        return np.array([self.t, self.x, self.y, self.z])

    @property
    def minkowski_norm(self):
        """t^2 - x^2 - y^2 - z^2; positive for time-like vectors."""
        return self.t * self.t - self.x * self.x - self.y * self.y - self.z * self.z

    @property
    def scale(self):
        return max(abs(self.t), abs(self.x), abs(self.y), abs(self.z))

    def max_abs_diff(self, other):
        return float(np.max(np.abs(self.to_array() - other.to_array())))


@dataclass(frozen=True, eq=False)
class Mat4:
    """A real 4x4 matrix on (t, x, y, z), stored as a read-only ndarray."""

    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=float)
        if data.shape != (4, 4):
            raise InvalidMatrixError("matrix must be 4x4", shape=data.shape)
        if not np.all(np.isfinite(data)):
            raise InvalidMatrixError("matrix entries must be finite")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def identity(cls):
        return cls(np.eye(4))

    def __matmul__(self, other):
        if isinstance(other, Mat4):
            return Mat4(self.data @ other.data)
        if isinstance(other, FourVector):
            return FourVector.from_array(self.data @ other.to_array())
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Mat4):
            return NotImplemented
        return bool(np.array_equal(self.data, other.data))

    __hash__ = None

    def metric_residual(self):
        """Largest entry of |L^T g L - g|, scaled by the squared largest entry."""
        scale = max(1.0, float(np.max(np.abs(self.data))))
        return float(np.max(np.abs(self.data.T @ METRIC @ self.data - METRIC))) / (scale * scale)

    def is_lorentz(self, tolerance=1e-10):
        return self.metric_residual() <= tolerance

    def max_abs_diff(self, other):
        return float(np.max(np.abs(self.data - other.data)))

    def allclose(self, other, atol=1e-12):
        return self.max_abs_diff(other) <= atol
