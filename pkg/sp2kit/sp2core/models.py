"""Value types of the Sp(2) core.

All types are frozen dataclasses: plain immutable values, safe to share between
threads. ``Mat2`` validates its invariants on construction, so any ``Mat2`` in
hand is finite and unimodular.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from sp2kit.common.error import InvalidArgumentError, InvalidMatrixError

DET_TOLERANCE = 1e-10
ROUNDTRIP_TOLERANCE = 1e-12
PARABOLIC_TOLERANCE = 1e-9
CONDITIONING_BAND = 1e-6


def require_finite(name, value):
    """Return ``value`` as a float, raising invalid-argument if it is not finite."""
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise InvalidArgumentError("argument must be a real number", name=name, value=value) from None
    if not math.isfinite(value):
        raise InvalidArgumentError("argument must be finite", name=name, value=value)
    return value


def det_residual(a11, a12, a21, a22):
    """
    Return |det - 1| divided by max(1, s^2), s the largest entry magnitude.

    The determinant is evaluated on entries scaled by ``s`` so that matrices with
    entries near the top of the binary64 range do not overflow the check.
    """
    scale = max(abs(a11), abs(a12), abs(a21), abs(a22), 1.0)
    inv = 1.0 / scale
    scaled_det = (a11 * inv) * (a22 * inv) - (a12 * inv) * (a21 * inv)
    return abs(scaled_det - inv * inv)


class Side(enum.Enum):
    """Which off-diagonal slot a parabolic Wigner matrix occupies."""

    LOWER = "lower"  # N+(gamma) = [[1, 0], [gamma, 1]]
    UPPER = "upper"  # N-(gamma) = [[1, -gamma], [0, 1]]


class Branch(enum.Enum):
    """Sign branch of the hyperbolic Wigner matrix X+/X-."""

    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self):
        return 1.0 if self is Branch.PLUS else -1.0


class Parity(enum.Enum):
    """Sign of the boost inside the core matrix R(theta) B(+-2 lambda) R(theta)."""

    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self):
        return 1.0 if self is Parity.PLUS else -1.0


class MatrixClass(enum.Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"


class EigenKind(enum.Enum):
    REAL = "real"
    UNIT_COMPLEX = "unit-complex"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Mat2:
    """A real 2x2 matrix with unit determinant, the ABCD matrix [[A, B], [C, D]].

    Attributes:
        a11: A.
        a12: B.
        a21: C.
        a22: D.
    """

    a11: float
    a12: float
    a21: float
    a22: float
    det_tolerance: float = field(default=DET_TOLERANCE, repr=False, compare=False)

    def __post_init__(self):
        for name in ("a11", "a12", "a21", "a22"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise InvalidMatrixError("matrix entry must be a real number", entry=name, value=value) from None
            if not math.isfinite(value):
                raise InvalidMatrixError("matrix entry must be finite", entry=name, value=value)
            object.__setattr__(self, name, value)
        residual = det_residual(self.a11, self.a12, self.a21, self.a22)
        if residual > self.det_tolerance:
            raise InvalidMatrixError("determinant differs from 1", det=self.det, tolerance=self.det_tolerance)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_rows(cls, rows, det_tolerance=DET_TOLERANCE):
        """
        Build a matrix from nested rows or any 2x2 array-like.

        Args:
            rows: ``[[A, B], [C, D]]`` or a (2, 2) ndarray.
            det_tolerance: Accepted determinant error.

        Returns:
            The validated matrix.

        Raises:
            InvalidMatrixError: If the shape is wrong, entries are not finite or
                the determinant is not 1.
        """
        try:
            arr = np.asarray(rows, dtype=float)
        except (TypeError, ValueError):
            raise InvalidMatrixError("matrix entries must be real numbers") from None
        if arr.shape != (2, 2):
            raise InvalidMatrixError("matrix must be 2x2", shape=arr.shape)
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1], det_tolerance=det_tolerance)

    @classmethod
    def from_entries(cls, entries, det_tolerance=DET_TOLERANCE):
        """Build a matrix from row-major ``(A, B, C, D)``."""
        entries = list(entries)
        if len(entries) != 4:
            raise InvalidMatrixError("expected four row-major entries", count=len(entries))
        return cls(*entries, det_tolerance=det_tolerance)

    @classmethod
    def renormalized(cls, entries, det_tolerance):
        """
        Divide row-major entries by sqrt(det), accepting |det - 1| up to ``det_tolerance``.

        Args:
            entries: Row-major ``(A, B, C, D)``.
            det_tolerance: Largest accepted determinant error before correction.

        Returns:
            A tuple ``(matrix, correction)`` where ``correction`` is the applied
            factor 1/sqrt(det).

        Raises:
            InvalidMatrixError: If the determinant is not positive or outside tolerance.
        """
        entries = [float(e) for e in entries]
        if len(entries) != 4 or not all(math.isfinite(e) for e in entries):
            raise InvalidMatrixError("expected four finite row-major entries", entries=entries)
        a, b, c, d = entries
        det = a * d - b * c
        if not det > 0.0 or det_residual(a, b, c, d) > det_tolerance:
            raise InvalidMatrixError("matrix is not unimodular within tolerance",
                                     det=det, tolerance=det_tolerance)
        correction = 1.0 / math.sqrt(det)
        return cls(a * correction, b * correction, c * correction, d * correction), correction

    @property
    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def trace(self):
        return self.a11 + self.a22

    @property
    def half_trace(self):
        return 0.5 * (self.a11 + self.a22)

    def entries(self):
        """Return the row-major tuple ``(A, B, C, D)``."""
        return (self.a11, self.a12, self.a21, self.a22)

    def to_array(self):
        return np.array([[self.a11, self.a12], [self.a21, self.a22]])

    def inverse(self):
        # unit determinant: the adjugate is the inverse
        return Mat2(self.a22, -self.a12, -self.a21, self.a11, det_tolerance=self.det_tolerance)

    def transpose(self):
        return Mat2(self.a11, self.a21, self.a12, self.a22, det_tolerance=self.det_tolerance)

    def __matmul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            det_tolerance=max(self.det_tolerance, other.det_tolerance),
        )

    def __neg__(self):
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22, det_tolerance=self.det_tolerance)

    def scaled_sign(self, sigma):
        """Return ``sigma * self`` for a central sign ``sigma`` in {+1, -1}."""
        return self if sigma > 0 else -self

    def max_abs_diff(self, other):
        """Largest elementwise absolute difference to another matrix."""
        return max(abs(x - y) for x, y in zip(self.entries(), as_mat2(other).entries()))

    def allclose(self, other, atol=1e-12):
        return self.max_abs_diff(other) <= atol


def as_mat2(value, det_tolerance=DET_TOLERANCE):
    """
    Coerce ``value`` into a :class:`Mat2`.

    Args:
        value: A ``Mat2``, nested rows or a (2, 2) array.
        det_tolerance: Accepted determinant error for non-``Mat2`` input.

    Returns:
        The matrix.

    Raises:
        InvalidMatrixError: If the input is malformed or not unimodular.
    """
    if isinstance(value, Mat2):
        return value
    return Mat2.from_rows(value, det_tolerance=det_tolerance)


def principal_angle(angle):
    """Map an angle into (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped == -math.pi:
        wrapped = math.pi
    return wrapped


@dataclass(frozen=True)
class BargmannParams:
    """Parameters of M = R(theta1) B(2 lambda) R(theta2).

    Attributes:
        theta1: First rotation angle in radians.
        theta2: Second rotation angle in radians.
        lam: Boost parameter; canonical values are >= 0.
    """

    theta1: float
    theta2: float
    lam: float

    def __post_init__(self):
        object.__setattr__(self, "theta1", require_finite("theta1", self.theta1))
        object.__setattr__(self, "theta2", require_finite("theta2", self.theta2))
        object.__setattr__(self, "lam", require_finite("lambda", self.lam))

    @classmethod
    def from_core(cls, theta, delta, lam):
        """Build from the core angle ``theta`` and conjugation angle ``delta``."""
        return cls(theta + delta, theta - delta, lam)

    @property
    def theta(self):
        return 0.5 * (self.theta1 + self.theta2)

    @property
    def delta(self):
        return 0.5 * (self.theta1 - self.theta2)

    @property
    def is_canonical(self):
        return (self.lam >= 0.0
                and -math.pi < self.theta <= math.pi
                and -math.pi < self.delta <= math.pi)


@dataclass(frozen=True)
class Elliptic:
    """Rotation-like Wigner matrix R(phi), phi in (-2 pi, 2 pi)."""

    phi: float

    def __post_init__(self):
        phi = require_finite("phi", self.phi)
        if not -2.0 * math.pi < phi < 2.0 * math.pi:
            raise InvalidArgumentError("elliptic angle must lie in (-2 pi, 2 pi)", phi=phi)
        object.__setattr__(self, "phi", phi)

    @property
    def matrix_class(self):
        return MatrixClass.ELLIPTIC

    @property
    def parameter(self):
        return self.phi


@dataclass(frozen=True)
class Hyperbolic:
    """Boost-like Wigner matrix X+(chi) or X-(chi), chi > 0."""

    chi: float
    branch: Branch = Branch.PLUS

    def __post_init__(self):
        chi = require_finite("chi", self.chi)
        if not chi > 0.0:
            raise InvalidArgumentError("hyperbolic rapidity must be positive", chi=chi)
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "branch", Branch(self.branch))

    @property
    def matrix_class(self):
        return MatrixClass.HYPERBOLIC

    @property
    def parameter(self):
        return self.chi


@dataclass(frozen=True)
class Parabolic:
    """Triangular Wigner matrix N+(gamma) (lower) or N-(gamma) (upper)."""

    gamma: float
    side: Side = Side.LOWER

    def __post_init__(self):
        object.__setattr__(self, "gamma", require_finite("gamma", self.gamma))
        object.__setattr__(self, "side", Side(self.side))

    @property
    def matrix_class(self):
        return MatrixClass.PARABOLIC

    @property
    def parameter(self):
        return self.gamma


WignerForm = Elliptic | Hyperbolic | Parabolic


@dataclass(frozen=True)
class NormalForm:
    """M = sigma * G * W(form) * G^-1.

    Attributes:
        g: The transformation matrix G = L(delta) S(-+eta).
        form: The Wigner normal form.
        eta: Squeeze parameter of S(eta).
        sigma: Central sign, +1 or -1.
        near_boundary: Set when the half-trace lies within the conditioning band
            of +-1; the result is still usable but less accurate.
        classification: Class assigned by the half-trace test when it differs
            from the class of ``form``. Inside the parabolic band a matrix that
            is not exactly triangular keeps a rotation or boost form.
    """

    g: Mat2
    form: WignerForm
    eta: float = 0.0
    sigma: int = 1
    near_boundary: bool = field(default=False, compare=False)
    classification: MatrixClass | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise InvalidArgumentError("central sign must be +1 or -1", sigma=self.sigma)
        object.__setattr__(self, "eta", require_finite("eta", self.eta))

    @property
    def matrix_class(self):
        if self.classification is not None:
            return self.classification
        return self.form.matrix_class


@dataclass(frozen=True)
class EigenPair:
    """Eigenvalues of a unimodular matrix, ordered so |e_plus| >= 1."""

    kind: EigenKind
    e_plus: complex | float
    e_minus: complex | float
