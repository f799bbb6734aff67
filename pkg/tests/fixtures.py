"""Shared builders and hypothesis strategies for the sp2kit tests."""

import math
import random

from hypothesis import strategies as st

from sp2kit.sp2core import (
    BargmannParams,
    Elliptic,
    Hyperbolic,
    Mat2,
    NormalForm,
    Parabolic,
    Side,
    compose_bargmann,
    core_matrix,
    reconstruct,
    transformation_matrix,
    wigner_matrix,
)

PI = math.pi

# theta = arcsin(3/5), lambda = ln 2: cosh = 5/4, sinh = 3/4, so the core is [[1, 0], [3/2, 1]]
RATIONAL_THETA = math.asin(0.6)
RATIONAL_LAMBDA = math.log(2.0)

angles = st.floats(min_value=-PI, max_value=PI, allow_nan=False, allow_infinity=False)
boosts = st.floats(min_value=0.0, max_value=5.0, allow_nan=False, allow_infinity=False)


def angle_gap(a, b):
    """Distance between two angles modulo 2 pi."""
    return abs(math.remainder(a - b, 2.0 * PI))


def max_entry(m):
    return max(abs(x) for x in m.entries())


def relative_gap(a, b):
    """Largest elementwise difference relative to the larger matrix norm."""
    return a.max_abs_diff(b) / max(1.0, max_entry(a), max_entry(b))


@st.composite
def bargmann_params(draw, max_lambda=5.0):
    return BargmannParams(draw(angles), draw(angles),
                          draw(st.floats(min_value=0.0, max_value=max_lambda)))


@st.composite
def sp2_matrices(draw, max_lambda=3.0):
    """Random unimodular matrices, any class, any sign of the trace."""
    return compose_bargmann(draw(bargmann_params(max_lambda)))


@st.composite
def parabolic_matrices(draw):
    """Exact parabolic constructions: core matrices with tanh(lambda) = sin(theta), conjugated by L(delta)."""
    theta = draw(st.floats(min_value=0.05, max_value=1.5))
    lam = math.atanh(math.sin(theta))
    delta = draw(angles)
    return compose_bargmann(BargmannParams.from_core(theta, delta, lam))


def samples_by_class(kind, count, seed=0):
    """
    Deterministic random matrices of one class, built from their normal forms.

    The squeeze stays within |eta| <= 0.5 so G is well conditioned. Hyperbolic
    rapidities keep n chi / 2 <= 300 for n = 2^20. Parabolic samples are exact
    triangular matrices: any rounding residue in the vanishing slot would grow
    quadratically with n.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sigma = rng.choice((1, -1))
        if kind == "parabolic":
            gamma = rng.uniform(-3.0, 3.0)
            side = rng.choice((Side.LOWER, Side.UPPER))
            out.append(wigner_matrix(Parabolic(gamma, side)).scaled_sign(sigma))
            continue
        if kind == "elliptic":
            form = Elliptic(rng.choice((1, -1)) * rng.uniform(0.3, 2.0 * PI - 0.3))
        else:
            form = Hyperbolic(rng.uniform(2e-4, 5.7e-4))
        eta = rng.uniform(-0.5, 0.5)
        g = transformation_matrix(rng.uniform(-PI, PI), eta)
        out.append(reconstruct(NormalForm(g, form, eta, sigma)))
    return out


def iwasawa_lower():
    return Mat2(1.0, 0.0, 1.5, 1.0)


def rational_core():
    return core_matrix(RATIONAL_THETA, RATIONAL_LAMBDA)
