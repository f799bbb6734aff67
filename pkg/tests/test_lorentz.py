import math

import numpy as np
import pytest
from scipy.optimize import brentq

from fixtures import PI
from sp2kit.common import InvalidArgumentError, InvalidMatrixError
from sp2kit.lorentz import (
    METRIC,
    FourVector,
    Mat4,
    adjoint_action,
    four_b,
    four_boost_x,
    four_boost_z,
    four_n,
    four_rotation_y,
    four_rotation_z,
    little_group_element,
    lorentz4_of,
    orbit_representative,
)
from sp2kit.sp2core import (
    Branch,
    Elliptic,
    Hyperbolic,
    Mat2,
    Parabolic,
    Side,
    boost_b,
    rotation,
    squeeze_s,
    wigner_matrix,
)

REST = FourVector(1.0, 0.0, 0.0, 0.0)


def test_four_vector_basics():
    v = FourVector.massive(2.0, 0.5)
    assert v.minkowski_norm == pytest.approx(4.0, abs=1e-14)
    assert v.x == v.y == 0.0
    assert FourVector.from_array([1, 2, 3, 4]) == FourVector(1.0, 2.0, 3.0, 4.0)
    assert v.scale == v.t


def test_four_vector_validation():
    with pytest.raises(InvalidArgumentError):
        FourVector(math.nan, 0.0, 0.0, 0.0)
    with pytest.raises(InvalidArgumentError, match="four components"):
        FourVector.from_array([1.0, 2.0, 3.0])


def test_mat4_validation_and_immutability():
    with pytest.raises(InvalidMatrixError, match="4x4"):
        Mat4(np.eye(3))
    with pytest.raises(InvalidMatrixError, match="finite"):
        Mat4(np.full((4, 4), math.inf))
    m = Mat4.identity()
    with pytest.raises(ValueError):
        m.data[0, 0] = 2.0
    with pytest.raises(ValueError):
        METRIC[0, 0] = 2.0
    assert m @ REST == REST
    assert m.is_lorentz()


def test_constructors_preserve_the_metric():
    for m in (four_boost_z(1.2), four_rotation_z(0.7), four_boost_x(-0.4), four_n(2.5),
              four_rotation_y(2.0), four_b(1.5)):
        assert m.is_lorentz()
    assert not Mat4(np.diag([2.0, 1.0, 1.0, 1.0])).is_lorentz()


def test_constructor_examples():
    v = four_boost_z(math.log(4.0)) @ REST
    assert v.max_abs_diff(FourVector(2.125, 0.0, 0.0, 1.875)) <= 1e-14
    assert four_rotation_z(1.1) @ REST == REST
    assert (four_boost_x(0.9) @ FourVector(0.0, 0.0, 0.0, 3.0)).max_abs_diff(FourVector(0.0, 0.0, 0.0, 3.0)) == 0.0
    turned = four_rotation_y(PI / 2.0) @ FourVector(0.0, 1.0, 0.0, 0.0)
    assert turned.max_abs_diff(FourVector(0.0, 0.0, 0.0, -1.0)) <= 1e-15


def test_four_n_fixes_light_like_vector():
    k = FourVector(3.0, 0.0, 0.0, 3.0)
    assert (four_n(1.7) @ k).max_abs_diff(k) <= 1e-14


def test_four_n_is_additive():
    assert (four_n(0.6) @ four_n(-1.9)).allclose(four_n(-1.3), atol=1e-14)
    assert four_n(0.0) == Mat4.identity()


def test_four_n_rejects_huge_gamma():
    with pytest.raises(InvalidArgumentError):
        four_n(1e200)


@pytest.mark.parametrize("gamma", [-2.0, 0.3, 1.5])
def test_four_n_is_image_of_upper_triangular(gamma):
    assert four_n(gamma).allclose(lorentz4_of(wigner_matrix(Parabolic(gamma, Side.UPPER))), atol=1e-14)


def test_adjoint_action_examples():
    x_axis = FourVector(0.0, 1.0, 0.0, 0.0)
    assert adjoint_action(rotation(PI / 2.0), x_axis).max_abs_diff(FourVector(0.0, 0.0, 0.0, -1.0)) <= 1e-15
    squeezed = adjoint_action(squeeze_s(math.log(4.0)), REST)
    assert squeezed.max_abs_diff(FourVector(2.125, 0.0, 0.0, 1.875)) <= 1e-14
    y_axis = FourVector(0.0, 0.0, 5.0, 0.0)
    assert adjoint_action(boost_b(0.8), y_axis) == y_axis


def test_adjoint_action_accepts_rows():
    v = FourVector(2.0, 0.5, -1.0, 1.0)
    assert adjoint_action([[1.0, 0.0], [0.0, 1.0]], v) == v
    with pytest.raises(InvalidMatrixError):
        adjoint_action([[2.0, 0.0], [0.0, 2.0]], v)


@pytest.mark.parametrize("m, expected", [
    (squeeze_s(0.9), four_boost_z(0.9)),
    (rotation(1.3), four_rotation_y(1.3)),
    (boost_b(1.4), four_b(1.4)),
    (-Mat2.identity(), Mat4.identity()),
])
def test_lorentz4_of_factors(m, expected):
    assert lorentz4_of(m).allclose(expected, atol=1e-14)


def test_sign_is_in_the_kernel():
    m = boost_b(0.6) @ rotation(0.4)
    assert lorentz4_of(-m).allclose(lorentz4_of(m), atol=0.0)


@pytest.mark.parametrize("form", [
    Elliptic(1.1),
    Elliptic(-2.4),
    Hyperbolic(0.8, Branch.PLUS),
    Hyperbolic(1.6, Branch.MINUS),
    Parabolic(1.5, Side.LOWER),
    Parabolic(-0.7, Side.UPPER),
])
@pytest.mark.parametrize("eta", [-1.5, 0.0, 0.9])
def test_little_group_fixes_orbit_representative(form, eta):
    v = orbit_representative(form, eta)
    image = lorentz4_of(little_group_element(form, eta)) @ v
    assert image.max_abs_diff(v) <= 1e-12 * max(1.0, v.scale) ** 3


def test_orbit_representatives():
    assert orbit_representative(Elliptic(0.5), 0.0) == REST
    assert orbit_representative(Elliptic(0.5), 1.0).minkowski_norm == pytest.approx(1.0, abs=1e-14)
    assert orbit_representative(Hyperbolic(0.5), 0.7).minkowski_norm == pytest.approx(-1.0, abs=1e-14)
    assert orbit_representative(Parabolic(0.5, Side.UPPER), 3.0) == FourVector(1.0, 0.0, 0.0, 1.0)
    assert orbit_representative(Parabolic(0.5, Side.LOWER), 3.0) == FourVector(1.0, 0.0, 0.0, -1.0)
    with pytest.raises(InvalidArgumentError):
        orbit_representative(0.5, 0.0)


def test_little_group_element_matches_squeezed_wigner():
    form = Elliptic(0.9)
    expected = squeeze_s(-0.4) @ rotation(0.9) @ squeeze_s(0.4)
    assert little_group_element(form, 0.4).allclose(expected, atol=0.0)


@pytest.mark.parametrize("theta, energy, momentum", [
    (0.4, 2.0, 1.0),
    (1.1, 5.0, 4.5),
    (-0.6, 1.0, 0.3),
    (0.7, math.cosh(1.0), math.sinh(1.0)),
])
def test_rotation_boost_rotation_closes_on_the_axis(theta, energy, momentum):
    s = math.sin(theta)
    if s < 0.0:
        theta, s = -theta, -s
    v = FourVector(energy, 0.0, 0.0, momentum)

    def transverse(lam):
        return -energy * math.sinh(2.0 * lam) + s * momentum * (math.cosh(2.0 * lam) + 1.0)

    lam = brentq(transverse, 0.0, 5.0, xtol=1e-14)
    assert lam == pytest.approx(math.atanh(s * momentum / energy), abs=1e-10)

    composite = four_rotation_y(theta) @ four_b(-2.0 * lam) @ four_rotation_y(theta)
    image = composite @ v
    assert abs(image.x) <= 1e-10 * energy
    assert image.y == 0.0
    # the composite maps the momentum back onto itself
    assert image.t == pytest.approx(energy, abs=1e-9 * energy)
    assert image.z == pytest.approx(momentum, abs=1e-9 * energy)
    assert image.minkowski_norm == pytest.approx(v.minkowski_norm, abs=1e-10)

    covering = lorentz4_of(rotation(theta) @ boost_b(-2.0 * lam) @ rotation(theta))
    assert covering.allclose(composite, atol=1e-12)
