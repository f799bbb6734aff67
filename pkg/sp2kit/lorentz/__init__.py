"""Lorentz-group view of Sp(2): four-vectors, 4x4 matrices and little groups."""

from sp2kit.lorentz.logic import (
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
from sp2kit.lorentz.models import METRIC, FourVector, Mat4

__all__ = [
    "METRIC",
    "FourVector",
    "Mat4",
    "adjoint_action",
    "four_b",
    "four_boost_x",
    "four_boost_z",
    "four_n",
    "four_rotation_y",
    "four_rotation_z",
    "little_group_element",
    "lorentz4_of",
    "orbit_representative",
]
