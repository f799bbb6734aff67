"""Sp(2) matrices: Bargmann decomposition, Wigner normal forms and powers."""

from sp2kit.sp2core.bargmann import (
    abcd_from_bargmann,
    compose_bargmann,
    cosh_two_lambda,
    decompose_bargmann,
)
from sp2kit.sp2core.complex_form import (
    compose_bargmann_complex,
    from_complex_form,
    to_complex_form,
)
from sp2kit.sp2core.factors import (
    boost_b,
    core_matrix,
    iwasawa,
    rotation,
    rotation_l,
    squeeze_s,
    transformation_matrix,
    wigner_matrix,
)
from sp2kit.sp2core.models import (
    BargmannParams,
    Branch,
    EigenKind,
    EigenPair,
    Elliptic,
    Hyperbolic,
    Mat2,
    MatrixClass,
    NormalForm,
    Parabolic,
    Parity,
    Side,
    WignerForm,
)
from sp2kit.sp2core.power import power, power_oracle
from sp2kit.sp2core.wigner import (
    classify,
    contracted_wigner,
    eigenvalues,
    normal_form,
    reconstruct,
    stability,
)

__all__ = [
    "BargmannParams",
    "Branch",
    "EigenKind",
    "EigenPair",
    "Elliptic",
    "Hyperbolic",
    "Mat2",
    "MatrixClass",
    "NormalForm",
    "Parabolic",
    "Parity",
    "Side",
    "WignerForm",
    "abcd_from_bargmann",
    "boost_b",
    "classify",
    "compose_bargmann",
    "compose_bargmann_complex",
    "contracted_wigner",
    "core_matrix",
    "cosh_two_lambda",
    "decompose_bargmann",
    "eigenvalues",
    "from_complex_form",
    "iwasawa",
    "normal_form",
    "power",
    "power_oracle",
    "reconstruct",
    "rotation",
    "rotation_l",
    "squeeze_s",
    "stability",
    "to_complex_form",
    "transformation_matrix",
    "wigner_matrix",
]
