"""One-parameter factor matrices: rotations, boosts, squeezes and Wigner matrices.

Rotations use the half-angle convention: ``rotation(theta)`` has entries in
``theta / 2``, so ``rotation(2 pi) == -I``.
"""

import math

from sp2kit.common.error import InvalidArgumentError, Sp2OverflowError
from sp2kit.sp2core.models import (
    Branch,
    Elliptic,
    Hyperbolic,
    Mat2,
    Parabolic,
    Parity,
    Side,
    require_finite,
)


def guarded(fn, *args):
    try:
        return fn(*args)
    except OverflowError:
        raise Sp2OverflowError("value exceeds the floating-point range",
                               function=fn.__name__, args=args) from None


def rotation(theta):
    """
    Return R(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].

    Args:
        theta: Rotation angle in radians.

    Returns:
        The rotation matrix.

    Raises:
        InvalidArgumentError: If ``theta`` is not finite.
    """
    half = 0.5 * require_finite("theta", theta)
    c, s = math.cos(half), math.sin(half)
    return Mat2(c, -s, s, c)


def rotation_l(delta):
    """Return the conjugating rotation L(delta); same functional form as :func:`rotation`."""
    return rotation(delta)


def boost_b(two_lambda):
    """
    Return B(2 lambda) = [[cosh l, sinh l], [sinh l, cosh l]] with l = two_lambda / 2.

    Raises:
        InvalidArgumentError: If the argument is not finite.
        Sp2OverflowError: If cosh overflows.
    """
    lam = 0.5 * require_finite("two_lambda", two_lambda)
    ch, sh = guarded(math.cosh, lam), guarded(math.sinh, lam)
    return Mat2(ch, sh, sh, ch)


def squeeze_s(eta):
    """
    Return S(eta) = diag(e^(eta/2), e^(-eta/2)).

    Raises:
        InvalidArgumentError: If ``eta`` is not finite.
        Sp2OverflowError: If e^(|eta|/2) overflows.
    """
    half = 0.5 * require_finite("eta", eta)
    up = guarded(math.exp, half)
    down = guarded(math.exp, -half)
    return Mat2(up, 0.0, 0.0, down)


def wigner_matrix(form):
    """
    Return the 2x2 Wigner matrix of a normal form.

    ``Elliptic(phi)`` gives R(phi), ``Hyperbolic(chi, +-)`` gives X+-(chi),
    ``Parabolic(gamma, lower)`` gives N+(gamma) and ``Parabolic(gamma, upper)``
    gives N-(gamma).

    Args:
        form: An ``Elliptic``, ``Hyperbolic`` or ``Parabolic`` value.

    Returns:
        The Wigner matrix.
    """
    if isinstance(form, Elliptic):
        return rotation(form.phi)
    if isinstance(form, Hyperbolic):
        half = 0.5 * form.chi
        ch, sh = guarded(math.cosh, half), guarded(math.sinh, half) * form.branch.sign
        return Mat2(ch, sh, sh, ch)
    if isinstance(form, Parabolic):
        if form.side is Side.LOWER:
            return Mat2(1.0, 0.0, form.gamma, 1.0)
        return Mat2(1.0, -form.gamma, 0.0, 1.0)
    raise InvalidArgumentError("not a Wigner form", form=form)


def core_matrix(theta, lam, parity=Parity.PLUS):
    """
    Return the equal-diagonal core R(theta) B(+-2 lambda) R(theta).

    Entries are computed in closed form:
    ``[[ch cos t, -ch sin t +- sh], [ch sin t +- sh, ch cos t]]``.

    Args:
        theta: Core angle.
        lam: Boost parameter lambda.
        parity: ``Parity.PLUS`` for B(2 lambda), ``Parity.MINUS`` for B(-2 lambda).

    Returns:
        The core matrix.
    """
    theta = require_finite("theta", theta)
    lam = require_finite("lambda", lam)
    sign = Parity(parity).sign
    ch, sh = guarded(math.cosh, lam), guarded(math.sinh, lam)
    diag = ch * math.cos(theta)
    rot = ch * math.sin(theta)
    return Mat2(diag, -rot + sign * sh, rot + sign * sh, diag)


def iwasawa(two_sinh_lambda, side=Side.LOWER):
    """Return H+ = [[1, 0], [v, 1]] (lower) or H- = [[1, -v], [0, 1]] (upper)."""
    return wigner_matrix(Parabolic(two_sinh_lambda, Side(side)))


def transformation_matrix(delta, eta, branch=Branch.PLUS):
    """
    Return G = L(delta) S(-+eta), the similarity transform of the normal form.

    The plus branch uses S(-eta), the minus branch S(eta).

    Returns:
        ``[[e^(-+eta/2) cos(delta/2), -e^(+-eta/2) sin(delta/2)],
        [e^(-+eta/2) sin(delta/2), e^(+-eta/2) cos(delta/2)]]``.
    """
    delta = require_finite("delta", delta)
    eta = require_finite("eta", eta)
    signed = -eta if Branch(branch) is Branch.PLUS else eta
    left = guarded(math.exp, 0.5 * signed)
    right = guarded(math.exp, -0.5 * signed)
    c, s = math.cos(0.5 * delta), math.sin(0.5 * delta)
    return Mat2(left * c, -right * s, left * s, right * c)
