"""Value types for the two-mode squeezed oscillator."""

import math
import operator
from dataclasses import dataclass

from sp2kit.common.error import InvalidArgumentError
from sp2kit.sp2core.factors import guarded
from sp2kit.sp2core.models import require_finite


def require_index(name, k):
    if isinstance(k, bool):
        raise InvalidArgumentError("index must be an integer", name=name, value=k)
    try:
        k = operator.index(k)
    except TypeError:
        raise InvalidArgumentError("index must be an integer", name=name, value=k) from None
    if k < 0:
        raise InvalidArgumentError("index must be non-negative", name=name, value=k)
    return k


@dataclass(frozen=True)
class SqueezedState:
    """The entangled ground state of two oscillators squeezed by ``eta`` >= 0."""

    eta: float

    def __post_init__(self):
        eta = require_finite("eta", self.eta)
        if eta < 0.0:
            raise InvalidArgumentError("squeeze parameter must be non-negative", eta=eta)
        object.__setattr__(self, "eta", eta)

    @property
    def ratio(self):
        """tanh(eta/2), the factor between successive expansion coefficients."""
        return math.tanh(0.5 * self.eta)

    @property
    def leading(self):
        """1 / cosh(eta/2), the weight of the ground-state pair."""
        return 1.0 / guarded(math.cosh, 0.5 * self.eta)


@dataclass(frozen=True)
class ExpansionCoefficient:
    """Weight of phi_k(x1) phi_k(x2) in the expansion of the squeezed state.

    Attributes:
        k: Excitation index.
        value: tanh(eta/2)^k / cosh(eta/2).
    """

    k: int
    value: float

    def __post_init__(self):
        require_index("k", self.k)
        value = require_finite("value", self.value)
        if abs(value) > 1.0:
            raise InvalidArgumentError("expansion coefficient must lie in [-1, 1]", k=self.k, value=value)
        object.__setattr__(self, "value", value)

    @property
    def probability(self):
        return self.value * self.value
