"""Chain files: an ordered product of factor matrices, repeated ``repeat`` times.

Schema::

    {"elements": [{"kind": "rotation", "theta": 0.4},
                  {"kind": "boost_b", "two_lambda": 1.0},
                  {"kind": "squeeze", "eta": 0.3},
                  {"kind": "raw", "matrix": [a, b, c, d]}],
     "repeat": 10}
"""

import json
import logging
import math
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

from sp2kit.common.error import InvalidArgumentError, ParseError
from sp2kit.sp2core import Mat2, boost_b, rotation, squeeze_s

logger = logging.getLogger(__name__)

RAW_DET_TOLERANCE = 1e-8

_SCALAR_KINDS = {
    "rotation": ("theta", rotation),
    "boost_b": ("two_lambda", boost_b),
    "squeeze": ("eta", squeeze_s),
}


@dataclass(frozen=True)
class ChainElement:
    kind: str
    values: tuple

    def matrix(self, det_tolerance=RAW_DET_TOLERANCE):
        if self.kind == "raw":
            m, correction = Mat2.renormalized(self.values, det_tolerance)
            if correction != 1.0:
                logger.warning("raw chain element renormalized by %r", correction)
            return m
        _, factory = _SCALAR_KINDS[self.kind]
        return factory(self.values[0])


@dataclass(frozen=True)
class ChainSpec:
    """A unit cell of factors and how often it repeats."""

    elements: tuple
    repeat: int = 1

    def __post_init__(self):
        if not self.elements:
            raise ParseError("chain needs at least one element")
        if self.repeat < 1:
            raise InvalidArgumentError("chain repeat must be at least 1", repeat=self.repeat)

    def unit_cell(self, det_tolerance=RAW_DET_TOLERANCE):
        """Multiply the elements left to right in listed order."""
        return reduce(lambda acc, e: acc @ e.matrix(det_tolerance), self.elements, Mat2.identity())


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("expected a number", where=where, value=value)
    value = float(value)
    if not math.isfinite(value):
        raise ParseError("expected a finite number", where=where, value=value)
    return value


def _element(raw, index):
    where = f"elements[{index}]"
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ParseError("chain element must be an object with a kind", where=where)
    kind = raw["kind"]
    if kind == "raw":
        entries = raw.get("matrix")
        if not isinstance(entries, list) or len(entries) != 4:
            raise ParseError("raw element needs a four-entry matrix", where=where)
        return ChainElement("raw", tuple(_number(v, f"{where}.matrix") for v in entries))
    if kind not in _SCALAR_KINDS:
        raise ParseError("unknown chain element kind", where=where, kind=kind,
                         expected=sorted([*_SCALAR_KINDS, "raw"]))
    key, _ = _SCALAR_KINDS[kind]
    if key not in raw:
        raise ParseError("chain element is missing its parameter", where=where, parameter=key)
    return ChainElement(kind, (_number(raw[key], f"{where}.{key}"),))


def parse_chain(data):
    """
    Build a :class:`ChainSpec` from decoded JSON.

    Raises:
        ParseError: If the structure does not match the schema.
        InvalidArgumentError: If ``repeat`` is below 1.
    """
    if not isinstance(data, dict):
        raise ParseError("chain file must hold an object")
    elements = data.get("elements")
    if not isinstance(elements, list):
        raise ParseError("chain file needs an elements list")
    repeat = data.get("repeat", 1)
    if isinstance(repeat, bool) or not isinstance(repeat, int):
        raise ParseError("repeat must be an integer", repeat=repeat)
    return ChainSpec(tuple(_element(e, i) for i, e in enumerate(elements)), repeat)


def load_chain(path):
    """Read and parse a chain file; missing or malformed files raise :class:`ParseError`."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError("cannot read chain file", path=str(path), reason=exc.strerror) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("chain file is not valid JSON", path=str(path), reason=exc.msg) from exc
    spec = parse_chain(data)
    logger.debug("loaded chain %s with %d elements, repeat %d", path, len(spec.elements), spec.repeat)
    return spec
