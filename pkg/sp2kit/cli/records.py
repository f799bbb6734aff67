"""Result records and their JSON / CSV serialization.

JSON floats are written with ``repr``, the shortest string that parses back to
the same binary64 value (at most 17 significant digits). CSV floats use
``.17g``. Both are lossless.
"""

import csv
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

from sp2kit.common.error import ParseError
from sp2kit.sp2core import (
    Elliptic,
    Hyperbolic,
    compose_bargmann,
    decompose_bargmann,
    eigenvalues,
    normal_form,
)

CSV_FLOAT_FORMAT = ".17g"


def _pair(value):
    value = complex(value)
    return [value.real, value.imag]


def eigen_dict(pair):
    return {"kind": pair.kind.value, "e_plus": _pair(pair.e_plus), "e_minus": _pair(pair.e_minus)}


def form_fields(form):
    """Return the JSON fields naming a Wigner form and its parameter."""
    if isinstance(form, Elliptic):
        return {"phi": form.phi}
    if isinstance(form, Hyperbolic):
        return {"chi": form.chi, "branch": form.branch.value}
    return {"gamma": form.gamma, "side": form.side.value}


@dataclass(frozen=True)
class ResultRecord:
    """Everything the CLI reports about one matrix.

    Attributes:
        matrix: The (re-normalized) input.
        det_correction: Factor 1/sqrt(det) applied to the raw input.
        nf: Its normal form.
        params: Its Bargmann parameters.
        eigen: Its eigenvalues.
        extra: Command-specific fields appended to the JSON object.
    """

    matrix: object
    det_correction: float
    nf: object
    params: object
    eigen: object
    extra: dict = field(default_factory=dict)

    @classmethod
    def build(cls, matrix, det_correction=1.0, parabolic_tolerance=None, conditioning_band=None, **extra):
        band = {} if parabolic_tolerance is None else {"parabolic_tolerance": parabolic_tolerance}
        boundary = {} if conditioning_band is None else {"conditioning_band": conditioning_band}
        return cls(
            matrix=matrix,
            det_correction=det_correction,
            nf=normal_form(matrix, **band, **boundary),
            params=decompose_bargmann(matrix),
            eigen=eigenvalues(matrix, **band),
            extra=extra,
        )

    def to_dict(self):
        out = {
            "input": list(self.matrix.entries()),
            "det_correction": self.det_correction,
            "class": self.nf.matrix_class.value,
        }
        out.update(form_fields(self.nf.form))
        out.update({
            "eta": self.nf.eta,
            "sigma": self.nf.sigma,
            "near_boundary": self.nf.near_boundary,
            "theta1": self.params.theta1,
            "theta2": self.params.theta2,
            "lambda": self.params.lam,
            "recomposed": list(compose_bargmann(self.params).entries()),
            "eigenvalues": eigen_dict(self.eigen),
        })
        out.update(self.extra)
        return out


@dataclass(frozen=True)
class CsvTable:
    header: tuple
    rows: list


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, CSV_FLOAT_FORMAT)
    return str(value)


def write_json(payload, stream):
    json.dump(payload, stream, indent=2, allow_nan=False)
    stream.write("\n")


def write_csv(table, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.header)
    for row in table.rows:
        writer.writerow([_csv_cell(v) for v in row])


@contextmanager
def open_output(path):
    """Yield the ``--output`` file opened for text writing, or standard output."""
    if path is None:
        yield sys.stdout
        return
    try:
        handle = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise ParseError("cannot open output file", path=str(path), reason=exc.strerror) from exc
    with handle:
        yield handle


def emit(result, path=None):
    """Write a JSON-able dict or a :class:`CsvTable` to ``path`` or standard output."""
    with open_output(path) as stream:
        if isinstance(result, CsvTable):
            write_csv(result, stream)
        else:
            write_json(result, stream)
