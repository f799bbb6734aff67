"""Subcommand handlers.

Each ``cmd_*`` takes the parsed arguments and a :class:`RunContext` and returns
either a JSON-able dict or a :class:`CsvTable`; :func:`sp2kit.cli.records.emit`
writes it out.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from sp2kit.cli.chain import load_chain
from sp2kit.cli.records import CsvTable, ResultRecord
from sp2kit.common.error import ParseError
from sp2kit.config import Settings
from sp2kit.oscillator import cumulative_probability, expansion, overlap_oracle
from sp2kit.sp2core import (
    Mat2,
    classify,
    core_matrix,
    normal_form,
    power,
    power_oracle,
    stability,
)

logger = logging.getLogger(__name__)

SWEEP_HEADER = ("theta", "lambda", "half_trace", "class", "phi_or_chi", "stable")
CHAIN_HEADER = ("repeat", "a11", "a12", "a21", "a22", "half_trace", "class")
OSCILLATOR_HEADER = ("k", "coefficient", "cumulative_probability")


@dataclass(frozen=True)
class RunContext:
    """Settings resolved once per invocation."""

    settings: Settings
    parabolic_tolerance: float

    @property
    def numerics(self):
        return self.settings.numerics


def parse_matrix(text, det_tolerance):
    """
    Parse row-major ``"A,B,C,D"`` and renormalize by 1/sqrt(det).

    Returns:
        ``(matrix, correction)``.

    Raises:
        ParseError: If the text is not four comma-separated numbers.
        InvalidMatrixError: If the determinant is off by more than ``det_tolerance``.
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ParseError("matrix must be four comma-separated numbers A,B,C,D", value=text)
    try:
        entries = [float(p) for p in parts]
    except ValueError:
        raise ParseError("matrix entries must be numbers", value=text) from None
    m, correction = Mat2.renormalized(entries, det_tolerance)
    if correction != 1.0:
        logger.warning("input determinant corrected by factor %r", correction)
    return m, correction


def _normal_form(m, ctx):
    return normal_form(m, parabolic_tolerance=ctx.parabolic_tolerance,
                       conditioning_band=ctx.numerics.conditioning_band)


def _oracle(m, n, ctx):
    return power_oracle(m, n, renormalize_interval=ctx.numerics.renormalize_interval,
                        drift_threshold=ctx.numerics.drift_threshold)


def cmd_decompose(args, ctx):
    m, correction = parse_matrix(args.matrix, ctx.settings.cli.det_tolerance)
    logger.info("decompose %r", m.entries())
    return ResultRecord.build(m, correction, ctx.parabolic_tolerance,
                              ctx.numerics.conditioning_band).to_dict()


def cmd_power(args, ctx):
    m, correction = parse_matrix(args.matrix, ctx.settings.cli.det_tolerance)
    logger.info("power n=%d of %r", args.n, m.entries())
    result = power(_normal_form(m, ctx), args.n)
    out = {
        "input": list(m.entries()),
        "det_correction": correction,
        "n": args.n,
        "class": classify(m, ctx.parabolic_tolerance).value,
        "matrix_n": list(result.entries()),
    }
    if args.oracle:
        out["oracle_max_abs_diff"] = result.max_abs_diff(_oracle(m, args.n, ctx))
    return out


def cmd_chain(args, ctx):
    spec = load_chain(args.path)
    cell = spec.unit_cell(ctx.settings.cli.det_tolerance)
    logger.info("chain of %d elements, repeat %d", len(spec.elements), spec.repeat)
    nf = _normal_form(cell, ctx)
    table = []
    for r in range(1, spec.repeat + 1):
        mr = power(nf, r)
        table.append((r, *mr.entries(), mr.half_trace, classify(mr, ctx.parabolic_tolerance).value))
    if args.csv:
        return CsvTable(CHAIN_HEADER, table)
    total = table[-1]
    record = ResultRecord.build(
        cell,
        parabolic_tolerance=ctx.parabolic_tolerance,
        conditioning_band=ctx.numerics.conditioning_band,
        repeat=spec.repeat,
        matrix_n=list(total[1:5]),
        trace_table=[{"repeat": row[0], "half_trace": row[5], "class": row[6]} for row in table],
    )
    return record.to_dict()


def grid(start, stop, steps, name):
    """
    Return ``steps`` evenly spaced points from ``start`` to ``stop``.

    A zero-width range collapses to the single point ``start``.

    Raises:
        ParseError: If the range is reversed, non-finite or ``steps`` < 1.
    """
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise ParseError("range bounds must be finite", name=name, start=start, stop=stop)
    if stop < start:
        raise ParseError("range stop lies below start", name=name, start=start, stop=stop)
    if steps < 1:
        raise ParseError("step count must be positive", name=name, steps=steps)
    if stop == start:
        return [start]
    return [float(v) for v in np.linspace(start, stop, steps)]


def sweep_row(point, parabolic_tolerance, conditioning_band):
    """Classify core_matrix(theta, lambda, +) at one grid point."""
    theta, lam = point
    m = core_matrix(theta, lam)
    nf = normal_form(m, parabolic_tolerance=parabolic_tolerance, conditioning_band=conditioning_band)
    return (theta, lam, m.half_trace, nf.matrix_class.value, nf.form.parameter,
            stability(m, parabolic_tolerance))


def cmd_sweep(args, ctx):
    thetas = grid(args.theta[0], args.theta[1], args.steps, "theta")
    lambdas = grid(args.lam[0], args.lam[1], args.steps, "lambda")
    points = [(t, l) for t in thetas for l in lambdas]
    workers = args.workers or ctx.settings.cli.workers
    row = partial(sweep_row, parabolic_tolerance=ctx.parabolic_tolerance,
                  conditioning_band=ctx.numerics.conditioning_band)
    logger.info("sweep over %d points with %d worker(s)", len(points), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map yields in submission order
            rows = list(pool.map(row, points, chunksize=max(1, len(points) // (4 * workers))))
    else:
        rows = [row(p) for p in points]
    return CsvTable(SWEEP_HEADER, rows)


def cmd_oscillator(args, ctx):
    logger.info("oscillator expansion eta=%r kmax=%d", args.eta, args.kmax)
    header = OSCILLATOR_HEADER
    rows = []
    for c in expansion(args.eta, args.kmax):
        rows.append([c.k, c.value, cumulative_probability(c.k, args.eta)])
    if args.oracle:
        osc = ctx.settings.oscillator
        header = header + ("oracle",)
        for r in rows:
            r.append(overlap_oracle(r[0], r[0], args.eta, nodes=osc.quadrature_nodes,
                                    max_index=osc.max_index, max_eta=osc.max_eta))
    return CsvTable(header, [tuple(r) for r in rows])
