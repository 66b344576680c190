"""File formats: instance JSON, iteration-trace CSV, benchmark CSV.

All floats are written with 17 significant digits so parsing recovers
them bit-exactly.
"""

from __future__ import annotations

import csv
import json

import numpy as np

from .errors import DomainError, InstanceFormatError
from .oracles import AffineFractionalInstance
from .sets import BoxSet

_INSTANCE_FIELDS = ("n", "A", "b", "A1", "b1", "c", "d", "box_low", "box_high")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def instance_to_dict(inst: AffineFractionalInstance) -> dict:
    box = inst.box
    lo, hi = float(box.lo[0]), float(box.hi[0])
    if np.any(box.lo != lo) or np.any(box.hi != hi):
        raise InstanceFormatError(
            "instance files only support uniform boxes", field="box_low"
        )
    return {
        "n": inst.dim,
        "A": inst.A.tolist(),
        "b": inst.b.tolist(),
        "A1": inst.A1.tolist(),
        "b1": inst.b1.tolist(),
        "c": inst.c.tolist(),
        "d": inst.d,
        "box_low": lo,
        "box_high": hi,
    }


def instance_from_dict(data: dict) -> AffineFractionalInstance:
    for name in _INSTANCE_FIELDS:
        if name not in data:
            raise InstanceFormatError(f"missing field {name!r}", field=name)
    try:
        n = int(data["n"])
    except (TypeError, ValueError):
        raise InstanceFormatError("field 'n' must be an integer", field="n")
    if n < 1:
        raise InstanceFormatError("field 'n' must be at least 1", field="n")

    def number(name):
        value = data[name]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise InstanceFormatError(f"field {name!r} must be a number",
                                      field=name)
        return float(value)

    def vector(name):
        arr = np.asarray(data[name], dtype=float)
        if arr.shape != (n,):
            raise InstanceFormatError(
                f"field {name!r} must be a length-{n} array, got shape {arr.shape}",
                field=name,
            )
        return arr

    def matrix(name):
        arr = np.asarray(data[name], dtype=float)
        if arr.shape != (n, n):
            raise InstanceFormatError(
                f"field {name!r} must be {n}x{n}, got shape {arr.shape}",
                field=name,
            )
        return arr

    box_low, box_high = number("box_low"), number("box_high")
    if not box_low < box_high:
        raise InstanceFormatError("box_low must be below box_high",
                                  field="box_low")
    parts = dict(
        A=matrix("A"), b=vector("b"), A1=matrix("A1"), b1=vector("b1"),
        c=vector("c"), d=number("d"),
    )
    try:
        return AffineFractionalInstance(
            box=BoxSet.uniform(n, box_low, box_high), **parts
        )
    except DomainError as exc:
        raise InstanceFormatError(
            f"denominator is not positive over the box: {exc}", field="c"
        ) from exc
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc


def parse_instance_file(path) -> AffineFractionalInstance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InstanceFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InstanceFormatError("instance file must hold a JSON object")
    return instance_from_dict(data)


def write_instance_file(inst: AffineFractionalInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh, indent=2)
        fh.write("\n")


TRACE_HEADER = ("k", "alpha", "step_norm", "g_raw_norm", "residual")


def write_trace_csv(report, path) -> None:
    """One row per iteration record; residual empty when not evaluated."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRACE_HEADER)
        for rec in report.trace:
            writer.writerow([
                rec.k,
                _fmt(rec.alpha),
                _fmt(rec.step_norm),
                _fmt(rec.g_raw_norm),
                "" if rec.residual is None else _fmt(rec.residual),
            ])


def read_trace_csv(path) -> list[dict]:
    """Parse a trace CSV back into numeric rows (bit-exact round trip)."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or tuple(reader.fieldnames) != TRACE_HEADER:
            raise InstanceFormatError(
                f"unexpected trace header {reader.fieldnames}"
            )
        for row in reader:
            rows.append({
                "k": int(row["k"]),
                "alpha": float(row["alpha"]),
                "step_norm": float(row["step_norm"]),
                "g_raw_norm": float(row["g_raw_norm"]),
                "residual": None if row["residual"] == "" else float(row["residual"]),
            })
    return rows


def write_benchmark_csv(report, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "n_prob", "n_success", "mean_time_seconds",
                         "mean_error"])
        for row in report.rows:
            writer.writerow([
                row.n, row.n_prob, row.n_success,
                _fmt(row.mean_time_seconds), _fmt(row.mean_error),
            ])


def paramonotonicity_report_to_dict(report) -> dict:
    return {
        "a_hat": report.a_hat.tolist(),
        "a_hat_sym": report.a_hat_sym.tolist(),
        "min_eigenvalue": report.min_eigenvalue,
        "rank_sym": report.rank_sym,
        "rank_a_hat": report.rank_a_hat,
        "verdict": report.verdict,
        "tol": report.tol,
    }
