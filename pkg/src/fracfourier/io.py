"""Coefficient (JSON) and sample/curve (CSV) file formats.

Numbers are written with 17 significant digits so files round-trip doubles
exactly and identical inputs give byte-identical outputs. Every write goes to
a temporary file in the target directory which is then renamed into place.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import FFSError, MalformedInput
from .types import LINEAR, BasisTag, RealCoefficients, SampledSignal

__all__ = [
    "SCHEMA",
    "format_number",
    "atomic_write",
    "coeffs_to_json",
    "coeffs_from_json",
    "write_coeffs",
    "read_coeffs",
    "read_samples",
    "write_curve",
]

SCHEMA = "ffs-coeffs/1"
UNIFORM_RTOL = 1e-9


def format_number(x: float) -> str:
    return format(float(x), ".17g")


def atomic_write(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _num_list(values) -> str:
    return "[" + ", ".join(format_number(v) for v in values) + "]"


def coeffs_to_json(coeffs: RealCoefficients) -> str:
    alpha = "null" if coeffs.basis.alpha is None else format_number(coeffs.basis.alpha)
    fields = [
        ("schema", json.dumps(SCHEMA)),
        ("period", format_number(coeffs.period)),
        ("alpha", alpha),
        ("basis", json.dumps(coeffs.basis.kind)),
        ("a0", format_number(coeffs.a0)),
        ("a", _num_list(coeffs.a)),
        ("b", _num_list(coeffs.b)),
    ]
    body = ",\n".join(f"  {json.dumps(k)}: {v}" for k, v in fields)
    return "{\n" + body + "\n}\n"


def _number(obj: dict, key: str, allow_null: bool = False):
    value = obj.get(key)
    if value is None and allow_null and key in obj:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedInput(f"field {key!r} must be a number")
    return float(value)


def coeffs_from_json(text: str) -> RealCoefficients:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise MalformedInput("coefficient file must hold a JSON object")
    if obj.get("schema") != SCHEMA:
        raise MalformedInput(f"schema must be {SCHEMA!r}, got {obj.get('schema')!r}")
    for key in ("a", "b"):
        if not isinstance(obj.get(key), list):
            raise MalformedInput(f"field {key!r} must be a list of numbers")
        if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in obj[key]):
            raise MalformedInput(f"field {key!r} must be a list of numbers")
    if "alpha" not in obj:
        raise MalformedInput("field 'alpha' is required (use null for none)")
    alpha = _number(obj, "alpha", allow_null=True)
    basis = obj.get("basis")
    if basis not in ("linear", "fractional"):
        raise MalformedInput(f"basis must be 'linear' or 'fractional', got {basis!r}")
    if basis == "fractional" and alpha is None:
        raise MalformedInput("a fractional coefficient set needs a numeric alpha")
    try:
        tag = LINEAR if alpha is None else BasisTag(basis, alpha)
        return RealCoefficients(_number(obj, "period"), _number(obj, "a0"), obj["a"], obj["b"], tag)
    except FFSError as exc:
        raise MalformedInput(str(exc)) from None


def write_coeffs(path, coeffs: RealCoefficients) -> None:
    atomic_write(path, coeffs_to_json(coeffs))


def read_coeffs(path) -> RealCoefficients:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    return coeffs_from_json(text)


def read_samples(path, period: float | None = None) -> SampledSignal:
    """Read a ``t,value`` CSV covering one period with uniform spacing.

    The period is ``M * dt``; if ``period`` is given it must agree.
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from None
    if not lines or lines[0].strip() != "t,value":
        raise MalformedInput("first line must be the header 't,value'")
    t, v = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise MalformedInput(f"line {lineno}: expected 2 columns")
        try:
            t.append(float(parts[0]))
            v.append(float(parts[1]))
        except ValueError:
            raise MalformedInput(f"line {lineno}: not a number") from None
    if len(t) < 2:
        raise MalformedInput("need at least 2 samples")
    t = np.array(t)
    v = np.array(v)
    if not (np.all(np.isfinite(t)) and np.all(np.isfinite(v))):
        raise MalformedInput("non-finite value in samples")
    steps = np.diff(t)
    dt = (t[-1] - t[0]) / (t.size - 1)
    if np.any(steps <= 0):
        raise MalformedInput("t must be strictly increasing")
    if np.max(np.abs(steps - dt)) > UNIFORM_RTOL * abs(dt):
        raise MalformedInput("t is not uniformly spaced")
    inferred = dt * t.size
    if period is not None and not math.isclose(period, inferred, rel_tol=UNIFORM_RTOL):
        raise MalformedInput(f"samples cover a period of {inferred!r}, not {period!r}")
    return SampledSignal(v, inferred if period is None else period, t[0])


def write_curve(path, t, columns: dict[str, np.ndarray]) -> None:
    names = ["t", *columns]
    rows = [",".join(names)]
    data = [np.asarray(t), *(np.asarray(c) for c in columns.values())]
    for row in zip(*data):
        rows.append(",".join(format_number(x) for x in row))
    atomic_write(path, "\n".join(rows) + "\n")
