"""JSON interchange documents with exact rational strings.

Every scalar is written as ``[re, im]`` where each part is ``"p"`` or
``"p/q"`` with ``q > 0``; the imaginary part is always present.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .block import Field, SolutionSet, Violation
from .exact import Matrix, Scalar
from .structured import JordanSpec

__all__ = [
    "DocumentError",
    "scalar_to_doc",
    "scalar_from_doc",
    "matrix_to_doc",
    "matrix_from_doc",
    "spec_to_doc",
    "spec_from_doc",
    "solution_to_doc",
    "solution_from_doc",
    "load_json",
]


class DocumentError(ValueError):
    """Malformed interchange document."""


def _rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError(f"rational must be a string or integer, got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise DocumentError(f"not a rational: {text!r}") from None


def scalar_to_doc(s: Scalar) -> list[str]:
    return [str(s.re), str(s.im)]


def scalar_from_doc(doc) -> Scalar:
    if not isinstance(doc, (list, tuple)) or len(doc) != 2:
        raise DocumentError(f"scalar must be [re, im], got {doc!r}")
    return Scalar(_rational(doc[0]), _rational(doc[1]))


def matrix_to_doc(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [scalar_to_doc(e) for e in m.entries]}


def matrix_from_doc(doc) -> Matrix:
    try:
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except (KeyError, TypeError):
        raise DocumentError("matrix document needs rows, cols and entries") from None
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 1 or cols < 1:
        raise DocumentError("rows and cols must be positive integers")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise DocumentError(f"expected {rows * cols} entries")
    return Matrix(rows, cols, [scalar_from_doc(e) for e in entries])


def spec_to_doc(spec: JordanSpec) -> dict:
    return {"blocks": [{"lambda": scalar_to_doc(lam), "size": size} for lam, size in spec.blocks]}


def spec_from_doc(doc) -> JordanSpec:
    try:
        blocks = doc["blocks"]
        parsed = [(scalar_from_doc(b["lambda"]), b["size"]) for b in blocks]
    except (KeyError, TypeError):
        raise DocumentError("Jordan document needs blocks of {lambda, size}") from None
    try:
        return JordanSpec(tuple(parsed))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _violation_to_doc(v: Violation) -> dict:
    return {
        "block": list(v.block) if v.block is not None else None,
        "index": v.index,
        "residual": scalar_to_doc(v.residual),
    }


def solution_to_doc(s: SolutionSet) -> dict:
    return {
        "compatible": s.compatible,
        "particular": matrix_to_doc(s.particular) if s.particular is not None else None,
        "basis": [matrix_to_doc(b) for b in s.basis],
        "field": s.field.value,
        "dimension": s.dimension,
        "violated_conditions": [_violation_to_doc(v) for v in s.violated_conditions],
    }


def solution_from_doc(doc) -> SolutionSet:
    try:
        basis = [matrix_from_doc(b) for b in doc["basis"]]
        if doc["dimension"] != len(basis):
            raise DocumentError("dimension does not match basis length")
        particular = matrix_from_doc(doc["particular"]) if doc["particular"] is not None else None
        violations = [
            Violation(v["index"], scalar_from_doc(v["residual"]), tuple(v["block"]) if v["block"] else None)
            for v in doc["violated_conditions"]
        ]
        return SolutionSet(bool(doc["compatible"]), particular, basis, Field(doc["field"]), violations)
    except (KeyError, TypeError):
        raise DocumentError("malformed solution document") from None


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc.msg})") from None
