"""JSON encoding of parameters, verdicts, and reports.

Rationals travel as strings ("p/q", or "p" when the denominator is 1) so no
value is ever corrupted by a float round trip; integers are also accepted on
input.  Output is canonical: reduced rationals, sorted keys, compact
separators, so identical values serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .deformation import CanonicalForm, StabilityReport
from .homspace import Branch1Param, Branch2Param, Param
from .linalg import Matrix
from .oracle import OracleReport
from .properness import PropernessVerdict


class InputError(ValueError):
    """Malformed or inconsistent input document."""


def encode_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decode_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def _encode_vector(v) -> list[str]:
    return [encode_fraction(e) for e in v]


def _encode_matrix(m: Matrix) -> list[list[str]]:
    return [[encode_fraction(e) for e in row] for row in m.rows]


def _decode_vector(data, k: int, label: str) -> tuple[Fraction, ...]:
    if not isinstance(data, list) or len(data) != k:
        raise InputError(f"{label} must be an array of length {k}")
    return tuple(decode_fraction(e) for e in data)


def _decode_matrix(data, k: int, label: str) -> Matrix:
    if not isinstance(data, list) or len(data) != k:
        raise InputError(f"{label} must be a {k}x{k} array")
    return Matrix.from_rows([_decode_vector(row, k, label) for row in data])


def encode_param(p: Param) -> dict:
    if isinstance(p, Branch1Param):
        return {
            "k": p.k,
            "type": "type1",
            "x": _encode_vector(p.x),
            "Y": _encode_matrix(p.y_matrix),
            "z": _encode_vector(p.z),
        }
    return {
        "k": p.k,
        "type": "type2",
        "X": _encode_matrix(p.x_matrix),
        "Y": _encode_matrix(p.y_matrix),
    }


def decode_param(doc) -> Param:
    if not isinstance(doc, dict):
        raise InputError("parameter document must be a JSON object")
    k = doc.get("k")
    if not isinstance(k, int) or k < 1:
        raise InputError("k must be a positive integer")
    kind = doc.get("type")
    if kind == "type1":
        x = _decode_vector(doc.get("x"), k, "x")
        y = _decode_matrix(doc.get("Y"), k, "Y")
        z = _decode_vector(doc.get("z"), k, "z")
        if all(e == 0 for e in z):
            raise InputError("type1 requires a nonzero z vector")
        return Branch1Param(k, x, y, z)
    if kind == "type2":
        x = _decode_matrix(doc.get("X"), k, "X")
        y = _decode_matrix(doc.get("Y"), k, "Y")
        return Branch2Param(k, x, y)
    raise InputError('type must be "type1" or "type2"')


def encode_witness(witness: dict) -> dict:
    out = {}
    for key, value in witness.items():
        if isinstance(value, Fraction):
            out[key] = encode_fraction(value)
        elif isinstance(value, tuple):
            out[key] = [encode_fraction(e) for e in value]
        else:
            out[key] = value
    return out


def encode_verdict(v: PropernessVerdict) -> dict:
    return {"proper": v.proper, "branch": v.branch, "witness": encode_witness(v.witness)}


def encode_canonical(c: CanonicalForm) -> dict:
    return encode_param(c.param)


def encode_oracle_report(rep: OracleReport) -> dict:
    return {
        "box_radius": encode_fraction(rep.box_radius),
        "lattice_radii": list(rep.lattice_radii),
        "counts": list(rep.counts),
        "verdict": rep.verdict,
        "witness_family": list(rep.witness_family) if rep.witness_family else None,
        "certified": rep.certified,
        "kernel": rep.kernel,
    }


def encode_stability_report(rep: StabilityReport) -> dict:
    return {
        "base_branch": rep.base_branch,
        "radius": encode_fraction(rep.radius),
        "trials": rep.trials,
        "proper_count": rep.proper_count,
        "proper_fraction": encode_fraction(rep.proper_fraction),
        "crossings": [
            {
                "branch": c.branch,
                "proper": c.proper,
                "branch_switch": c.branch_switch,
                "param": encode_param(c.param),
            }
            for c in rep.crossings
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
