"""Deterministic result serialization, schema "oelab/1".

JSON reports are emitted with sorted keys and compact separators so a given
result is byte-identical across runs and thread counts.  Exact rationals are
encoded as {"num": int, "den": int}; integers stay plain integers.  The
csv-row format flattens the same content into one line for sweeps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

__all__ = ["Report", "emit_report", "parse_report", "csv_header", "SCHEMA"]

SCHEMA = "oelab/1"

_KINDS = ("construction", "op", "graph", "peeling", "bound", "search", "spectral")


@dataclass(frozen=True)
class Report:
    """One result: a kind tag, input parameters, exact values, optional verdict."""

    kind: str
    parameters: dict[str, Any] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    verdict: str | None = None
    witness_path: str | None = None
    schema: str = SCHEMA

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}; known: {_KINDS}")
        if self.verdict not in (None, "holds", "violated", "not-applicable"):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        for key, val in self.values.items():
            if not isinstance(val, (int, Fraction)) or isinstance(val, bool):
                raise ValueError(f"value {key!r} must be an int or Fraction, got {val!r}")


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, (bool, int, str)):
        return value
    raise ValueError(f"cannot encode {value!r} in a report")


def _decode(value: Any) -> Any:
    if isinstance(value, dict):
        if set(value) != {"num", "den"}:
            raise ValueError(f"bad rational encoding {value!r}")
        return Fraction(value["num"], value["den"])
    return value


def _csv_cell(value: Any) -> str:
    value = _encode(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return f"{value['num']}/{value['den']}"
    return str(value)


def csv_header(report: Report) -> str:
    cols = ["kind"]
    cols += [f"p_{k}" for k in sorted(report.parameters)]
    cols += [f"v_{k}" for k in sorted(report.values)]
    cols.append("verdict")
    return ",".join(cols)


def emit_report(report: Report, fmt: str = "json") -> str:
    """Serialize a report; fmt is "json" or "csv-row"."""
    if fmt == "json":
        obj: dict[str, Any] = {
            "schema": report.schema,
            "kind": report.kind,
            "parameters": {k: _encode(v) for k, v in report.parameters.items()},
            "values": {k: _encode(v) for k, v in report.values.items()},
        }
        if report.verdict is not None:
            obj["verdict"] = report.verdict
        if report.witness_path is not None:
            obj["witness_path"] = report.witness_path
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    if fmt == "csv-row":
        cells = [report.kind]
        cells += [_csv_cell(report.parameters[k]) for k in sorted(report.parameters)]
        cells += [_csv_cell(report.values[k]) for k in sorted(report.values)]
        cells.append(report.verdict or "")
        return ",".join(cells)
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str) -> Report:
    """Inverse of emit_report(fmt="json"); round-trips all report kinds."""
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("report must be a JSON object")
    schema = obj.get("schema")
    if schema != SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}")
    return Report(
        kind=obj["kind"],
        parameters={k: _decode(v) for k, v in obj.get("parameters", {}).items()},
        values={k: _decode(v) for k, v in obj.get("values", {}).items()},
        verdict=obj.get("verdict"),
        witness_path=obj.get("witness_path"),
    )
