"""Instance and report documents.

Instances travel as a single JSON object carrying the field tag and the
three matrices; every scalar is an exact decimal or fraction string, so
no floating point ever appears on the wire. Reports serialize to
stable-key-ordered JSON or to a fixed plain-text layout; both are
byte-deterministic for a given input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .analysis import CriteriaReport, RankProfile, equality_criteria, rank_profile
from .certificate import ConstructionTrace, EqualityCertificate, construct_certificate
from .errors import DimensionMismatch, ParseError, ScalarError
from .fields import Field, parse_field_tag
from .matrix import Matrix


def _load_json(text: bytes | str):
    try:
        return json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _parse_matrix_obj(obj, field: Field, name: str) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError(f"matrix {name} must be an object")
    try:
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    except KeyError as exc:
        raise ParseError(f"matrix {name} is missing key {exc}") from exc
    if not isinstance(rows, int) or not isinstance(cols, int) or rows < 0 or cols < 0:
        raise ParseError(f"matrix {name} has invalid shape")
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"matrix {name} data does not have {rows} rows")
    parsed = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"matrix {name} row {i} does not have {cols} entries")
        out = []
        for j, cell in enumerate(row):
            if isinstance(cell, str):
                try:
                    out.append(field.parse(cell))
                except ScalarError as exc:
                    raise ScalarError(f"matrix {name} entry ({i},{j}): {exc}") from exc
            elif isinstance(cell, int) and not isinstance(cell, bool):
                out.append(field.coerce(cell))
            else:
                raise ScalarError(
                    f"matrix {name} entry ({i},{j}) must be an exact scalar string"
                )
        parsed.append(out)
    return Matrix(field, parsed, shape=(rows, cols))


def _matrix_obj(m: Matrix) -> dict:
    fmt = m.field.format
    return {
        "rows": m.rows,
        "cols": m.cols,
        "data": [[fmt(x) for x in row] for row in m.entries],
    }


def parse_instance(text: bytes | str) -> tuple[Field, Matrix, Matrix, Matrix]:
    """Parse and validate an instance document into (field, A, B, C)."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    for key in ("field", "A", "B", "C"):
        if key not in doc:
            raise ParseError(f"instance document is missing key {key!r}")
    if not isinstance(doc["field"], str):
        raise ParseError("field tag must be a string")
    field = parse_field_tag(doc["field"])
    a = _parse_matrix_obj(doc["A"], field, "A")
    b = _parse_matrix_obj(doc["B"], field, "B")
    c = _parse_matrix_obj(doc["C"], field, "C")
    if a.cols != b.rows:
        raise DimensionMismatch(f"A has {a.cols} columns but B has {b.rows} rows")
    if b.cols != c.rows:
        raise DimensionMismatch(f"B has {b.cols} columns but C has {c.rows} rows")
    return field, a, b, c


def emit_instance(field: Field, a: Matrix, b: Matrix, c: Matrix) -> bytes:
    doc = {
        "field": field.label,
        "A": _matrix_obj(a),
        "B": _matrix_obj(b),
        "C": _matrix_obj(c),
    }
    return _dumps(doc)


def parse_certificate(text: bytes | str, field: Field) -> tuple[Matrix, Matrix]:
    """Read an (X, Y) pair, either bare or nested under "certificate"
    (so a report emitted by ``certify`` can be fed back directly)."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("certificate document must be a JSON object")
    if "certificate" in doc and isinstance(doc["certificate"], dict):
        doc = doc["certificate"]
    if "X" not in doc or "Y" not in doc:
        raise ParseError("certificate document needs matrices X and Y")
    return (
        _parse_matrix_obj(doc["X"], field, "X"),
        _parse_matrix_obj(doc["Y"], field, "Y"),
    )


@dataclass
class Report:
    """Analysis outcome for one triple, ready for serialization.

    ``certificate`` is attached on tight instances when the caller asked
    for one; ``witness`` is attached whenever the inequality is strict.
    """

    field: Field
    profile: RankProfile
    criteria: CriteriaReport
    verdict: str
    certificate: EqualityCertificate | None = None
    witness: Matrix | None = None
    include_trace: bool = False


def build_report(
    a: Matrix,
    b: Matrix,
    c: Matrix,
    include_certificate: bool = False,
    include_trace: bool = False,
) -> Report:
    profile = rank_profile(a, b, c)
    criteria = equality_criteria(a, b, c)
    verdict = "equality" if criteria.gap_zero else "strict"
    certificate = None
    witness = criteria.witness.vector if criteria.witness is not None else None
    if include_certificate and criteria.gap_zero:
        built = construct_certificate(a, b, c)
        assert isinstance(built, EqualityCertificate)
        certificate = built
    return Report(
        field=a.field,
        profile=profile,
        criteria=criteria,
        verdict=verdict,
        certificate=certificate,
        witness=witness if include_certificate else None,
        include_trace=include_trace,
    )


def _dumps(doc) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def _trace_obj(trace: ConstructionTrace) -> dict:
    return {
        "column_basis": _matrix_obj(trace.column_basis),
        "kernel_coords": _matrix_obj(trace.kernel_coords),
        "intersection_dim": trace.intersection_dim,
        "rank": trace.rank,
        "extended_basis": _matrix_obj(trace.extended_basis),
        "bc_preimages": _matrix_obj(trace.bc_preimages),
        "preimage_map": _matrix_obj(trace.preimage_map),
        "image_basis": _matrix_obj(trace.image_basis),
    }


def _report_doc(report: Report) -> dict:
    p = report.profile
    crit = report.criteria
    doc = {
        "field": report.field.label,
        "rank_profile": {
            "rank_b": p.rank_b,
            "rank_ab": p.rank_ab,
            "rank_bc": p.rank_bc,
            "rank_abc": p.rank_abc,
            "lhs": p.lhs,
            "rhs": p.rhs,
            "gap": p.gap,
        },
        "criteria": {
            "gap_zero": crit.gap_zero,
            "quotient_block_invertible": crit.quotient_block_invertible,
            "kernel_intersections_equal": crit.kernel_intersections_equal,
            "intersection_factor_exists": crit.intersection_factor_exists,
        },
        "verdict": report.verdict,
    }
    if report.certificate is not None:
        doc["certificate"] = {
            "X": _matrix_obj(report.certificate.X),
            "Y": _matrix_obj(report.certificate.Y),
        }
        if report.include_trace and report.certificate.trace is not None:
            doc["trace"] = _trace_obj(report.certificate.trace)
    if report.witness is not None:
        doc["witness"] = _matrix_obj(report.witness)
    return doc


def _matrix_lines(name: str, m: Matrix) -> list[str]:
    fmt = m.field.format
    lines = [f"{name}="]
    for row in m.entries:
        lines.append("  [" + " ".join(fmt(x) for x in row) + "]")
    return lines


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _report_text(report: Report) -> str:
    p = report.profile
    crit = report.criteria
    lines = [
        f"field={report.field.label}",
        f"rank(B)={p.rank_b}",
        f"rank(AB)={p.rank_ab}",
        f"rank(BC)={p.rank_bc}",
        f"rank(ABC)={p.rank_abc}",
        f"rank(ABC)+rank(B)={p.lhs}",
        f"rank(AB)+rank(BC)={p.rhs}",
        f"gap={p.gap}",
        f"gap_zero={_bool(crit.gap_zero)}",
        f"quotient_block_invertible={_bool(crit.quotient_block_invertible)}",
        f"kernel_intersections_equal={_bool(crit.kernel_intersections_equal)}",
        f"intersection_factor_exists={_bool(crit.intersection_factor_exists)}",
        f"verdict={report.verdict}",
    ]
    if report.certificate is not None:
        lines += _matrix_lines("X", report.certificate.X)
        lines += _matrix_lines("Y", report.certificate.Y)
        trace = report.certificate.trace
        if report.include_trace and trace is not None:
            lines.append(f"trace.intersection_dim={trace.intersection_dim}")
            lines.append(f"trace.rank={trace.rank}")
            lines += _matrix_lines("trace.column_basis", trace.column_basis)
            lines += _matrix_lines("trace.kernel_coords", trace.kernel_coords)
            lines += _matrix_lines("trace.extended_basis", trace.extended_basis)
            lines += _matrix_lines("trace.bc_preimages", trace.bc_preimages)
            lines += _matrix_lines("trace.preimage_map", trace.preimage_map)
            lines += _matrix_lines("trace.image_basis", trace.image_basis)
    if report.witness is not None:
        lines += _matrix_lines("witness", report.witness)
    return "\n".join(lines) + "\n"


def emit_report(report: Report, format: str = "text") -> bytes:
    """Serialize a report deterministically as "json" or "text"."""
    if format == "json":
        return _dumps(_report_doc(report))
    if format == "text":
        return _report_text(report).encode()
    raise ValueError(f"unknown format {format!r}")


def emit_flag(name: str, value: bool, format: str = "text") -> bytes:
    """One-line boolean outcome document (verify / oracle results)."""
    if format == "json":
        return _dumps({name: value})
    return f"{name}={_bool(value)}\n".encode()


def emit_family(pairs: list[tuple[Matrix, Matrix]], format: str = "text") -> bytes:
    """Serialize derived solution pairs deterministically."""
    if format == "json":
        doc = {
            "count": len(pairs),
            "pairs": [{"X": _matrix_obj(x), "Y": _matrix_obj(y)} for x, y in pairs],
        }
        return _dumps(doc)
    lines = [f"count={len(pairs)}"]
    for i, (x, y) in enumerate(pairs, start=1):
        lines.append(f"pair={i}")
        lines += _matrix_lines("X", x)
        lines += _matrix_lines("Y", y)
    return ("\n".join(lines) + "\n").encode()
