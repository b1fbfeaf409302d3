"""The JSON document envelope shared by the CLI, the service, and golden files.

A configuration document looks like

    {"version": "1", "spec": {"n": 2, "m": 3}, "diagonals": [[1, 4], [1, 6]]}

with optional "name" and "notes" strings.  Parsing validates every diagonal
against the spec and reports failures with their list position; serialization
emits a stable field order so documents are byte-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DocumentError, InvalidDiagonal, InvalidSpec, NotNDiagonal
from .polygon import DiagSet, Diagonal, PolygonSpec, diagonal, is_n_diagonal

FORMAT_VERSION = "1"


@dataclass(frozen=True)
class ConfigDocument:
    """A parsed, validated configuration document."""

    spec: PolygonSpec
    diagonals: tuple[Diagonal, ...]
    name: str | None = None
    notes: str | None = None

    def diag_set(self) -> DiagSet:
        return DiagSet.from_diagonals(self.spec, self.diagonals)


def document_from_set(s: DiagSet, name: str | None = None, notes: str | None = None) -> ConfigDocument:
    return ConfigDocument(spec=s.spec, diagonals=tuple(s), name=name, notes=notes)


def parse_document(source: str | dict) -> ConfigDocument:
    """Parse and validate a document from JSON text or an already-loaded dict.

    Every reported problem names the offending field; bad diagonals are
    reported as `diagonals[i]` with the value echoed back.
    """
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as e:
            raise DocumentError(f"not valid JSON: {e}", where="$") from None
    else:
        data = source
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object", where="$")

    version = data.get("version")
    if version != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported or missing version {version!r} (expected \"{FORMAT_VERSION}\")",
            where="version",
        )

    spec_obj = data.get("spec")
    if not isinstance(spec_obj, dict) or "n" not in spec_obj or "m" not in spec_obj:
        raise DocumentError("spec must be an object with integer n and m", where="spec")
    try:
        spec = PolygonSpec(spec_obj["n"], spec_obj["m"])
    except InvalidSpec as e:
        raise DocumentError(str(e), where="spec") from None

    raw = data.get("diagonals")
    if not isinstance(raw, list):
        raise DocumentError("diagonals must be a list of [a, b] pairs", where="diagonals")
    seen: set[Diagonal] = set()
    diags: list[Diagonal] = []
    for i, item in enumerate(raw):
        where = f"diagonals[{i}]"
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise DocumentError(
                f"{where} = {item!r}: expected a pair of integers", where=where
            )
        try:
            d = diagonal(spec, item[0], item[1])
        except InvalidDiagonal as e:
            raise DocumentError(f"{where}: {e}", where=where, offending=[list(item)]) from None
        if not is_n_diagonal(spec, d):
            raise DocumentError(
                f"{where} = ({item[0]},{item[1]}): not an n-diagonal of {spec}",
                where=where,
                offending=[list(item)],
            )
        if d in seen:
            raise DocumentError(
                f"{where} = ({item[0]},{item[1]}): duplicate of {d}",
                where=where,
                offending=[list(item)],
            )
        seen.add(d)
        diags.append(d)

    name = data.get("name")
    notes = data.get("notes")
    for label, value in (("name", name), ("notes", notes)):
        if value is not None and not isinstance(value, str):
            raise DocumentError(f"{label} must be a string when present", where=label)

    return ConfigDocument(spec=spec, diagonals=tuple(diags), name=name, notes=notes)


def document_to_dict(doc: ConfigDocument) -> dict:
    out: dict = {
        "version": FORMAT_VERSION,
        "spec": {"n": doc.spec.n, "m": doc.spec.m},
        "diagonals": [[d.a, d.b] for d in doc.diagonals],
    }
    if doc.name is not None:
        out["name"] = doc.name
    if doc.notes is not None:
        out["notes"] = doc.notes
    return out


def serialize_document(doc: ConfigDocument, indent: int | None = 2) -> str:
    return json.dumps(document_to_dict(doc), indent=indent) + "\n"
