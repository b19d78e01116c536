"""Arrangement files: a JSON interchange format plus bundled data access.

Two kinds of file share one schema (``"format": 1``):

* ``kind = "coordinates"`` carries the lines as triples of rational
  strings ``"p/q"``; the singular locus is recomputed exactly on load.
* ``kind = "incidence"`` carries abstract data: ``num_lines``, the
  points as ``{"id", "lines"}`` records, and optionally named
  ``virtual_lines`` with declared point sets.

Rationals are never written as floats.  Incidence files are validated on
load; files marked ``"complete": false`` (sub-selections of a larger
arrangement) skip the full-arrangement counting identities.

The bundled structures (``klein``, ``wiman``, ``a1_15``) live in the
package's ``data/`` directory; the environment variable
``SESHADRI_DATA_DIR`` overrides that location.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

from .arrangements import (
    ConfigPoint,
    IncidenceStructure,
    VirtualLine,
    singular_locus,
    validate_counts,
)
from .errors import ArrangementParseError, InvalidStructureError
from .projective import ProjLine
from .rational import format_rational, parse_rational

FORMAT_VERSION = 1
BUNDLED = ("klein", "wiman", "a1_15")


def structure_to_json(s: IncidenceStructure, source: str = "") -> dict:
    """Serializable dict in the arrangement-file schema."""
    obj: dict = {"format": FORMAT_VERSION, "name": s.name, "source": source}
    if s.origin == "coordinates":
        obj["kind"] = "coordinates"
        obj["lines"] = [[format_rational(c) for c in line.coeffs] for line in s.lines]
    else:
        obj["kind"] = "incidence"
        obj["num_lines"] = s.num_lines
        obj["points"] = [{"id": p.id, "lines": sorted(p.on_lines)} for p in s.points]
        if s.virtual_lines:
            obj["virtual_lines"] = [
                {"name": v.name, "points": sorted(v.points)} for v in s.virtual_lines
            ]
    return obj


def structure_from_json(obj: dict) -> IncidenceStructure:
    """Parse and validate one arrangement-file dict."""
    try:
        if obj.get("format") != FORMAT_VERSION:
            raise ArrangementParseError(f"unsupported format: {obj.get('format')!r}")
        kind = obj.get("kind")
        name = obj.get("name", "")
        complete = bool(obj.get("complete", True))
        if kind == "coordinates":
            lines = [ProjLine(*(parse_rational(c) for c in row)) for row in obj["lines"]]
            return singular_locus(lines, name=name)
        if kind != "incidence":
            raise ArrangementParseError(f"unknown kind: {kind!r}")
        points = tuple(
            ConfigPoint(rec["id"], frozenset(rec["lines"]))
            for rec in sorted(obj["points"], key=lambda rec: rec["id"])
        )
        virtual = tuple(
            VirtualLine(rec["name"], frozenset(rec["points"]))
            for rec in obj.get("virtual_lines", ())
        )
        s = IncidenceStructure(
            int(obj["num_lines"]), points, virtual_lines=virtual, name=name
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ArrangementParseError(f"malformed arrangement file: {exc}") from exc
    _reject_hard_violations(s, complete)
    return s


def _reject_hard_violations(s: IncidenceStructure, complete: bool) -> None:
    hard = validate_counts(s, complete=False)
    if hard:
        raise InvalidStructureError("; ".join(hard))
    if complete:
        broken = validate_counts(s, complete=True)
        if broken:
            raise InvalidStructureError(
                "full-arrangement identities fail (mark the file complete=false "
                "if it is a sub-selection): " + "; ".join(broken)
            )


def dump_canonical(obj: dict) -> str:
    """Deterministic JSON rendering used for every file and machine report."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save_arrangement(s: IncidenceStructure, path, source: str = "") -> None:
    Path(path).write_text(dump_canonical(structure_to_json(s, source=source)))


def load_arrangement(path) -> IncidenceStructure:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ArrangementParseError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementParseError(f"{path} is not valid JSON: {exc}") from exc
    return structure_from_json(obj)


def bundled_path(name: str) -> Path:
    """Resolve a bundled data file, honoring SESHADRI_DATA_DIR."""
    override = os.environ.get("SESHADRI_DATA_DIR")
    if override:
        candidate = Path(override) / f"{name}.json"
        if candidate.exists():
            return candidate
    return Path(str(resources.files("seshadri") / "data" / f"{name}.json"))


def load_bundled(name: str) -> IncidenceStructure:
    if name not in BUNDLED:
        raise ArrangementParseError(f"no bundled arrangement named {name!r}")
    return load_arrangement(bundled_path(name))
