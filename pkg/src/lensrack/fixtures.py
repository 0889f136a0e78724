"""Bundled rack and diagram files used by the tests and demos."""

from __future__ import annotations

from importlib import resources

from .diagram import LensDiagram, parse_diagram
from .rack import RackTable, parse_rack

_DATA = resources.files(__package__) / "data"


def _names(kind: str, suffix: str) -> list[str]:
    return sorted(p.name[: -len(suffix)] for p in (_DATA / kind).iterdir() if p.name.endswith(suffix))


def rack_names() -> list[str]:
    return _names("racks", ".rack")


def diagram_names() -> list[str]:
    return _names("diagrams", ".diag")


def rack_path(name: str):
    return _DATA / "racks" / f"{name}.rack"


def diagram_path(name: str):
    return _DATA / "diagrams" / f"{name}.diag"


def load_rack(name: str, transposed: bool = False) -> RackTable:
    return parse_rack(rack_path(name).read_text(encoding="utf-8"), transposed=transposed)


def load_diagram(name: str) -> LensDiagram:
    return parse_diagram(diagram_path(name).read_text(encoding="utf-8"))
