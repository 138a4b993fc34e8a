"""JSON ingestion for graph and threat files."""

import hashlib
import json
from dataclasses import dataclass

from .errors import InvalidThreat, IoError, MalformedJson, ValidationError
from .graph import Graph, build_graph
from .risk import Threat, ThreatProfile


@dataclass(frozen=True)
class LoadedFile:
    path: str
    data: object
    sha256: str


def load_json(path) -> LoadedFile:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MalformedJson(f"{path}: not UTF-8 ({exc.reason} at byte {exc.start})") from None
    except json.JSONDecodeError as exc:
        raise MalformedJson(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return LoadedFile(str(path), data, hashlib.sha256(raw).hexdigest())


def graph_from_json(data, where: str = "graph") -> Graph:
    """Validate a ``{"vertices": [...], "edges": [[a, b], ...]}`` document and build the graph."""
    if not isinstance(data, dict):
        raise MalformedJson(f"{where}: top level must be an object")
    vertices = data.get("vertices")
    edges = data.get("edges", [])
    if not isinstance(vertices, list):
        raise MalformedJson(f"{where}: field 'vertices' must be a list of strings")
    for i, lab in enumerate(vertices):
        if not isinstance(lab, str):
            raise MalformedJson(f"{where}: vertices[{i}] must be a string, got {lab!r}")
    if not isinstance(edges, list):
        raise MalformedJson(f"{where}: field 'edges' must be a list")
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise MalformedJson(f"{where}: edges[{i}] must be a 2-element list of labels, got {e!r}")
    try:
        return build_graph(vertices, [tuple(e) for e in edges])
    except ValidationError as exc:
        raise type(exc)(f"{where}: {exc}") from None


def threats_from_json(data, g: Graph, where: str = "threats") -> ThreatProfile:
    """Validate a ``{label: [{"name", "p", "d"}, ...]}`` document against ``g``."""
    if not isinstance(data, dict):
        raise MalformedJson(f"{where}: top level must be an object mapping labels to threat lists")
    table = {}
    for label, entries in data.items():
        if not isinstance(entries, list):
            raise MalformedJson(f"{where}: {label!r} must map to a list of threats")
        threats = []
        for i, t in enumerate(entries):
            if not isinstance(t, dict):
                raise MalformedJson(f"{where}: {label}[{i}] must be an object")
            name = t.get("name", f"#{i}")
            for key in ("p", "d"):
                val = t.get(key)
                if isinstance(val, bool) or not isinstance(val, (int, float)):
                    raise InvalidThreat(f"{where}: vertex {label!r} threat {name!r}: "
                                        f"field {key!r} must be a number, got {val!r}")
            try:
                threats.append(Threat(str(name), t["p"], t["d"]))
            except InvalidThreat as exc:
                raise InvalidThreat(f"{where}: vertex {label!r}: {exc}") from None
        table[label] = threats
    try:
        return ThreatProfile.from_labels(g, table)
    except ValidationError as exc:
        raise type(exc)(f"{where}: {exc}") from None


def parse_graph_file(path) -> Graph:
    return graph_from_json(load_json(path).data, str(path))


def parse_threats_file(path, g: Graph) -> ThreatProfile:
    return threats_from_json(load_json(path).data, g, str(path))
