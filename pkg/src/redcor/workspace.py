"""Persistent JSON workspace of named rings, ideals, modules and maps.

The file format is schema-versioned; loading refuses a mismatched major
version.  Round trips are lossless: parse(print(w)) reproduces the
workspace structurally.
"""

from __future__ import annotations

import datetime
import json
from dataclasses import dataclass, field

from .errors import IllFormed, ParseError, SchemaVersionMismatch
from .ideals import Ideal, ideal
from .modules import ModuleMap, Presentation, module_map, presentation
from .rings import Ring, ring_from_json, ring_to_json

SCHEMA = "redcor/1"
TOOL_VERSION = "redcor 0.1.0"


@dataclass
class Workspace:
    ring: Ring | None = None
    objects: dict = field(default_factory=dict)
    created: str = ""

    def set_ring(self, ring: Ring):
        if self.objects:
            raise IllFormed("cannot switch rings while objects exist; rm them first")
        self.ring = ring

    def define(self, name: str, obj):
        if not name or any(ch.isspace() for ch in name):
            raise IllFormed("object names must be nonempty without spaces")
        self.objects[name] = obj

    def get(self, name: str):
        if name not in self.objects:
            raise IllFormed(f"no object named {name!r} in the workspace")
        return self.objects[name]

    def get_ideal(self, name: str) -> Ideal:
        obj = self.get(name)
        if not isinstance(obj, Ideal):
            raise IllFormed(f"{name!r} is not an ideal")
        return obj

    def get_module(self, name: str) -> Presentation:
        obj = self.get(name)
        if not isinstance(obj, Presentation):
            raise IllFormed(f"{name!r} is not a module")
        return obj

    def get_map(self, name: str) -> ModuleMap:
        obj = self.get(name)
        if not isinstance(obj, ModuleMap):
            raise IllFormed(f"{name!r} is not a map")
        return obj

    def remove(self, name: str):
        if name not in self.objects:
            raise IllFormed(f"no object named {name!r} in the workspace")
        del self.objects[name]


def _matrix_to_json(ring, rows):
    return [[ring.fmt(x) for x in row] for row in rows]


def _object_to_json(ring, name, obj, names):
    if isinstance(obj, Ideal):
        return {"kind": "ideal",
                "generators": [ring.fmt(g) for g in obj.generators]}
    if isinstance(obj, Presentation):
        return {"kind": "module", "gens": obj.gens,
                "relations": _matrix_to_json(ring, obj.relations)}
    if isinstance(obj, ModuleMap):
        src = names.get(id(obj.source))
        tgt = names.get(id(obj.target))
        out = {"kind": "map", "matrix": _matrix_to_json(ring, obj.matrix)}
        if src is not None and tgt is not None:
            out["source"] = src
            out["target"] = tgt
        else:
            out["source_module"] = _object_to_json(ring, None, obj.source, names)
            out["target_module"] = _object_to_json(ring, None, obj.target, names)
        return out
    raise IllFormed(f"cannot serialize object {name!r}")


def workspace_to_json(w: Workspace) -> dict:
    if w.ring is None:
        raise IllFormed("workspace has no ring set")
    names = {}
    for name, obj in w.objects.items():
        if isinstance(obj, Presentation):
            names[id(obj)] = name
    objects = {}
    for name in sorted(w.objects):
        objects[name] = _object_to_json(w.ring, name, w.objects[name], names)
    return {
        "schema": SCHEMA,
        "ring": ring_to_json(w.ring),
        "objects": objects,
        "meta": {"tool": TOOL_VERSION, "created": w.created},
    }


def _module_from_json(ring, d) -> Presentation:
    try:
        return presentation(ring, int(d["gens"]), d.get("relations", []))
    except KeyError as exc:
        raise ParseError(f"module object missing field {exc}") from None


def workspace_from_json(d: dict) -> Workspace:
    schema = d.get("schema", "")
    if not isinstance(schema, str) or "/" not in schema:
        raise ParseError("missing or malformed schema tag")
    name, _, major = schema.partition("/")
    if name != "redcor" or major.split(".")[0] != SCHEMA.split("/")[1]:
        raise SchemaVersionMismatch(
            f"workspace schema {schema!r} is not compatible with {SCHEMA!r}")
    ring = ring_from_json(d.get("ring", {}))
    w = Workspace(ring=ring, created=d.get("meta", {}).get("created", ""))
    objects = d.get("objects", {})
    deferred = []
    for name, obj in objects.items():
        kind = obj.get("kind")
        if kind == "ideal":
            w.objects[name] = ideal(ring, obj.get("generators", []))
        elif kind == "module":
            w.objects[name] = _module_from_json(ring, obj)
        elif kind == "map":
            deferred.append((name, obj))
        else:
            raise ParseError(f"unknown object kind {kind!r} for {name!r}")
    for name, obj in deferred:
        if "source" in obj:
            src = w.get_module(obj["source"])
            tgt = w.get_module(obj["target"])
        else:
            src = _module_from_json(ring, obj["source_module"])
            tgt = _module_from_json(ring, obj["target_module"])
        w.objects[name] = module_map(src, tgt, obj.get("matrix", []))
    return w


def save_workspace(w: Workspace, path: str):
    if not w.created:
        w.created = datetime.datetime.now(datetime.timezone.utc).isoformat()
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(workspace_to_json(w), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_workspace(path: str) -> Workspace:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return workspace_from_json(data)
