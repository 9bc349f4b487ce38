"""JSON documents for surfaces, curves, tracks, paths, functions and scenarios.

Exact coordinates are written as integers or ``"p/q"`` strings and read from
integers, ``"p/q"`` strings or decimal strings.  Complex coefficients are
``[re, im]`` pairs of JSON numbers.  Every document is an object with a
``"kind"`` key::

    {"kind": "surface", "type": "punctured_plane", "punctures": [[0, 0]]}
    {"kind": "curve", "surface": {"type": "plane"},
     "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "offset": [0, 0]}
    {"kind": "track", "surface": {"type": "flat_torus"}, "offset": [0, 1],
     "frames": [[[0, 0], ["1/3", 0], ...], ...]}
    {"kind": "path", "surface": {"type": "plane"}, "points": [[20, 20], [21, 21]]}
    {"kind": "function", "numerator": [[1, 0]], "denominator": [[-2, 0], [1, 0]],
     "poles": [{"at": [2, 0], "order": 1}]}
    {"kind": "scenario", "time": "1/2", "curve": {...curve document...},
     "meta": {"betti_N": [1, 1], "betti_M": [1, 4, 1], "M_closed": true}}

A scenario bundles nested documents under arbitrary keys together with the
optional scalar fields ``time``, ``point``, ``class`` and ``meta``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any

from .cauchy import Pole, RationalFn
from .curves import HomotopyTrack, PLCurve, PLPath
from .errors import AwinError, DocumentError
from .exact import Pt, as_rat, format_rat
from .indeterminacy import ManifoldMeta
from .surface import SurfaceDesc, SurfaceKind

KINDS = ("surface", "curve", "track", "path", "function", "scenario")
_SCALAR_KEYS = ("time", "point", "class", "meta")


@dataclass(frozen=True)
class Scenario:
    documents: dict[str, Any] = field(default_factory=dict)
    time: Fraction | None = None
    point: Pt | None = None
    torus_class: tuple[int, int] | None = None
    meta: ManifoldMeta | None = None



def _fail(msg: str) -> DocumentError:
    return DocumentError(msg)


def _rat(v) -> Fraction:
    try:
        return as_rat(v)
    except (TypeError, ValueError) as exc:
        raise _fail(f"bad rational {v!r}: {exc}") from None


def _pt(v) -> Pt:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise _fail(f"a point is a pair [x, y], got {v!r}")
    return Pt(_rat(v[0]), _rat(v[1]))


def _int_pair(v, what: str) -> tuple[int, int]:
    if (not isinstance(v, (list, tuple)) or len(v) != 2
            or not all(isinstance(k, int) and not isinstance(k, bool) for k in v)):
        raise _fail(f"{what} must be a pair of integers, got {v!r}")
    return int(v[0]), int(v[1])


def _complex(v) -> complex:
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if (isinstance(v, (list, tuple)) and len(v) == 2
            and all(isinstance(k, (int, float)) and not isinstance(k, bool) for k in v)):
        return complex(v[0], v[1])
    raise _fail(f"a complex number is [re, im], got {v!r}")


def _dump_pt(p: Pt) -> list:
    return [format_rat(p.x), format_rat(p.y)]


def _dump_complex(z: complex) -> list:
    return [z.real, z.imag]


def _require(obj: dict, key: str):
    if key not in obj:
        raise _fail(f"missing key {key!r}")
    return obj[key]


def parse_surface(obj) -> SurfaceDesc:
    if not isinstance(obj, dict):
        raise _fail("surface must be an object")
    try:
        kind = SurfaceKind(_require(obj, "type"))
    except ValueError:
        raise _fail(f"unknown surface type {obj.get('type')!r}") from None
    punctures = tuple(_pt(q) for q in obj.get("punctures", []))
    try:
        return SurfaceDesc(kind, punctures)
    except AwinError as exc:
        raise _fail(str(exc)) from None


def dump_surface(s: SurfaceDesc) -> dict:
    out: dict[str, Any] = {"type": s.kind.value}
    if s.punctures:
        out["punctures"] = [_dump_pt(q) for q in s.punctures]
    return out


def _vertices(v) -> tuple[Pt, ...]:
    if not isinstance(v, list):
        raise _fail("vertex list must be an array")
    return tuple(_pt(q) for q in v)


def parse_document(obj) -> Any:
    """Turn a decoded JSON value into a domain object, dispatching on ``"kind"``."""
    if not isinstance(obj, dict):
        raise _fail("a document must be a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise _fail(f"unknown document kind {kind!r}")
    try:
        return _PARSERS[kind](obj)
    except DocumentError:
        raise
    except AwinError as exc:
        raise _fail(f"invalid {kind}: {exc}") from None
    except (TypeError, ValueError, KeyError) as exc:
        raise _fail(f"invalid {kind}: {exc}") from None


def _parse_curve(obj) -> PLCurve:
    surface = parse_surface(_require(obj, "surface"))
    offset = _int_pair(obj.get("offset", [0, 0]), "offset")
    return PLCurve(surface, _vertices(_require(obj, "vertices")), offset)


def _parse_track(obj) -> HomotopyTrack:
    surface = parse_surface(_require(obj, "surface"))
    offset = _int_pair(obj.get("offset", [0, 0]), "offset")
    frames = _require(obj, "frames")
    if not isinstance(frames, list):
        raise _fail("frames must be an array")
    return HomotopyTrack(tuple(PLCurve(surface, _vertices(f), offset) for f in frames))


def _parse_path(obj) -> PLPath:
    surface = parse_surface(_require(obj, "surface"))
    return PLPath(surface, _vertices(_require(obj, "points")))


def _parse_function(obj) -> RationalFn:
    num = tuple(_complex(c) for c in _require(obj, "numerator"))
    den = tuple(_complex(c) for c in _require(obj, "denominator"))
    poles = []
    for q in obj.get("poles", []):
        if not isinstance(q, dict):
            raise _fail("pole entries are objects {\"at\": [x, y], \"order\": k}")
        order = q.get("order", 1)
        if not isinstance(order, int) or isinstance(order, bool):
            raise _fail("pole order must be an integer")
        poles.append(Pole(_pt(_require(q, "at")), order))
    return RationalFn(num, den, tuple(poles))


def parse_meta(obj) -> ManifoldMeta:
    if not isinstance(obj, dict):
        raise _fail("meta must be an object")
    names = {f.name for f in fields(ManifoldMeta)}
    unknown = set(obj) - names
    if unknown:
        raise _fail(f"unknown meta fields {sorted(unknown)}")
    for key in ("betti_N", "betti_M"):
        v = _require(obj, key)
        if not isinstance(v, list) or not all(isinstance(b, int) and not isinstance(b, bool)
                                              for b in v):
            raise _fail(f"{key} must be a list of integers")
    for key in names - {"betti_N", "betti_M"}:
        if key in obj and not isinstance(obj[key], bool):
            raise _fail(f"{key} must be true or false")
    _require(obj, "M_closed")
    try:
        return ManifoldMeta(**obj)
    except ValueError as exc:
        raise _fail(str(exc)) from None


def dump_meta(meta: ManifoldMeta) -> dict:
    out = {}
    for f in fields(ManifoldMeta):
        v = getattr(meta, f.name)
        out[f.name] = list(v) if isinstance(v, tuple) else v
    return out


def _parse_scenario(obj) -> Scenario:
    docs = {k: parse_document(v) for k, v in obj.items()
            if k != "kind" and k not in _SCALAR_KEYS}
    return Scenario(
        documents=docs,
        time=_rat(obj["time"]) if "time" in obj else None,
        point=_pt(obj["point"]) if "point" in obj else None,
        torus_class=_int_pair(obj["class"], "class") if "class" in obj else None,
        meta=parse_meta(obj["meta"]) if "meta" in obj else None,
    )


_PARSERS = {
    "surface": lambda obj: parse_surface(obj),
    "curve": _parse_curve,
    "track": _parse_track,
    "path": _parse_path,
    "function": _parse_function,
    "scenario": _parse_scenario,
}


def dump_document(value) -> dict:
    """Inverse of :func:`parse_document`."""
    if isinstance(value, SurfaceDesc):
        return {"kind": "surface", **dump_surface(value)}
    if isinstance(value, PLCurve):
        return {"kind": "curve", "surface": dump_surface(value.surface),
                "vertices": [_dump_pt(q) for q in value.vertices],
                "offset": list(value.offset)}
    if isinstance(value, HomotopyTrack):
        return {"kind": "track", "surface": dump_surface(value.surface),
                "offset": list(value.offset),
                "frames": [[_dump_pt(q) for q in f.vertices] for f in value.frames]}
    if isinstance(value, PLPath):
        return {"kind": "path", "surface": dump_surface(value.surface),
                "points": [_dump_pt(q) for q in value.points]}
    if isinstance(value, RationalFn):
        return {"kind": "function",
                "numerator": [_dump_complex(c) for c in value.numerator],
                "denominator": [_dump_complex(c) for c in value.denominator],
                "poles": [{"at": _dump_pt(q.at), "order": q.order} for q in value.poles]}
    if isinstance(value, Scenario):
        out: dict[str, Any] = {"kind": "scenario"}
        out.update({k: dump_document(v) for k, v in value.documents.items()})
        if value.time is not None:
            out["time"] = format_rat(value.time)
        if value.point is not None:
            out["point"] = _dump_pt(value.point)
        if value.torus_class is not None:
            out["class"] = list(value.torus_class)
        if value.meta is not None:
            out["meta"] = dump_meta(value.meta)
        return out
    raise TypeError(f"cannot serialize {type(value).__name__}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(f"not valid JSON: {exc}") from None
    return parse_document(obj)


def dumps(value) -> str:
    return json.dumps(dump_document(value), sort_keys=True, indent=2)


def load(path: str | Path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _fail(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def save(value, path: str | Path) -> None:
    Path(path).write_text(dumps(value) + "\n")
