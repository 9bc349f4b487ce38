"""Command line front end.

Results go to standard output as JSON; errors go to standard error as JSON.
Exit status: 0 on success, 2 when the input is well formed but invalid or
not generic, 3 when it is malformed.  ``cauchy`` exits 0 even when the
tolerance check fails; the report then says ``"pass": false``.

Negative coordinates must be attached with ``=``, e.g. ``--point=-1,2``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import documents
from .cauchy import RationalFn, cauchy_check
from .curves import HomotopyTrack, PLCurve, PLPath
from .documents import Scenario
from .errors import AwinError, DocumentError
from .exact import Pt, as_rat
from .indeterminacy import (ManifoldMeta, check_conditions, group_name, subgroup_A,
                            subgroup_B, sum_subgroups)
from .moving import AWIN_diff, delta_AWIN
from .render import render_track_svg
from .surface import ComponentDesc, SurfaceDesc
from .wavefront import FrontSnapshot, moving_observer_bound, passage_lower_bound
from .winding import awin_diff, degree_periodic, delta_awin, win

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise DocumentError(f"bad command line: {message}")


def _point(text: str) -> Pt:
    try:
        x, y = text.split(",")
        return Pt(as_rat(x), as_rat(y))
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected X,Y with rational coordinates, got {text!r}")


def _pair(text: str) -> tuple[int, int]:
    try:
        m, n = text.split(",")
        return int(m), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n integers, got {text!r}")


def _load(path: str, *types):
    value = documents.load(path)
    if types and not isinstance(value, types):
        names = ", ".join(t.__name__ for t in types)
        raise DocumentError(f"{path}: expected a document of type {names}, "
                            f"got {type(value).__name__}")
    return value


def _component(surface: SurfaceDesc, cls: tuple[int, int] | None, default) -> ComponentDesc:
    return ComponentDesc(surface, cls if cls is not None else default)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _quotient(q) -> dict:
    return {"modulus": q.modulus, "value": q.value, "group": q.group}


def cmd_awin_diff(args) -> None:
    track = _load(args.track, HomotopyTrack)
    comp = _component(track.surface, args.torus_class, track.offset)
    delta = delta_awin(track, args.point)
    q = awin_diff(track, args.point, comp)
    _emit({"delta": delta, **_quotient(q)})


def cmd_win(args) -> None:
    _emit(win(_load(args.curve, PLCurve), args.point))


def cmd_degree(args) -> None:
    _emit(degree_periodic(_load(args.track, HomotopyTrack)))


def cmd_groups(args) -> None:
    surface = _load(args.surface, SurfaceDesc)
    comp = _component(surface, args.torus_class, (0, 0))
    a, b = subgroup_A(comp), subgroup_B(comp)
    ab = sum_subgroups(a, b)
    _emit({"A": a.d, "B": b.d, "A+B": ab.d,
           "awin_group": group_name(a.d), "AWIN_group": group_name(ab.d)})


def _meta_from(value) -> ManifoldMeta:
    if isinstance(value, Scenario) and value.meta is not None:
        return value.meta
    raise DocumentError("expected a scenario document with a \"meta\" object")


def cmd_conditions(args) -> None:
    _emit(check_conditions(_meta_from(documents.load(args.meta))).to_dict())


def cmd_awin_moving(args) -> None:
    track = _load(args.track, HomotopyTrack)
    path = _load(args.path, PLPath)
    comp = _component(track.surface, args.torus_class, track.offset)
    delta = delta_AWIN(track, path)
    _emit({"delta": delta, **_quotient(AWIN_diff(track, path, comp))})


def cmd_cauchy(args) -> None:
    f = _load(args.function, RationalFn)
    report = cauchy_check(f, _load(args.c1, PLCurve), _load(args.c2, PLCurve),
                          _load(args.track, HomotopyTrack), args.tol, args.panels, args.order)
    _emit(report.to_dict())


def _front(path: str, default_time: int) -> FrontSnapshot:
    value = documents.load(path)
    if isinstance(value, PLCurve):
        return FrontSnapshot(value, default_time)
    if isinstance(value, Scenario):
        curve = value.documents.get("curve")
        if isinstance(curve, PLCurve):
            time = value.time if value.time is not None else default_time
            return FrontSnapshot(curve, time)
    raise DocumentError(f"{path}: a front is a curve document or a scenario with a \"curve\"")


def cmd_passage(args) -> None:
    s1, s2 = _front(args.front1, 0), _front(args.front2, 1)
    track = _load(args.track, HomotopyTrack)
    comp = _component(track.surface, args.torus_class, track.offset)
    if args.path:
        bound = moving_observer_bound(s1, s2, track, _load(args.path, PLPath), comp)
        _emit({"bound": bound, "observer": "moving"})
    else:
        if args.point is None:
            raise DocumentError("passage needs --point or --path")
        bound = passage_lower_bound(s1, s2, track, args.point, comp)
        _emit({"bound": bound, "observer": "fixed"})


def cmd_render(args) -> None:
    track = _load(args.track, HomotopyTrack)
    svg = render_track_svg(track, args.point, title=Path(args.track).name)
    Path(args.out).write_text(svg)
    _emit({"written": args.out, "frames": len(track.frames)})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="awin", description="Affine winding numbers of PL curves on surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("awin-diff", help="signed passage count of a track and its class")
    p.add_argument("--track", required=True)
    p.add_argument("--point", required=True, type=_point)
    p.add_argument("--class", dest="torus_class", type=_pair)
    p.set_defaults(func=cmd_awin_diff)

    p = sub.add_parser("win", help="classical winding number")
    p.add_argument("--curve", required=True)
    p.add_argument("--point", required=True, type=_point)
    p.set_defaults(func=cmd_win)

    p = sub.add_parser("degree", help="degree of a periodic track")
    p.add_argument("--track", required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("groups", help="indeterminacy subgroups of a component")
    p.add_argument("--surface", required=True)
    p.add_argument("--class", dest="torus_class", type=_pair)
    p.set_defaults(func=cmd_groups)

    p = sub.add_parser("conditions", help="check sufficient conditions for Z-valued invariants")
    p.add_argument("--meta", required=True)
    p.set_defaults(func=cmd_conditions)

    p = sub.add_parser("awin-moving", help="signed passage count through a moving point")
    p.add_argument("--track", required=True)
    p.add_argument("--path", required=True)
    p.add_argument("--class", "--point-class", dest="torus_class", type=_pair)
    p.set_defaults(func=cmd_awin_moving)

    p = sub.add_parser("cauchy", help="check the generalized Cauchy integral formula")
    p.add_argument("--function", required=True)
    p.add_argument("--c1", required=True)
    p.add_argument("--c2", required=True)
    p.add_argument("--track", required=True, help="track from C2 to C1")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--panels", type=int, default=4)
    p.add_argument("--order", type=int, default=16)
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("passage", help="lower bound on passages of a front")
    p.add_argument("--front1", required=True)
    p.add_argument("--front2", required=True)
    p.add_argument("--track", required=True)
    p.add_argument("--point", type=_point)
    p.add_argument("--path")
    p.add_argument("--class", dest="torus_class", type=_pair)
    p.set_defaults(func=cmd_passage)

    p = sub.add_parser("render", help="draw a track as SVG")
    p.add_argument("--track", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--point", type=_point)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except DocumentError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return EXIT_MALFORMED
    except AwinError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
