"""Command-line front end.

Elements of L are given either as JSON (``{"lambda": [..], "ell": e}``), as a
normal-form string ``a.b.c.d|e``, or as an expression over the symbols
``x1..x4, c, s, omega, delta`` such as ``2x1+x3-c``. Extension labels are
written ``X`` or ``X@Z`` (parameter ``X``, twist ``Z``).

Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import __version__
from .errors import GLError
from .extbundle import (
    ExtLabel,
    canonical_form,
    class_of_ext,
    dualize,
    ext_to_u,
    injective_hull,
    is_auslander,
    iso_equivalent,
    iso_images,
    projective_cover,
    suspend,
    u_to_ext,
)
from .graded import Truncation, dim_R, dim_S, line_ext_dims
from .k0 import K0Class, classes_equal, euler_pairing, gram_determinant
from .orbits import burnside_count
from .picard import LElem, Weights
from .stablehom import StableObj, hom_table, rigidity_check, stable_hom
from .suites import SUITES, orbit_sweep, run_suite
from .tilting import quiver_presentation, to_dot

__all__ = ["main", "parse_elem", "parse_label", "build_parser"]


class UsageError(Exception):
    pass


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*(x[1-4]|c|s|omega|w|delta|0)\s*")
_NF = re.compile(r"^\s*(-?\d+)\.(-?\d+)\.(-?\d+)\.(-?\d+)\|(-?\d+)\s*$")


def parse_elem(w: Weights, text: str) -> LElem:
    text = text.strip()
    if text.startswith("{"):
        try:
            return w.normalize(*_json_parts(json.loads(text)))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad element JSON {text!r}: {exc}") from None
    m = _NF.match(text)
    if m:
        vals = [int(v) for v in m.groups()]
        return w.normalize(vals[:4], vals[4])
    symbols = {
        "c": w.c, "s": w.s, "omega": w.omega, "w": w.omega, "delta": w.delta, "0": w.zero,
        **{f"x{i}": w.x(i) for i in range(1, 5)},
    }
    pos, total = 0, w.zero
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise UsageError(f"cannot parse element {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        total = w.add(total, w.mul(sign * coeff, symbols[m.group(3)]))
        pos = m.end()
    if not text:
        raise UsageError("empty element")
    return total


def _json_parts(obj):
    return list(obj["lambda"]), int(obj["ell"])


def parse_label(w: Weights, text: str) -> ExtLabel:
    x, _, z = text.partition("@")
    return ExtLabel.make(w, parse_elem(w, x), parse_elem(w, z) if z else None)


def parse_class(w: Weights, text: str) -> K0Class:
    """A K0 class: JSON list of ``{"degree", "coeff"}``, ``ext:LABEL`` or a line degree."""
    text = text.strip()
    if text.startswith("["):
        try:
            obj = json.loads(text)
            return K0Class((w.normalize(*_json_parts(t["degree"])), int(t["coeff"])) for t in obj)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad K0 class JSON: {exc}") from None
    if text.startswith("ext:"):
        return class_of_ext(w, parse_label(w, text[4:]))
    return K0Class.line(parse_elem(w, text))


def _weights(text: str) -> Weights:
    try:
        return Weights.parse(text)
    except (GLError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _truncation(text: str) -> Truncation:
    try:
        return Truncation.parse(text)
    except (GLError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="glacm", description=__doc__.split("\n\n")[0])
    ap.add_argument("--weights", type=_weights, help="weight quadruple p1,p2,p3,p4 (each >= 2)")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    sub.add_parser("normal-form", help="normal form of an element").add_argument("elem")
    sub.add_parser("add", help="sum of elements").add_argument("elems", nargs="+")
    p = sub.add_parser("leq", help="partial order test a <= b")
    p.add_argument("a")
    p.add_argument("b")
    sub.add_parser("dim-r", help="dim R_x").add_argument("elem")
    p = sub.add_parser("dim-s", help="dim S_x for S = R/(X_i^q_i)")
    p.add_argument("elem")
    p.add_argument("--q", type=_truncation, required=True)
    p = sub.add_parser("line-ext", help="dims of Hom, Ext1, Ext2 between O(x) and O(y)")
    p.add_argument("x")
    p.add_argument("y")
    p = sub.add_parser("euler", help="Euler pairing of two K0 classes")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("k0-eq", help="equality of two K0 classes")
    p.add_argument("a")
    p.add_argument("b")
    sub.add_parser("gram-det", help="determinant of the Euler Gram matrix on [0, 2c]")

    p = sub.add_parser("ext", help="2-extension bundle label calculus")
    p.add_argument("op", choices=["make", "suspend", "dual", "iso", "canon", "hull", "cover", "aus", "ucorr"])
    p.add_argument("label", help="X or X@Z; for ucorr an element u in [s, s+delta]")
    p.add_argument("--n", type=int, default=1, help="suspension count")
    p.add_argument("--to", help="second label for iso")
    p.add_argument("--inverse", action="store_true", help="ucorr: map x in [0, delta] to u")

    p = sub.add_parser("stable-hom", help="dim Hom(source[m], target[n]) with a 2-Auslander source")
    p.add_argument("source", nargs="?")
    p.add_argument("target", nargs="?")
    p.add_argument("--source-shift", type=int, default=0)
    p.add_argument("--target-shift", type=int, default=0)
    p.add_argument("--table", action="store_true", help="emit all nonzero Hom(E(x), E(y)[n])")

    p = sub.add_parser("rigidity", help="Hom(T, T[n]) = 0 for n != 0")
    p.add_argument("--engine", choices=["closed", "cover"], default="closed")

    p = sub.add_parser("quiver", help="quiver presentation of Lambda(q)")
    p.add_argument("--q", type=_truncation, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("orbit-count", help="orbits of L on 2-extension bundles")
    p.add_argument("--sweep", type=int, metavar="PMAX", help="sweep all tuples with 2 <= p_i <= PMAX")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--sweep", type=int, metavar="PMAX", help="bound for orbit-sweep")
    return ap


def _need_weights(args) -> Weights:
    if args.weights is None:
        raise UsageError(f"{args.cmd} needs --weights")
    return args.weights


def _ext(w: Weights, args) -> dict:
    if args.op == "ucorr":
        if args.inverse:
            return {"u": ext_to_u(w, parse_elem(w, args.label)).to_json()}
        return {"label": u_to_ext(w, parse_elem(w, args.label)).to_json()}
    a = parse_label(w, args.label)
    if args.op == "make":
        cls = class_of_ext(w, a)
        return {"label": a.to_json(), "class": cls.to_json(), "rank": cls.rank}
    if args.op == "suspend":
        return {"label": suspend(w, a, args.n).to_json(), "n": args.n}
    if args.op == "dual":
        return {"label": dualize(w, a).to_json()}
    if args.op == "iso":
        if args.to:
            return {"iso": iso_equivalent(w, a, parse_label(w, args.to))}
        return {"images": [b.to_json() for b in iso_images(w, a)]}
    if args.op == "canon":
        return {"label": canonical_form(w, a).to_json()}
    if args.op == "hull":
        return {"hull": injective_hull(w, a).to_json()}
    if args.op == "cover":
        return {"cover": projective_cover(w, a).to_json()}
    z = is_auslander(w, a)
    return {"auslander": z is not None, "twist": None if z is None else z.to_json()}


def _run(args) -> tuple[object, int]:
    cmd = args.cmd
    if cmd == "verify":
        if args.weights is None and args.sweep is None:
            raise UsageError("verify needs --weights or --sweep")
        res = run_suite(args.suite, args.weights, args.sweep)
        return res.to_json(), 0 if res.ok else 1
    if cmd == "orbit-count" and args.sweep is not None:
        if args.sweep < 2:
            raise UsageError("--sweep needs PMAX >= 2")
        checks = orbit_sweep(args.sweep)
        return {"sweep": args.sweep, "checks": [c.to_json() for c in checks]}, int(not all(c.ok for c in checks))

    w = _need_weights(args)
    if cmd == "normal-form":
        a = parse_elem(w, args.elem)
        return {"element": a.to_json(), "text": str(a)}, 0
    if cmd == "add":
        return {"sum": w.add(*(parse_elem(w, e) for e in args.elems)).to_json()}, 0
    if cmd == "leq":
        return {"leq": w.leq(parse_elem(w, args.a), parse_elem(w, args.b))}, 0
    if cmd == "dim-r":
        return {"dim": dim_R(w, parse_elem(w, args.elem))}, 0
    if cmd == "dim-s":
        return {"dim": dim_S(w, parse_elem(w, args.elem), args.q)}, 0
    if cmd == "line-ext":
        return {"dims": list(line_ext_dims(w, parse_elem(w, args.x), parse_elem(w, args.y)))}, 0
    if cmd == "euler":
        return {"euler": euler_pairing(w, parse_class(w, args.a), parse_class(w, args.b))}, 0
    if cmd == "k0-eq":
        return {"equal": classes_equal(w, parse_class(w, args.a), parse_class(w, args.b))}, 0
    if cmd == "gram-det":
        return {"det": gram_determinant(w), "size": len(w.k0_basis)}, 0
    if cmd == "ext":
        return _ext(w, args), 0
    if cmd == "stable-hom":
        if args.table:
            return hom_table(w), 0
        if not (args.source and args.target):
            raise UsageError("stable-hom needs SOURCE and TARGET (or --table)")
        src = StableObj(parse_label(w, args.source), args.source_shift)
        tgt = StableObj(parse_label(w, args.target), args.target_shift)
        return {"dim": stable_hom(w, src, tgt)}, 0
    if cmd == "rigidity":
        ok = rigidity_check(w, engine=args.engine)
        return {"rigid": ok, "engine": args.engine}, int(not ok)
    if cmd == "quiver":
        pres = quiver_presentation(w, args.q)
        return (to_dot(pres) if args.format == "dot" else pres.to_json()), 0
    if cmd == "orbit-count":
        return burnside_count(w).to_json(), 0
    raise UsageError(f"unknown command {cmd}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code = _run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"glacm: error: {exc}", file=sys.stderr)
        return 2
    except GLError as exc:
        print(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}, sort_keys=True))
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        print(json.dumps(out, sort_keys=True))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
