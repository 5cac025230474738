"""Command line front end: ``cablefloer <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .cables import Grading, chi_at_grading, classify, diagonal_profile, grading_window, multivariable_chi
from .errors import CableFloerError, UnsupportedRegime
from .homology import GradedDim, decomposition_string, hfl_hat, hfl_minus, module_decomposition
from .knots import parse_knot
from .laurent import format_laurent
from .oracle import e2_hat, e2_minus, euler_check
from .presets import PRESET_LINKS, TABLE_PRESETS, grid_cells, preset_link, table_spec, verify_table
from .surgery import SurgeryFraming, det_lambda, is_positive_cone, surgery_description

SCHEMA = "cablefloer/1"


class UsageError(Exception):
    pass


# -- JSON records --------------------------------------------------------

def link_record(L):
    return {"knot": str(L.knot), "r": L.r, "m": L.m, "n": L.n, "regime": str(L.regime)}


def grading_record(v):
    return [_fmt(x) for x in v.values()]


def dims_record(d):
    return {str(k): n for k, n in d.items()}


def emit(record: dict) -> str:
    return json.dumps({"schema": SCHEMA, **record}, indent=2, sort_keys=True, ensure_ascii=False)


def load(text: str) -> dict:
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {data.get('schema')!r}")
    data = dict(data)
    del data["schema"]
    return data


def read_grading(rec):
    return Grading.of(*rec)


def read_dims(rec):
    return GradedDim({int(k): n for k, n in rec.items()})


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- argument helpers ----------------------------------------------------

def _link_from_args(args):
    if getattr(args, "preset", None):
        try:
            return preset_link(args.preset)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if args.knot is None or args.r is None or args.m is None or args.n is None:
        raise UsageError("give either --preset or all of --knot, --r, --m, --n")
    return classify(parse_knot(args.knot), args.r, args.m, args.n)


def _parse_window(text, L):
    """'A:B' in actual values -> doubled (lo, hi) with the lattice parity of L."""
    try:
        a, b = text.split(":")
        lo, hi = int(2 * Fraction(a)), int(2 * Fraction(b))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad window {text!r}; expected A:B, e.g. -5:5 or -1/2:7/2") from None
    if lo > hi:
        raise UsageError(f"empty window {text!r}")
    if (lo - L.parity) % 2:
        lo += 1
    if (hi - L.parity) % 2:
        hi -= 1
    return lo, hi


def _window(args, L, default):
    text = getattr(args, "window", None) or os.environ.get("CABLEFLOER_WINDOW")
    return _parse_window(text, L) if text else default


def _add_link_args(p, preset=True):
    if preset:
        p.add_argument("--preset", choices=sorted(PRESET_LINKS), help="named link")
    p.add_argument("--knot", help="unknot | trefoil | torus(p,q) | cable(<knot>,m,n) | poly:<laurent>")
    p.add_argument("--r", type=int, help="number of components")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)


def _out(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# -- commands ------------------------------------------------------------

def cmd_profile(args):
    L = _link_from_args(args)
    P = diagonal_profile(L)
    lo, hi = _window(args, L, P.window)
    rows = [(k, P.hh_at(k), P.beta_at(k)) for k in range(hi, lo - 1, -2)]
    if args.format == "json":
        _out(args, emit({"command": "profile", "link": link_record(L),
                         "profile": [{"k": _fmt(Fraction(k, 2)), "h": h, "beta": b} for k, h, b in rows]}))
    else:
        lines = ["k\th\tbeta"] + [f"{_fmt(Fraction(k, 2))}\t{h}\t{b}" for k, h, b in rows]
        _out(args, "\n".join(lines))
    return 0


def _hfl_common(args, fn, name):
    L = _link_from_args(args)
    try:
        v = Grading.parse(args.grading)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad grading {args.grading!r}") from None
    dims = fn(L, v)
    if args.format == "tsv":
        _out(args, f"{str(v)}\t" + " ".join(f"{k}:{n}" for k, n in dims.items()))
    else:
        _out(args, emit({"command": name, "link": link_record(L), "grading": grading_record(v),
                         "maslov_dims": dims_record(dims)}))
    return 0


def cmd_hfl(args):
    return _hfl_common(args, hfl_minus, "hfl")


def cmd_hflhat(args):
    return _hfl_common(args, hfl_hat, "hflhat")


def render_table_tsv(spec):
    lines = [f"# {spec.caption}"]
    lines += [f"# note: {n}" for n in spec.notes]
    lines.append("grading\thomology")
    for row in spec.sorted_rows():
        lines.append(f"{row.pattern}\t{row.homology}")
    return "\n".join(lines) + "\n"


def render_table_json(spec):
    return emit({"command": "table", "preset": spec.preset, "caption": spec.caption, "notes": spec.notes,
                 "rows": [{"grading": r.pattern, "homology": r.homology} for r in spec.sorted_rows()]}) + "\n"


def render_svg(L, lo, hi):
    if L.r == 2:
        return _svg_grid(L, lo, hi)
    return _svg_diagonal(L, lo, hi)


def _stable_corner(L):
    P = diagonal_profile(L)
    k = P.window[0]
    while k + 2 <= P.window[1] and P.beta_at(k + 2) == L.r - 1:
        k += 2
    return k


def _svg_grid(L, lo, hi):
    cell, pad = 28, 40
    n = (hi - lo) // 2 + 1
    size = 2 * pad + n * cell
    cells = grid_cells(L, lo, hi)

    def xy(a2, b2):
        return pad + (a2 - lo) // 2 * cell + cell // 2, pad + (hi - b2) // 2 * cell + cell // 2

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}" font-family="sans-serif" font-size="9">',
           f'<rect width="{size}" height="{size}" fill="white"/>']
    corner = _stable_corner(L)
    if corner >= lo:
        x0, y0 = xy(lo, corner)
        x1, y1 = xy(corner, lo)
        out.append(f'<rect x="{x0 - cell // 2}" y="{y0 - cell // 2}" width="{x1 - x0 + cell}" '
                   f'height="{y1 - y0 + cell}" fill="#dddddd"/>')
    for i in range(n):
        c = lo + 2 * i
        x, _ = xy(c, lo)
        _, y = xy(lo, c)
        out.append(f'<line x1="{x}" y1="{pad}" x2="{x}" y2="{size - pad}" stroke="#eeeeee"/>')
        out.append(f'<line x1="{pad}" y1="{y}" x2="{size - pad}" y2="{y}" stroke="#eeeeee"/>')
        out.append(f'<text x="{x}" y="{size - pad + 14}" text-anchor="middle">{_fmt(Fraction(c, 2))}</text>')
        out.append(f'<text x="{pad - 6}" y="{y + 3}" text-anchor="end">{_fmt(Fraction(c, 2))}</text>')
    for (a2, b2), d in sorted(cells.items()):
        x, y = xy(a2, b2)
        label = "F" if d.total == 1 else f"F{d.total}"
        out.append(f'<circle cx="{x}" cy="{y}" r="9" fill="white" stroke="black"/>')
        out.append(f'<text x="{x}" y="{y + 3}" text-anchor="middle">{label}</text>')
    out.append(f'<text x="{pad}" y="{pad - 12}" font-size="12">HFL- of {L.name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _svg_diagonal(L, lo, hi):
    P = diagonal_profile(L, None)
    ks = list(range(lo, hi + 1, 2))
    cell, pad, height = 16, 40, 200
    width = 2 * pad + len(ks) * cell
    top = max(P.hh_at(k) for k in ks) or 1
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height + 2 * pad}" '
           f'font-family="sans-serif" font-size="9">',
           f'<rect width="{width}" height="{height + 2 * pad}" fill="white"/>']
    pts = []
    for i, k in enumerate(ks):
        x = pad + i * cell + cell // 2
        y = pad + height - round(height * P.hh_at(k) / top)
        pts.append(f"{x},{y}")
        b = P.beta_at(k)
        if b >= 0:
            out.append(f'<circle cx="{x}" cy="{y}" r="{2 + b}" fill="black"/>')
        if i % 2 == 0:
            out.append(f'<text x="{x}" y="{pad + height + 14}" text-anchor="middle">{_fmt(Fraction(k, 2))}</text>')
    out.append(f'<polyline points="{" ".join(pts)}" fill="none" stroke="#888888"/>')
    out.append(f'<text x="{pad}" y="{pad - 12}" font-size="12">diagonal h(k) of {L.name}; dot size ~ beta(k)</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_table(args):
    if args.preset not in TABLE_PRESETS:
        raise UsageError(f"no table for preset {args.preset!r}; choose from {', '.join(TABLE_PRESETS)}")
    spec = table_spec(args.preset)
    L = preset_link(args.preset)
    window = _window(args, L, spec.window)
    check = verify_table(spec, window)
    if not check.ok:
        print(f"table {args.preset} does not match the computed homology: "
              f"{check.mismatches[:1] or check.uncovered[:1] or check.overlaps[:1]}", file=sys.stderr)
        return 1
    if args.format == "json":
        text = render_table_json(spec)
    elif args.format == "svg":
        lo, hi = window
        span = min(max(-lo, hi), 24)
        lo, hi = -span - ((span - L.parity) % 2), span + ((span - L.parity) % 2)
        text = render_svg(L, lo, hi)
    else:
        text = render_table_tsv(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_decompose(args):
    L = _link_from_args(args)
    summands = module_decomposition(L)
    text = decomposition_string(L, summands)
    if args.format == "json":
        _out(args, emit({"command": "decompose", "link": link_record(L), "decomposition": text,
                         "summands": [{"label": s.label(L.r), "generator": _fmt(Fraction(s.generator, 2))}
                                      for s in summands]}))
    else:
        _out(args, text)
    return 0


def cmd_verify(args):
    L = _link_from_args(args)
    if getattr(args, "window", None) or os.environ.get("CABLEFLOER_WINDOW"):
        lo, hi = _window(args, L, None)
    else:
        lo, hi = diagonal_profile(L).window
    checked = 0
    for v in grading_window(L, lo, hi):
        checked += 1
        a, b = e2_minus(L, v), hfl_minus(L, v)
        if a != b:
            print(f"FAIL minus at {v}: oracle {a}, formula {b}")
            return 1
        if args.hat:
            page = e2_hat(L, v)
            if page.clean and page.dims != hfl_hat(L, v):
                print(f"FAIL hat at {v}: oracle {page.dims}, formula {hfl_hat(L, v)}")
                return 1
    rep = euler_check(L, (lo, hi))
    if not rep.ok:
        v, e, chi = rep.mismatches[0]
        print(f"FAIL euler at {v}: {e} != {chi}")
        return 1
    print(f"PASS {L.name}: {checked} gradings{' (with hat)' if args.hat else ''}")
    return 0


def cmd_surgery(args):
    L = _link_from_args(args)
    try:
        p = [int(x) for x in args.p.split(",")]
    except ValueError:
        raise UsageError(f"bad framing {args.p!r}") from None
    f = SurgeryFraming(p, L.l)
    record = {"command": "surgery", "link": link_record(L), "p": p, "det": det_lambda(f),
              "positive_cone": is_positive_cone(f)}
    record["description"] = surgery_description(L, p).as_dict() if p[0] == L.l else None
    _out(args, emit(record))
    return 0


def cmd_chi(args):
    L = _link_from_args(args)
    if args.grading:
        v = Grading.parse(args.grading)
        _out(args, emit({"command": "chi", "link": link_record(L), "grading": grading_record(v),
                         "chi": chi_at_grading(L, v)}))
    else:
        poly = multivariable_chi(L) if L.r > 1 else None
        text = format_laurent(poly) if poly is not None else str(L.companion_cable.chi)
        _out(args, emit({"command": "chi", "link": link_record(L), "chi": text}))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="cablefloer", description="Link Floer homology of L-space cable links")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="diagonal h(k) and beta(k)")
    _add_link_args(p)
    p.add_argument("--window", help="A:B in actual grading values")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_profile)

    for name, func in (("hfl", cmd_hfl), ("hflhat", cmd_hflhat)):
        p = sub.add_parser(name, help=f"{'HFL-hat' if name == 'hflhat' else 'HFL^-'} at one grading")
        _add_link_args(p)
        p.add_argument("--grading", required=True, help="comma separated, e.g. 1/2,-3/2")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("table", help="grading-family table for a preset")
    p.add_argument("--preset", required=True)
    p.add_argument("--window")
    p.add_argument("--format", choices=["tsv", "json", "svg"], default="tsv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decompose", help="R-module decomposition")
    _add_link_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="compare closed formulas with the F2 oracle")
    _add_link_args(p)
    p.add_argument("--window")
    p.add_argument("--hat", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("surgery", help="linking matrix determinant and surgery description")
    _add_link_args(p)
    p.add_argument("--p", required=True, help="p1,p2,...")
    p.add_argument("--out")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("chi", help="Euler characteristic")
    _add_link_args(p)
    p.add_argument("--grading")
    p.add_argument("--out")
    p.set_defaults(func=cmd_chi)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedRegime as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CableFloerError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
