"""Command-line front end.

Subcommands: map, unmap, count, enumerate, sample, classify, verify,
render.  Results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .bijection import inverse_parts, phi, phi_inverse, step_labels
from .counting import (
    count_delannoy,
    count_delannoy_by_e,
    count_kimberling,
    count_kimberling_by_vertices,
    enumerate_delannoy,
    enumerate_delannoy_by_e,
    enumerate_kimberling,
    enumerate_kimberling_by_vertices,
    sample_delannoy_stream,
    schroder,
)
from .geometry import (
    below_endpoint_chord,
    classify_d_counts,
    diagonal_flags,
    east_ends,
    is_subdiagonal_delannoy,
    is_subdiagonal_kimberling,
    preceding_d_counts,
)
from .harness import CHECKS, DEFAULT_N_MAX, run_checks
from .lattice_core import (
    KimberlingPath,
    LatticeError,
    central_index,
    make_kimberling,
    parse_step_word,
)
from .render import RenderSpec, render_pair

_COMPACT_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _vertex_json(kpath: KimberlingPath) -> str:
    return _dump([list(v) for v in kpath.vertices])


def _vertex_compact(kpath: KimberlingPath) -> str:
    return ";".join(f"({x},{y})" for x, y in kpath.vertices)


def parse_vertex_text(text: str) -> KimberlingPath:
    """Parse either a JSON vertex array or the compact "(x,y);(x,y);..." form."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise LatticeError(f"bad vertex JSON: {exc}") from None
        if not isinstance(data, list):
            raise LatticeError("vertex JSON must be an array of [x, y] pairs")
        return make_kimberling(data)
    pairs: list[tuple[int, int]] = []
    for chunk in stripped.split(";"):
        match = _COMPACT_PAIR_RE.fullmatch(chunk.strip())
        if not match:
            raise LatticeError(f"bad vertex {chunk.strip()!r}; expected (x,y)")
        pairs.append((int(match.group(1)), int(match.group(2))))
    return make_kimberling(pairs)


def _cmd_map(args: argparse.Namespace) -> int:
    path = parse_step_word(args.word)
    n, k = central_index(path)
    image = phi(path)
    if args.debug:
        labels = step_labels(path)
        payload = {
            "vertices": [list(v) for v in image.vertices],
            "n": n,
            "k": k,
            "labels": {
                "north": list(labels.a_labels),
                "east": list(labels.b_labels),
                "diagonal": list(labels.c_labels),
            },
        }
        print(_dump(payload))
    elif args.compact:
        print(_vertex_compact(image))
    else:
        print(_vertex_json(image))
    print(f"n={n} k={k}", file=sys.stderr)
    return 0


def _cmd_unmap(args: argparse.Namespace) -> int:
    kpath = parse_vertex_text(args.vertices)
    word = phi_inverse(kpath)
    n, k = central_index(word)
    if args.debug:
        a, b, c, merged = inverse_parts(kpath)
        payload = {
            "word": word.word,
            "n": n,
            "k": k,
            "A": a,
            "B": b,
            "C": c,
            "merged": [str(t) for t in merged],
        }
        print(_dump(payload))
    else:
        print(word.word)
    print(f"n={n} k={k}", file=sys.stderr)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    if args.family == "delannoy":
        if args.n is None:
            raise LatticeError("count delannoy requires --n")
        value = count_delannoy(args.n) if args.k is None else count_delannoy_by_e(args.n, args.k)
    elif args.family == "kimberling":
        if args.i is None or args.j is None:
            raise LatticeError("count kimberling requires --i and --j")
        if args.k is None:
            value = count_kimberling(args.i, args.j)
        else:
            value = count_kimberling_by_vertices(args.i, args.j, args.k)
    else:
        if args.n is None:
            raise LatticeError("count schroder requires --n")
        value = schroder(args.n)
    print(value)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.family == "delannoy":
        if args.n is None:
            raise LatticeError("enumerate delannoy requires --n")
        if args.k_only is None:
            stream = enumerate_delannoy(args.n)
        else:
            stream = enumerate_delannoy_by_e(args.n, args.k_only)
        for path in stream:
            if args.subdiagonal and not is_subdiagonal_delannoy(path):
                continue
            print(path.word)
    else:
        if args.i is None or args.j is None:
            raise LatticeError("enumerate kimberling requires --i and --j")
        if args.k_only is None:
            kstream = enumerate_kimberling(args.i, args.j)
        else:
            kstream = enumerate_kimberling_by_vertices(args.i, args.j, args.k_only)
        for kpath in kstream:
            if args.subdiagonal and not below_endpoint_chord(kpath):
                continue
            print(_vertex_compact(kpath) if args.compact else _vertex_json(kpath))
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.count < 0:
        raise LatticeError("--count must be >= 0")
    for path in sample_delannoy_stream(args.n, args.count, args.seed):
        print(path.word)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    path = parse_step_word(args.word)
    n, k = central_index(path)
    image = phi(path)
    flags = diagonal_flags(path)
    pairs = preceding_d_counts(path)
    ends = east_ends(path)
    interior = image.interior
    steps = []
    for i in range(k):
        before_north, before_east = pairs[i]
        steps.append(
            {
                "index": i + 1,
                "east_end": list(ends[i].point),
                "east_weakly_above": flags.east_weakly_above[i],
                "interior_vertex": list(interior[i]),
                "vertex_strictly_above": flags.vertex_strictly_above[i],
                "d_before_north": before_north,
                "d_before_east": before_east,
                "case": classify_d_counts(before_north, before_east),
            }
        )
    payload = {
        "word": path.word,
        "n": n,
        "k": k,
        "subdiagonal_delannoy": is_subdiagonal_delannoy(path),
        "subdiagonal_kimberling": is_subdiagonal_kimberling(image),
        "image_vertices": [list(v) for v in image.vertices],
        "east_steps": steps,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(CHECKS) if args.check == "all" else [args.check]
    reports = run_checks(names, n_max=args.n_max)
    if args.json:
        print(json.dumps({
            "passed": all(r.passed for r in reports),
            "reports": [r.to_json_dict() for r in reports],
        }, indent=2))
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            lo, hi = report.n_range
            print(
                f"{status} {report.check_name}: n={lo}..{hi} "
                f"cases={report.total_cases} failures={report.failure_count} "
                f"elapsed={report.elapsed_ms:.0f}ms"
            )
            for record in report.failures:
                print(f"  counterexample: {_dump(record)}")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_render(args: argparse.Namespace) -> int:
    path = parse_step_word(args.word)
    spec = RenderSpec(
        cell_size=args.cell,
        show_grid=not args.no_grid,
        show_diagonal=not args.no_diagonal,
        label_steps=args.labels,
    )
    svg = render_pair(path, spec)
    if args.out in (None, "-"):
        print(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
            handle.write("\n")
        print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delannoy-kit",
        description=(
            "Central E/N/D lattice paths, their vertex-path images, exact "
            "counting, and exhaustive verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_map = sub.add_parser("map", help="word in, image vertex list out")
    p_map.add_argument("word", help="step word over E/N/D (must be central)")
    p_map.add_argument("--debug", action="store_true", help="include step labels")
    p_map.add_argument("--compact", action="store_true", help="(x,y);... output")
    p_map.set_defaults(handler=_cmd_map)

    p_unmap = sub.add_parser("unmap", help="vertex list in, word out")
    p_unmap.add_argument("vertices", help='JSON [[x,y],...] or compact "(x,y);(x,y)"')
    p_unmap.add_argument("--debug", action="store_true",
                         help="include the A/B/C extraction and merged sequence")
    p_unmap.set_defaults(handler=_cmd_unmap)

    p_count = sub.add_parser("count", help="exact path counts")
    p_count.add_argument("family", choices=["delannoy", "kimberling", "schroder"])
    p_count.add_argument("--n", type=int)
    p_count.add_argument("--i", type=int)
    p_count.add_argument("--j", type=int)
    p_count.add_argument("--k", type=int)
    p_count.set_defaults(handler=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="stream every path, one per line")
    p_enum.add_argument("family", choices=["delannoy", "kimberling"])
    p_enum.add_argument("--n", type=int)
    p_enum.add_argument("--i", type=int)
    p_enum.add_argument("--j", type=int)
    p_enum.add_argument("--k-only", type=int, dest="k_only",
                        help="restrict to k East steps / k interior vertices")
    p_enum.add_argument("--subdiagonal", action="store_true",
                        help="keep only paths weakly below their endpoint chord")
    p_enum.add_argument("--compact", action="store_true")
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_sample = sub.add_parser("sample", help="uniform random central paths")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--count", type=int, default=1)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.set_defaults(handler=_cmd_sample)

    p_classify = sub.add_parser("classify", help="diagonal geometry of one word")
    p_classify.add_argument("--word", required=True)
    p_classify.set_defaults(handler=_cmd_classify)

    p_verify = sub.add_parser("verify", help="run the exhaustive verification sweeps")
    p_verify.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, dest="n_max")
    p_verify.add_argument("--check", choices=sorted(CHECKS) + ["all"], default="all")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(handler=_cmd_verify)

    p_render = sub.add_parser("render", help="SVG of a word and its image path")
    p_render.add_argument("--word", required=True)
    p_render.add_argument("--out", help="output file (default stdout)")
    p_render.add_argument("--cell", type=int, default=40, help="pixels per lattice unit")
    p_render.add_argument("--no-grid", action="store_true", dest="no_grid")
    p_render.add_argument("--no-diagonal", action="store_true", dest="no_diagonal")
    p_render.add_argument("--labels", action="store_true", help="label E/N steps")
    p_render.set_defaults(handler=_cmd_render)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except (LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
