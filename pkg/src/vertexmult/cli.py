"""Command-line front end.

Subcommands::

    demo     vertex multiplication bundle for a demo graph (g1, g2, g3)
    compute  the same bundle for a graph read from disk
    coords   scalar vertex coordinates
    gft      forward / inverse graph Fourier transform of a signal
    diff     derivative of samples taken on an irregular periodic grid

Exit status is 0 on success, 1 for bad input or usage, 2 when the graph or
data violate a mathematical precondition.  Errors are reported on stderr as
``{"error": CODE, "detail": ..., "indices": [...]}``.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .duality import (
    NORMS,
    PERTURB_EPS,
    ZERO_FREQ_POLICIES,
    SamplingGrid,
    coordinates,
    differential_operator,
    normalized_coordinates,
    vertex_multiplication,
    vm_apply,
)
from .errors import InputError, InvalidGrid, ParseError, VertexMultError
from .gft import EPS_FREQ, gft, igft, order_and_normalize
from .graph import as_signal, demo_graph
from .spectral import spectral_decompose


class UsageError(InputError):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (np.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text!r}")
    return v


def _add_graph_source(p, demo_only=False):
    if not demo_only:
        p.add_argument("--graph", type=Path, help="graph file")
        p.add_argument("--format", choices=io.GRAPH_FORMATS, help="graph file format (default: from suffix)")
    p.add_argument("--kind", choices=("g1", "g2", "g3"), type=str.lower, help="demo graph")
    p.add_argument("--n", type=int, default=8, help="vertex count for --kind (default 8)")


def _add_vm_flags(p):
    p.add_argument("--eps-freq", type=_positive, default=EPS_FREQ)
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.add_argument("--zero-freq-policy", choices=ZERO_FREQ_POLICIES, default="error")
    p.add_argument("--perturb-eps", type=_positive, default=PERTURB_EPS)


def build_parser():
    parser = _Parser(prog="vertexmult", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("demo", help="bundle for a demo graph")
    _add_graph_source(p, demo_only=True)
    _add_vm_flags(p)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("compute", help="bundle for a graph file")
    _add_graph_source(p)
    _add_vm_flags(p)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("coords", help="scalar vertex coordinates")
    _add_graph_source(p)
    _add_vm_flags(p)
    p.add_argument("--norm", choices=tuple(NORMS), default="l1")
    p.add_argument("--normalize", action="store_true", help="add the column mapped onto [0, n-1]")
    p.add_argument("--out", type=Path, help="output directory (default: stdout)")

    p = sub.add_parser("gft", help="graph Fourier transform of a signal")
    _add_graph_source(p)
    p.add_argument("--signal", type=Path, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--eps-freq", type=_positive, default=EPS_FREQ)
    p.add_argument("--tol", type=_positive, default=1e-9)
    p.add_argument("--out", type=Path, help="output directory (default: stdout)")

    p = sub.add_parser("diff", help="derivative on a periodic sampling grid")
    p.add_argument("--points", type=Path, required=True, help="sample points, one per line")
    p.add_argument("--period", type=_positive, required=True)
    p.add_argument("--signal", type=Path, required=True)
    p.add_argument("--out", type=Path, help="output directory (default: stdout)")
    return parser


def _graph(args):
    if getattr(args, "graph", None) is not None:
        if args.kind is not None:
            raise UsageError("give either --graph or --kind, not both")
        return io.read_graph(args.graph, args.format)
    if args.kind is None:
        raise UsageError("a graph is required: --graph PATH or --kind {g1,g2,g3}")
    return demo_graph(args.kind, args.n)


def _vm(graph, args):
    return vertex_multiplication(
        graph,
        eps_freq=args.eps_freq,
        tol=args.tol,
        zero_freq_policy=args.zero_freq_policy,
        perturb_eps=args.perturb_eps,
    )


def _label_header(vm, norm="l1"):
    notes = []
    if not vm.is_paper:
        notes.append(f"zero-freq-policy={vm.policy}")
    if norm != "l1":
        notes.append(f"norm={norm}")
    return f"# non-paper: {' '.join(notes)}\n" if notes else ""


def _emit(text, out, name):
    if out is None:
        sys.stdout.write(text)
    else:
        out.mkdir(parents=True, exist_ok=True)
        (out / name).write_text(text, encoding="utf-8")


def write_bundle(vm, out):
    """Ug.json, Ug.re.csv, Ug.im.csv, coords.csv and y.csv (U applied to all-ones)."""
    out.mkdir(parents=True, exist_ok=True)
    raw = coordinates(vm, "l1")
    norm = normalized_coordinates(raw)
    y = vm_apply(vm, np.ones(vm.n))
    header = _label_header(vm)
    doc = {
        "n": vm.n,
        "U": io.matrix_to_dict(vm.matrix),
        "coords_l1": raw.tolist(),
        "coords_norm": norm.tolist(),
        "omegas": vm.spectrum.omegas.tolist(),
        "policy": vm.policy,
        "label": "paper" if vm.is_paper else "non-paper",
    }
    if vm.policy == "perturb":
        doc["perturb_eps"] = vm.extras["perturb_eps"]
    (out / "Ug.json").write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    io.write_matrix_csv(vm.matrix, out / "Ug", header)
    rows = [header + "vertex,l1,normalized\n"]
    rows += [f"{i},{io.fmt_real(c)},{io.fmt_real(cn)}\n" for i, (c, cn) in enumerate(zip(raw, norm))]
    (out / "coords.csv").write_text("".join(rows), encoding="utf-8")
    rows = [header + "vertex,re,im,abs\n"]
    rows += [
        f"{i},{io.fmt_real(v.real)},{io.fmt_real(v.imag)},{io.fmt_real(abs(v))}\n"
        for i, v in enumerate(y)
    ]
    (out / "y.csv").write_text("".join(rows), encoding="utf-8")


def cmd_demo(args):
    if args.kind is None:
        raise UsageError("demo needs --kind {g1,g2,g3}")
    if args.n < 4:
        raise UsageError(f"demo needs --n >= 4, got {args.n}")
    write_bundle(_vm(demo_graph(args.kind, args.n), args), args.out)


def cmd_compute(args):
    write_bundle(_vm(_graph(args), args), args.out)


def cmd_coords(args):
    vm = _vm(_graph(args), args)
    raw = coordinates(vm, args.norm)
    header = _label_header(vm, args.norm)
    if args.normalize:
        norm = normalized_coordinates(raw)
        body = "vertex,raw,normalized\n" + "".join(
            f"{i},{io.fmt_real(c)},{io.fmt_real(cn)}\n" for i, (c, cn) in enumerate(zip(raw, norm))
        )
    else:
        body = "vertex,raw\n" + "".join(f"{i},{io.fmt_real(c)}\n" for i, c in enumerate(raw))
    _emit(header + body, args.out, "coords.csv")


def cmd_gft(args):
    graph = _graph(args)
    x = io.parse_values(args.signal.read_text(encoding="utf-8"))
    as_signal(x, graph.n)
    spectrum = order_and_normalize(spectral_decompose(graph.adjacency, args.tol), args.eps_freq)
    result = igft(spectrum, x) if args.inverse else gft(spectrum, x)
    _emit(io.format_values(result), args.out, "x.csv" if args.inverse else "xt.csv")


def cmd_diff(args):
    t = io.read_points(args.points.read_text(encoding="utf-8"))
    try:
        grid = SamplingGrid.from_points(t, args.period)
    except InvalidGrid as exc:
        raise ParseError(exc.detail, field="points", indices=exc.indices) from None
    x = as_signal(io.parse_values(args.signal.read_text(encoding="utf-8")), grid.n)
    _emit(io.format_values(differential_operator(grid) @ x), args.out, "dx.csv")


COMMANDS = {
    "demo": cmd_demo,
    "compute": cmd_compute,
    "coords": cmd_coords,
    "gft": cmd_gft,
    "diff": cmd_diff,
}


def _fail(err):
    sys.stderr.write(json.dumps(err.to_dict()) + "\n")
    return err.exit_code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args)
    except VertexMultError as err:
        return _fail(err)
    except OSError as exc:
        return _fail(UsageError(f"{type(exc).__name__}: {exc}"))
    return 0


if __name__ == "__main__":
    sys.exit(main())
