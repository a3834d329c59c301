"""Text formats: graphs (edge list, matrix CSV, JSON), complex matrices and
signals.

Numbers are written with 17 significant digits (``%.17g``) so every float
round-trips bit for bit.  A complex value with nonzero imaginary part is the
single token ``re+imj``.
"""

import json
import math
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, InvalidSize, NonFiniteWeight, ParseError
from .graph import Graph, graph_from_edge_list

GRAPH_FORMATS = ("edges", "csv", "json")


def fmt_real(x):
    return "%.17g" % x


def fmt_complex(z):
    z = complex(z)
    if z.imag == 0:
        return fmt_real(z.real)
    return "%.17g%+.17gj" % (z.real, z.imag)


def parse_number(token, line=None, field=None):
    tok = token.strip()
    try:
        z = complex(tok.replace(" ", ""))
    except ValueError:
        raise ParseError(f"not a number: {tok!r}", line=line, field=field) from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"non-finite number: {tok!r}", line=line, field=field)
    return z


def parse_int(token, line=None, field=None):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", line=line, field=field) from None


def _content_lines(text):
    """Yield ``(line_number, stripped_text)`` with comments and blanks removed."""
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body


def _as_text(source):
    if isinstance(source, (bytes, bytearray)):
        try:
            return source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if hasattr(source, "read"):
        return _as_text(source.read())
    return source


# -- graphs ---------------------------------------------------------------


def _load_edges(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty edge list: missing 'n=<int>' header", line=1)
    hno, header = lines[0]
    opts = {}
    for tok in header.split():
        key, sep, val = tok.partition("=")
        if not sep:
            raise ParseError(f"expected key=value, got {tok!r}", line=hno, field=tok)
        opts[key] = val
    if "n" not in opts:
        raise ParseError("header lacks 'n=<int>'", line=hno, field="n")
    unknown = set(opts) - {"n", "directed"}
    if unknown:
        raise ParseError(f"unknown header keys {sorted(unknown)}", line=hno)
    n = parse_int(opts["n"], line=hno, field="n")
    directed = opts.get("directed", "true").lower()
    if directed not in ("true", "false"):
        raise ParseError(f"directed must be true/false, got {directed!r}", line=hno, field="directed")
    edges = []
    for no, body in lines[1:]:
        parts = body.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'src dst [weight]', got {body!r}", line=no)
        src = parse_int(parts[0], line=no, field="src")
        dst = parse_int(parts[1], line=no, field="dst")
        w = parse_number(parts[2], line=no, field="weight") if len(parts) == 3 else 1.0
        edges.append((src, dst, w))
        if directed == "false" and src != dst:
            edges.append((dst, src, w))
    return graph_from_edge_list(n, edges)


def _save_edges(graph):
    a = graph.adjacency
    out = [f"n={graph.n} directed=true"]
    for src in range(graph.n):
        for dst in range(graph.n):
            if a[dst, src] != 0:
                out.append(f"{src} {dst} {fmt_complex(a[dst, src])}")
    return "\n".join(out) + "\n"


def _load_csv(text):
    rows = []
    for no, body in _content_lines(text):
        rows.append([parse_number(tok, line=no, field=f"col {c}") for c, tok in enumerate(body.split(","))])
    if not rows:
        raise ParseError("empty matrix", line=1)
    n = len(rows)
    for r, row in enumerate(rows):
        if len(row) != n:
            raise DimensionMismatch(f"row {r} has {len(row)} entries, expected {n}", indices=[r])
    return Graph(np.array(rows, dtype=np.complex128))


def _save_csv(graph):
    return "".join(",".join(fmt_complex(z) for z in row) + "\n" for row in graph.adjacency)


def _json_number(w):
    w = complex(w)
    return w.real if w.imag == 0 else [w.real, w.imag]


def _load_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("JSON graph needs keys 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError("'n' must be an integer", field="n")
    edges = []
    for k, e in enumerate(doc["edges"]):
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise ParseError(f"edge {k} must be [src, dst, weight]", field=f"edges[{k}]")
        w = e[2] if len(e) == 3 else 1.0
        if isinstance(w, list):
            if len(w) != 2:
                raise ParseError(f"edge {k}: complex weight must be [re, im]", field=f"edges[{k}]")
            w = complex(w[0], w[1])
        if not all(isinstance(i, int) and not isinstance(i, bool) for i in e[:2]) or not isinstance(
            w, (int, float, complex)
        ):
            raise ParseError(f"edge {k} has non-numeric fields", field=f"edges[{k}]")
        if not np.isfinite(w):
            raise NonFiniteWeight(f"edge {k}: non-finite weight", indices=[k])
        edges.append((e[0], e[1], w))
    return graph_from_edge_list(n, edges)


def _save_json(graph):
    a = graph.adjacency
    edges = [
        [src, dst, _json_number(a[dst, src])]
        for src in range(graph.n)
        for dst in range(graph.n)
        if a[dst, src] != 0
    ]
    return json.dumps({"n": graph.n, "edges": edges}) + "\n"


_LOADERS = {"edges": _load_edges, "csv": _load_csv, "json": _load_json}
_SAVERS = {"edges": _save_edges, "csv": _save_csv, "json": _save_json}


def load_graph(source, fmt="edges"):
    """Parse a graph from text, bytes or a readable file object."""
    if fmt not in _LOADERS:
        raise ValueError(f"format must be one of {GRAPH_FORMATS}")
    return _LOADERS[fmt](_as_text(source))


def save_graph(graph, fmt="edges"):
    if fmt not in _SAVERS:
        raise ValueError(f"format must be one of {GRAPH_FORMATS}")
    return _SAVERS[fmt](graph)


def guess_format(path):
    suffix = Path(path).suffix.lower()
    return {".csv": "csv", ".json": "json"}.get(suffix, "edges")


def read_graph(path, fmt=None):
    return load_graph(Path(path).read_text(encoding="utf-8"), fmt or guess_format(path))


# -- matrices and signals -------------------------------------------------


def matrix_to_dict(m):
    m = np.asarray(m, dtype=np.complex128)
    return {"rows": m.shape[0], "cols": m.shape[1], "re": m.real.tolist(), "im": m.imag.tolist()}


def matrix_from_dict(doc):
    re = np.asarray(doc["re"], dtype=float)
    im = np.asarray(doc["im"], dtype=float)
    shape = (doc["rows"], doc["cols"])
    if re.shape != shape or im.shape != shape:
        raise DimensionMismatch(f"matrix parts do not match declared shape {shape}")
    return re + 1j * im


def real_matrix_csv(m, header=""):
    return header + "".join(",".join(fmt_real(v) for v in row) + "\n" for row in np.asarray(m))


def write_matrix_csv(m, stem, header=""):
    """Write ``<stem>.re.csv`` and ``<stem>.im.csv``; return both paths."""
    m = np.asarray(m, dtype=np.complex128)
    stem = Path(stem)
    paths = (stem.with_name(stem.name + ".re.csv"), stem.with_name(stem.name + ".im.csv"))
    paths[0].write_text(real_matrix_csv(m.real, header), encoding="utf-8")
    paths[1].write_text(real_matrix_csv(m.imag, header), encoding="utf-8")
    return paths


def read_matrix_csv(stem):
    stem = Path(stem)
    parts = []
    for suffix in (".re.csv", ".im.csv"):
        text = stem.with_name(stem.name + suffix).read_text(encoding="utf-8")
        rows = [
            [parse_number(t, line=no).real for t in body.split(",")]
            for no, body in _content_lines(text)
        ]
        parts.append(np.array(rows, dtype=float))
    if parts[0].shape != parts[1].shape:
        raise DimensionMismatch("real and imaginary parts differ in shape")
    return parts[0] + 1j * parts[1]


def parse_values(text, real=False):
    """Numbers separated by newlines, commas or whitespace; ``#`` starts a comment."""
    vals = []
    for no, body in _content_lines(_as_text(text)):
        for k, tok in enumerate(body.replace(",", " ").split()):
            z = parse_number(tok, line=no, field=f"value {k}")
            if real and z.imag != 0:
                raise ParseError(f"expected a real number, got {tok!r}", line=no, field=f"value {k}")
            vals.append(z.real if real else z)
    if not vals:
        raise ParseError("no values found", line=1)
    return np.array(vals, dtype=float if real else np.complex128)


def format_values(v):
    return "".join(fmt_complex(z) + "\n" for z in np.asarray(v))


def read_points(text):
    """Sample points, one per line; must be strictly increasing."""
    t = parse_values(text, real=True)
    if t.size < 2:
        raise InvalidSize(f"need at least two sample points, got {t.size}")
    bad = np.flatnonzero(np.diff(t) <= 0)
    if bad.size:
        i = int(bad[0]) + 1
        raise ParseError(
            f"sample points not strictly increasing at index {i}", field=f"point {i}", indices=[i]
        )
    return t
