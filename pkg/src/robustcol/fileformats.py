"""Line-oriented text formats: graphs, certificates and annotation sidecars.

All formats number vertices from 1; lines starting with ``c`` are comments.

Graph (DIMACS-like)::

    p edge <n> <m>
    e <u> <v>            (m lines)

Colouring certificate::

    robust-coloring <n>
    s <v> <u>            f(v) = {v, u}
    col <v> <block>      blocks numbered from 1
    m <key> <value...>   optional metadata

Independence certificate: header ``robust-independence <n>``, the same
``s`` and ``m`` lines, and ``u <v>`` member lines.

Annotation sidecar: ``a <vertex> <label>`` lines.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import ParseError
from .graph import Graph, Selection, build_graph, norm_edge
from .oracle import RobustColoringCertificate, RobustIndependenceCertificate


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if tok and tok[0] != "c":
            yield lineno, tok


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, tok in _lines(text):
        if tok[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: second problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError(f"line {lineno}: malformed header, expected 'p edge <n> <m>'")
            n, m = _int(tok[2], lineno), _int(tok[3], lineno)
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative count in header")
        elif tok[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before header")
            if len(tok) != 3:
                raise ParseError(f"line {lineno}: malformed edge line")
            edges.append((lineno, _int(tok[1], lineno), _int(tok[2], lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown line type {tok[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    seen = set()
    for lineno, u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        if norm_edge(u, v) in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add(norm_edge(u, v))
    return build_graph(n, [(u - 1, v - 1) for _, u, v in edges])


def format_graph(G: Graph, comments: Sequence[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p edge {G.n} {G.m}")
    out += [f"e {u + 1} {v + 1}" for u, v in G.edge_list]
    return "\n".join(out) + "\n"


def _selection_lines(sel: Selection) -> list[str]:
    out = []
    for v, es in sel.choice.items():
        for a, b in es:
            u = b if a == v else a
            out.append(f"s {v + 1} {u + 1}")
    return out


def _meta_lines(meta) -> list[str]:
    return [f"m {k} {v}" for k, v in sorted(meta.items())]


def format_coloring_certificate(n: int, cert: RobustColoringCertificate) -> str:
    out = [f"robust-coloring {n}"]
    out += _meta_lines(cert.meta)
    out += _selection_lines(cert.selection)
    for b, part in enumerate(cert.parts, start=1):
        out += [f"col {v + 1} {b}" for v in part]
    return "\n".join(out) + "\n"


def format_independence_certificate(n: int, cert: RobustIndependenceCertificate) -> str:
    out = [f"robust-independence {n}"]
    out += _meta_lines(cert.meta)
    out += _selection_lines(cert.selection)
    out += [f"u {v + 1}" for v in cert.subset]
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> tuple[int, RobustColoringCertificate | RobustIndependenceCertificate]:
    """Parse either certificate kind; returns the declared vertex count too.

    Structural problems (a vertex in two blocks, two selected edges at one
    vertex, a selected non-edge) are kept as written so the verifier can
    report them; only unreadable text raises :class:`ParseError`.
    """
    kind = n = None
    picks: dict[int, list[tuple[int, int]]] = {}
    blocks: dict[int, list[int]] = {}
    members: list[int] = []
    meta: dict[str, str] = {}
    for lineno, tok in _lines(text):
        head = tok[0]
        if head in ("robust-coloring", "robust-independence"):
            if kind is not None:
                raise ParseError(f"line {lineno}: second header")
            if len(tok) != 2:
                raise ParseError(f"line {lineno}: malformed header")
            kind, n = head, _int(tok[1], lineno)
            continue
        if kind is None:
            raise ParseError(f"line {lineno}: content before header")
        if head == "s" and len(tok) == 3:
            v, u = _int(tok[1], lineno) - 1, _int(tok[2], lineno) - 1
            if u == v:
                raise ParseError(f"line {lineno}: selection of a loop")
            picks.setdefault(v, []).append(norm_edge(v, u))
        elif head == "col" and len(tok) == 3 and kind == "robust-coloring":
            blocks.setdefault(_int(tok[2], lineno), []).append(_int(tok[1], lineno) - 1)
        elif head == "u" and len(tok) == 2 and kind == "robust-independence":
            members.append(_int(tok[1], lineno) - 1)
        elif head == "m" and len(tok) >= 3:
            meta[tok[1]] = " ".join(tok[2:])
        else:
            raise ParseError(f"line {lineno}: unexpected {' '.join(tok)!r}")
    if kind is None:
        raise ParseError("missing certificate header")
    sel = Selection({v: tuple(es) for v, es in picks.items()})
    if kind == "robust-coloring":
        parts = tuple(tuple(blocks[b]) for b in sorted(blocks))
        return n, RobustColoringCertificate(sel, parts, meta)
    # members stay a tuple so repeated vertices reach the verifier
    return n, RobustIndependenceCertificate(sel, tuple(members), meta)


def format_annotations(labels: Sequence[str]) -> str:
    return "".join(f"a {v + 1} {lab}\n" for v, lab in enumerate(labels))


def parse_annotations(text: str) -> dict[int, str]:
    out = {}
    for lineno, tok in _lines(text):
        if tok[0] != "a" or len(tok) < 3:
            raise ParseError(f"line {lineno}: expected 'a <vertex> <label>'")
        out[_int(tok[1], lineno) - 1] = " ".join(tok[2:])
    return out
