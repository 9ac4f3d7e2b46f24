"""Text formats for signed graphs (``.sg``) and homomorphisms.

A graph file is a header ``sg N M`` followed by ``M`` lines ``u v sign``
with ``u < v`` and sign ``+`` or ``-``. Blank lines and ``#`` comments are
ignored.
"""

from __future__ import annotations

import hashlib
import re

from .graph import NEG, POS, SignedGraph, sign_symbol

FORMAT_TAG = "sg"
_SIGN_TOKENS = {"+": POS, "-": NEG, "−": NEG}
_INT = re.compile(r"0|[1-9][0-9]*\Z")


class FormatError(ValueError):
    pass


def _int(token: str, what: str, lineno: int) -> int:
    if not _INT.match(token):
        raise FormatError(f"line {lineno}: {what} {token!r} is not a non-negative integer")
    return int(token)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_signed_graph(text: str) -> SignedGraph:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("missing header") from None
    if len(header) != 3 or header[0] != FORMAT_TAG:
        raise FormatError(f"line {lineno}: malformed header, expected 'sg N M'")
    n = _int(header[1], "vertex count", lineno)
    m = _int(header[2], "edge count", lineno)

    edges = []
    seen = set()
    for lineno, fields in lines:
        if len(fields) != 3:
            raise FormatError(f"line {lineno}: edge record needs 'u v sign'")
        u = _int(fields[0], "vertex", lineno)
        v = _int(fields[1], "vertex", lineno)
        if u >= n or v >= n:
            raise FormatError(f"line {lineno}: vertex out of range for n={n}")
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        if u > v:
            raise FormatError(f"line {lineno}: edge endpoints must satisfy u < v")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        if fields[2] not in _SIGN_TOKENS:
            raise FormatError(f"line {lineno}: sign {fields[2]!r} is not + or -")
        seen.add((u, v))
        edges.append((u, v, _SIGN_TOKENS[fields[2]]))
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return SignedGraph(n, edges)


def emit_signed_graph(g: SignedGraph) -> str:
    lines = [f"{FORMAT_TAG} {g.n} {g.m}"]
    lines.extend(f"{u} {v} {sign_symbol(s)}" for u, v, s in g.edges())
    return "\n".join(lines) + "\n"


def graph_digest(g: SignedGraph) -> str:
    """SHA-256 hex digest of the canonical serialization."""
    return hashlib.sha256(emit_signed_graph(g).encode("utf-8")).hexdigest()


def read_graph(path) -> SignedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_signed_graph(fh.read())


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def emit_hom(hom, verified: bool | None = None) -> str:
    """One line ``v -> image switched|unswitched`` per source vertex."""
    lines = [
        f"{v} -> {x} {'switched' if v in hom.switches else 'unswitched'}"
        for v, x in enumerate(hom.mapping)
    ]
    if verified is not None:
        lines.append(f"# verified {'yes' if verified else 'no'}")
    return "\n".join(lines) + "\n"


def parse_hom(text: str):
    from .hom import SignedHom

    images = {}
    switches = set()
    for lineno, fields in _content_lines(text):
        if len(fields) != 4 or fields[1] != "->" or fields[3] not in ("switched", "unswitched"):
            raise FormatError(f"line {lineno}: expected 'v -> image switched|unswitched'")
        v = _int(fields[0], "vertex", lineno)
        if v in images:
            raise FormatError(f"line {lineno}: vertex {v} mapped twice")
        images[v] = _int(fields[2], "image", lineno)
        if fields[3] == "switched":
            switches.add(v)
    if sorted(images) != list(range(len(images))):
        raise FormatError("mapped vertices must be 0..n-1")
    return SignedHom(tuple(images[v] for v in range(len(images))), frozenset(switches))
