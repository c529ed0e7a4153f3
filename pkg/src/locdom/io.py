"""Instance files and DOT export.

An instance file holds the vertex count on the first content line and one
``u v`` arc per following line.  Lines starting with ``#`` and blank lines
are skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .digraph import Digraph, build_digraph
from .errors import InputError, ParseError


def parse_instance(text: str) -> Digraph:
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise ParseError(f"line {lineno}: header must be a single non-negative vertex count")
            n = values[0]
            continue
        if len(values) != 2:
            raise ParseError(f"line {lineno}: arc line needs exactly two ids, got {line!r}")
        u, v = values
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: arc ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {lineno}: loop at vertex {u}")
        arcs.append((u, v))
    if n is None:
        raise ParseError("missing header line with the vertex count")
    try:
        return build_digraph(n, arcs)
    except InputError as exc:
        raise ParseError(str(exc)) from None


def read_instance(path: str | Path) -> Digraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def render_instance(d: Digraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(d.n))
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def render_dot(d: Digraph, members: Iterable[int] = (), name: str = "D") -> str:
    """DOT text with the given set drawn as filled double circles."""
    chosen = set(members)
    out = [f"digraph {name} {{"]
    for v in d.vertices:
        if v in chosen:
            out.append(f'  {v} [shape=doublecircle, style=filled, fillcolor=lightgrey, in_set="true"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -> {v};" for u, v in d.arcs)
    out.append("}")
    return "\n".join(out) + "\n"
