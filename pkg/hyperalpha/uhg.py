"""
Plain-text ".uhg" hypergraph format.

    # comment lines and blank lines are ignored
    k n m
    v1 v2 ... vk      (m lines, 1-based vertex ids)

`format_uhg` writes the canonical form (header + sorted edges, no comments), so
`format_uhg(parse_uhg(text)) == text` for canonical input.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .hypergraph import Hypergraph, build


def _meaningful_lines(text: str) -> list[tuple[int, list[str]]]:
    out: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        out.append((lineno, s.split()))
    return out


def _ints(tokens: list[str], *, line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line=line) from None


def parse_uhg(text: str) -> Hypergraph:
    lines = _meaningful_lines(text)
    if not lines:
        raise ParseError("missing header 'k n m'", line=1)

    head_line, head = lines[0]
    if len(head) != 3:
        raise ParseError(f"header must be 'k n m', got {' '.join(head)!r}", line=head_line)
    k, n, m = _ints(head, line=head_line)
    if k < 2 or n < 1 or m < 0:
        raise ParseError(f"invalid header values k={k} n={n} m={m}", line=head_line)

    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else head_line)
        raise ParseError(f"header declares m={m} edges but found {len(body)}", line=where)

    first_seen: dict[tuple[int, ...], int] = {}
    edges: list[list[int]] = []
    for lineno, tokens in body:
        verts = _ints(tokens, line=lineno)
        if len(verts) != k or len(set(verts)) != k:
            raise ParseError(f"edge must list {k} distinct vertices, got {verts}", line=lineno)
        bad = [v for v in verts if v < 1 or v > n]
        if bad:
            raise ParseError(f"vertices outside 1..{n}: {bad}", line=lineno)
        key = tuple(sorted(verts))
        if key in first_seen:
            raise ParseError(
                f"duplicate edge {list(key)} (first seen on line {first_seen[key]})", line=lineno
            )
        first_seen[key] = lineno
        edges.append(verts)
    return build(n, k, edges)


def format_uhg(g: Hypergraph) -> str:
    lines = [f"{g.k} {g.n} {g.m}"]
    lines.extend(" ".join(str(v) for v in e) for e in g.edges)
    return "\n".join(lines) + "\n"


def read_uhg(path: str | Path) -> Hypergraph:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {p}: {e}") from e
    return parse_uhg(text)


def write_uhg(g: Hypergraph, path: str | Path) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(format_uhg(g), encoding="utf-8")
