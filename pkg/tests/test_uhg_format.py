from __future__ import annotations

from pathlib import Path

import pytest


def test_parse_ignores_comments_and_blank_lines() -> None:
    from hyperalpha.uhg import parse_uhg

    text = "# G1\n\n3 4 2\n  # edges follow\n1 2 3\n4 2 1\n"
    g = parse_uhg(text)
    assert (g.k, g.n, g.m) == (3, 4, 2)
    assert g.edges == ((1, 2, 3), (1, 2, 4))


def test_format_is_canonical_and_reparses() -> None:
    from hyperalpha.hypergraph import complete
    from hyperalpha.uhg import format_uhg, parse_uhg

    canonical = "3 4 2\n1 2 3\n1 2 4\n"
    assert format_uhg(parse_uhg(canonical)) == canonical

    g = complete(5, 4)
    assert parse_uhg(format_uhg(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3 4\n1 2 3\n", 1),
        ("3 4 2\n1 2 3\n", 2),
        ("3 4 1\n1 2 x\n", 2),
        ("3 4 1\n\n1 2\n", 3),
        ("3 4 1\n1 2 9\n", 2),
        ("3 4 2\n1 2 3\n# dup\n3 1 2\n", 4),
        ("3 4 1\n1 2 3\n1 2 4\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text: str, line: int) -> None:
    from hyperalpha.errors import ParseError
    from hyperalpha.uhg import parse_uhg

    with pytest.raises(ParseError) as exc:
        parse_uhg(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_read_and_write_files(tmp_path: Path) -> None:
    from hyperalpha.hypergraph import build
    from hyperalpha.uhg import read_uhg, write_uhg

    g = build(4, 3, [[1, 2, 3], [1, 2, 4]])
    p = tmp_path / "nested" / "g1.uhg"
    write_uhg(g, p)
    assert p.read_text(encoding="utf-8") == "3 4 2\n1 2 3\n1 2 4\n"
    assert read_uhg(p) == g


def test_read_missing_file_is_a_parse_error(tmp_path: Path) -> None:
    from hyperalpha.errors import ParseError
    from hyperalpha.uhg import read_uhg

    with pytest.raises(ParseError):
        read_uhg(tmp_path / "missing.uhg")


def test_example_files_parse() -> None:
    from hyperalpha.uhg import read_uhg

    root = Path(__file__).resolve().parent.parent / "data" / "examples"
    g1 = read_uhg(root / "g1.uhg")
    assert g1.edges == ((1, 2, 3), (1, 2, 4))
    k33 = read_uhg(root / "k33.uhg")
    assert (k33.n, k33.m) == (3, 1)
    blocks = read_uhg(root / "two-blocks.uhg")
    assert (blocks.n, blocks.m) == (7, 8)
    assert blocks.degree(4) == 6
