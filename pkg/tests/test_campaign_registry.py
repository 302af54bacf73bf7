from __future__ import annotations

from pathlib import Path

import pytest


def _write(tmp_path: Path, lines: list[str]) -> Path:
    p = tmp_path / "verify.yaml"
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return p


def test_load_full_campaign(tmp_path: Path) -> None:
    from hyperalpha.reports.registry import load_campaign

    p = _write(
        tmp_path,
        [
            "version: 1",
            "seed: 42",
            "trials: 5",
            "n: [4, 7]",
            "k: [3, 4]",
            "alphas: [0.0, 0.5]",
            "suites: [soundness, ordering]",
            "tolerances: { soundness: 1.0e-7, product: 1.0e-5 }",
        ],
    )
    c = load_campaign(p)
    assert c.seed == 42
    assert c.trials == 5
    assert c.n_range == (4, 7)
    assert c.ks == (3, 4)
    assert c.alphas == (0.0, 0.5)
    assert c.suites == ("soundness", "ordering")
    assert c.soundness_tol == 1e-7
    assert c.product_tol == 1e-5
    assert c.improvement_tol is None


def test_scalar_n_and_k(tmp_path: Path) -> None:
    from hyperalpha.reports.registry import load_campaign

    c = load_campaign(_write(tmp_path, ["version: 1", "n: 6", "k: 3"]))
    assert c.n_range == (6, 6)
    assert c.ks == (3,)
    assert c.seed is None
    assert c.m_range is None


def test_edge_count_key(tmp_path: Path) -> None:
    from hyperalpha.reports.registry import load_campaign

    assert load_campaign(_write(tmp_path, ["version: 1", "m: [5, 9]"])).m_range == (5, 9)
    assert load_campaign(_write(tmp_path, ["version: 1", "m: 7"])).m_range == (7, 7)
    with pytest.raises(ValueError, match="'m'"):
        load_campaign(_write(tmp_path, ["version: 1", "m: [9, 5]"]))


@pytest.mark.parametrize(
    "lines, message",
    [
        (["version: 2"], "version"),
        (["seed: 1"], "version"),
        (["version: 1", "seeds: 1"], "seeds"),
        (["version: 1", "suites: [soundness, nope]"], "nope"),
        (["version: 1", "n: [7, 4]"], "'n'"),
        (["version: 1", "alphas: [1.0]"], "alphas"),
        (["version: 1", "trials: many"], "trials"),
        (["version: 1", "tolerances: { soundness: -1 }"], "soundness"),
        (["version: 1", "tolerances: { speed: 1 }"], "speed"),
    ],
)
def test_invalid_campaigns_name_the_problem(tmp_path: Path, lines: list[str], message: str) -> None:
    from hyperalpha.reports.registry import load_campaign

    with pytest.raises(ValueError, match=message):
        load_campaign(_write(tmp_path, lines))


def test_missing_campaign_file(tmp_path: Path) -> None:
    from hyperalpha.reports.registry import load_campaign

    with pytest.raises(FileNotFoundError):
        load_campaign(tmp_path / "absent.yaml")


def test_example_campaign_loads() -> None:
    from hyperalpha.reports.registry import load_campaign

    p = Path(__file__).resolve().parent.parent / "data" / "verify.example.yaml"
    c = load_campaign(p)
    assert c.seed is not None
    assert c.suites
