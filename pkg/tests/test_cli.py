import json

import pytest
from click.testing import CliRunner

from elliptic_moments import __version__
from elliptic_moments.cli import cli
from elliptic_moments.models.polynomial import MomentPolynomial
from elliptic_moments.schema.output_schemas import output_record_schema
from elliptic_moments.services.montecarlo_service import MonteCarloService


def _run(*args: str):
    return CliRunner().invoke(cli, list(args))


def _record(*args: str) -> dict:
    result = _run(*args, "--format", "json")
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_version() -> None:
    result = _run("--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_moment_json() -> None:
    record = _record("moment", "--n", "6", "--m", "2")
    assert record["command"] == "moment"
    assert record["result"]["polynomial"]["coefficients"] == {"2": "9", "4": "5"}
    assert record["provenance"] == {"version": __version__, "seed": None}


def test_moment_exact_value() -> None:
    record = _record("moment", "--n", "6", "--m", "2", "--rho", "1/2")
    assert record["result"]["value"] == "41/16"


def test_moment_text_and_csv() -> None:
    text = _run("moment", "--n", "6", "--m", "2")
    assert text.exit_code == 0
    assert "9ρ² + 5ρ⁴" in text.stdout
    csv = _run("moment", "--n", "6", "--m", "2", "--format", "csv")
    assert csv.exit_code == 0
    assert csv.stdout.splitlines()[0] == "polynomial"


def test_moment_rejects_bad_rho() -> None:
    result = _run("moment", "--n", "2", "--m", "2", "--rho", "half")
    assert result.exit_code == 2


def test_word_uses_oracle_for_non_block_words() -> None:
    record = _record("word", "--word", "xxdxdxdd")
    assert record["result"]["method"] == "oracle"
    assert record["result"]["polynomial"]["coefficients"] == {"0": "5", "2": "9"}


def test_word_closed_form_matches_forced_oracle() -> None:
    closed = _record("word", "--word", "xxxxxxdd")
    forced = _record("word", "--word", "xxxxxxdd", "--oracle")
    assert closed["result"]["method"] == "closed_form"
    assert forced["result"]["method"] == "oracle"
    assert closed["result"]["polynomial"] == forced["result"]["polynomial"]


def test_word_rejects_unknown_letters() -> None:
    assert _run("word", "--word", "xyd").exit_code == 2


def test_word_over_ceiling_exits_with_capacity_code(settings_env) -> None:
    settings_env(max_l=4)
    result = _run("word", "--word", "xdxdxd")
    assert result.exit_code == 3


def test_positional_json() -> None:
    record = _record("positional", "--M", "6", "--positions", "1,2,7,9")
    assert record["result"]["polynomial"]["coefficients"] == {"2": "70", "4": "62"}
    assert record["result"]["canonical"] == [1, 2, 7, 9]
    assert record["result"]["transforms"] == []
    assert record["result"]["ginibre"] == "0"


def test_positional_reports_transforms() -> None:
    record = _record("positional", "--M", "4", "--positions", "2,8")
    assert record["result"]["canonical"] == [1, 3]
    assert record["result"]["transforms"] == ["rotation"]


def test_positional_rejects_bad_positions() -> None:
    assert _run("positional", "--M", "2", "--positions", "1,9").exit_code == 2


def test_asymptotic_json() -> None:
    record = _record("asymptotic", "--q", "2", "--rho", "0.5", "--v", "100")
    result = record["result"]
    assert result["u"] == 200
    assert result["regime"] == "saddle"
    assert abs(result["ratio"] - 1.0) < 1e-3


def test_asymptotic_rejects_rho_at_one() -> None:
    assert _run("asymptotic", "--q", "2", "--rho", "1", "--v", "10").exit_code == 2


def test_asymptotic_sweep_csv() -> None:
    result = _run("asymptotic", "--q", "2", "--rho", "0.5", "--v", "1", "--sweep", "10,20", "--format", "csv")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].startswith("rho,n,m,exact,normalized,estimate,ratio")
    assert len(lines) == 3


def test_validate_passes() -> None:
    record = _record("validate", "--word", "xd", "--rho", "0.3", "--dim", "100", "--samples", "10", "--seed", "7")
    assert record["result"]["passed"] is True
    assert record["provenance"]["seed"] == "7"
    assert record["inputs"]["seed"] == 7


def test_validate_failure_exits_one(monkeypatch) -> None:
    monkeypatch.setattr(MonteCarloService, "exact_polynomial", staticmethod(lambda word: MomentPolynomial(coefficients={0: 5})))
    result = _run("validate", "--word", "xd", "--rho", "0.3", "--dim", "50", "--samples", "5", "--seed", "7")
    assert result.exit_code == 1


def test_validate_reports_drawn_seed() -> None:
    result = _run("validate", "--word", "xd", "--rho", "0.3", "--dim", "50", "--samples", "20")
    assert result.exit_code == 0
    assert "seed:" in result.output


def test_validate_requires_rho_or_sweep() -> None:
    assert _run("validate", "--word", "xd", "--seed", "1").exit_code == 2


def test_validate_sweep_json_rows() -> None:
    result = _run(
        "validate", "--word", "xd", "--sweep", "0,0.5", "--dim", "100", "--samples", "6", "--seed", "5",
        "--format", "json",
    )
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert [row["rho"] for row in rows] == [0.0, 0.5]
    assert all("z" in row for row in rows)


def test_json_record_loads_back() -> None:
    record = _record("moment", "--n", "4", "--m", "2", "--rho", "1/3")
    loaded = output_record_schema.load(record)
    assert loaded["command"] == "moment"
    assert loaded["provenance"]["version"] == __version__


def _reject_constant(token: str) -> None:
    raise ValueError(f"non-standard JSON token {token}")


def test_validate_sweep_json_is_strict_when_exact_vanishes() -> None:
    result = _run(
        "validate", "--word", "xxxd", "--sweep", "0", "--dim", "100", "--samples", "10", "--seed", "5",
        "--format", "json",
    )
    assert result.exit_code == 0, result.output
    rows = json.loads(result.stdout, parse_constant=_reject_constant)
    assert rows[0]["exact"] == 0.0
    assert rows[0]["ratio"] is None


@pytest.mark.parametrize("option, value", [("--dim", "0"), ("--samples", "0"), ("--samples", "1")])
def test_validate_rejects_degenerate_sizes(option: str, value: str) -> None:
    result = _run("validate", "--word", "xd", "--rho", "0.3", "--seed", "1", option, value)
    assert result.exit_code == 2


def test_asymptotic_negative_rho_carries_sign() -> None:
    record = _record("asymptotic", "--q", "2", "--rho", "-0.5", "--v", "101")
    result = record["result"]
    assert result["u"] == 202
    assert result["exact"] < 0 and result["estimate"] < 0
    assert abs(result["ratio"] - 1.0) < 1e-3


def test_asymptotic_rejects_rho_zero() -> None:
    assert _run("asymptotic", "--q", "2", "--rho", "0", "--v", "10").exit_code == 2
