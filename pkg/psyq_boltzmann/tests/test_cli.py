import json
import shutil

import pytest
from click.testing import CliRunner

from psyq_boltzmann import __version__
from psyq_boltzmann.cli import cli
from psyq_boltzmann.config import data_path


@pytest.fixture
def runner():
    return CliRunner()


def data(name):
    return str(data_path(name))


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_validate_valid_psyquandle(runner):
    result = runner.invoke(cli, ["validate", data("alex5.psy")])
    assert result.exit_code == 0
    assert "✅ valid psyquandle, pI-adequate" in result.output


def test_validate_reports_failing_axioms(runner):
    result = runner.invoke(cli, ["validate", data("block3.psy")])
    assert result.exit_code == 1
    assert "invalid psyquandle" in result.output
    assert "axiom (iv.1) fails" in result.output


def test_validate_bad_file(runner, tmp_path):
    broken = tmp_path / "broken.psy"
    broken.write_text("n = 2\n1 1 | 1 1 | 1 1\n2 2 | 2 2 | 2 2 | 2 2\n")
    result = runner.invoke(cli, ["validate", str(broken)])
    assert result.exit_code == 2


def test_validate_with_weights(runner):
    result = runner.invoke(cli, ["validate", data("ex54.psy"), data("ex54.wgt")])
    assert result.exit_code == 0
    assert "✅ Boltzmann weight mod 6, pI-adequate pair" in result.output


def test_validate_weights_of_wrong_order(runner):
    result = runner.invoke(cli, ["validate", data("ex54.psy"), data("w42.wgt")])
    assert result.exit_code == 2


def test_invariant_counting_only(runner):
    result = runner.invoke(cli, ["invariant", "--catalog", "K1", "--psyquandle", data("alex5.psy")])
    assert result.exit_code == 0
    assert result.output.strip() == "Φ = 5"


def test_invariant_two_variable(runner):
    result = runner.invoke(
        cli,
        ["invariant", "--catalog", "K2", "--psyquandle", data("alex5.psy"), "--weights", data("w42.wgt"), "--two-variable"],
    )
    assert result.exit_code == 0
    assert result.output.strip() == "Φ = 5, polynomial = 5v^2"


def test_invariant_from_diagram_file_as_json(runner):
    result = runner.invoke(
        cli,
        ["invariant", "--diagram", data("K2.dgm"), "--psyquandle", data("alex5.psy"), "--weights", data("w42.wgt"), "--json"],
    )
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["counting_invariant"] == 5
    assert document["rendered"] == "5w^2"
    assert document["mode"] == "single"


def test_invariant_pseudoknot_needs_adequate_weights(runner):
    result = runner.invoke(
        cli,
        ["invariant", "--catalog", "K1", "--psyquandle", data("alex5.psy"), "--weights", data("w42.wgt"), "--pseudoknot"],
    )
    assert result.exit_code == 1
    assert "AdequacyError" in result.output


def test_invariant_rejects_invalid_psyquandle(runner):
    counting = runner.invoke(cli, ["invariant", "--catalog", "K1", "--psyquandle", data("block3.psy")])
    assert counting.exit_code == 1
    assert "AxiomError" in counting.output
    assert "Φ =" not in counting.output


def test_invariant_rejects_weights_failing_conditions(runner, tmp_path):
    broken = tmp_path / "broken.wgt"
    broken.write_text("mod 5\n" + "1 1 1 1 1\n" * 5 + "\n" + "0 0 0 0 0\n" * 5)
    result = runner.invoke(
        cli, ["invariant", "--catalog", "K1", "--psyquandle", data("alex5.psy"), "--weights", str(broken)]
    )
    assert result.exit_code == 1
    assert "WeightError" in result.output


def test_invariant_usage_errors(runner):
    both = runner.invoke(
        cli, ["invariant", "--catalog", "K1", "--diagram", data("K1.dgm"), "--psyquandle", data("alex5.psy")]
    )
    assert both.exit_code == 2
    neither = runner.invoke(cli, ["invariant", "--psyquandle", data("alex5.psy")])
    assert neither.exit_code == 2
    unknown = runner.invoke(cli, ["invariant", "--catalog", "granny", "--psyquandle", data("alex5.psy")])
    assert unknown.exit_code == 1


def test_cocycles(runner):
    result = runner.invoke(cli, ["cocycles", data("trivial2.psy"), "--mod", "2"])
    assert result.exit_code == 0
    assert result.output.startswith("# 32 weight pairs mod 2 ((i), (ii), (iii.1), (iii.2), (iii.3))")
    assert "# generator 0\nmod 2\n0 0\n0 0\n\n0 0\n0 0\n" in result.output


def test_cocycles_with_flags(runner):
    result = runner.invoke(cli, ["cocycles", data("trivial2.psy"), "--mod", "2", "--pI", "--strong"])
    assert result.exit_code == 0
    assert "(v), (vi.a), (vi.b)" in result.output.splitlines()[0]


def test_catalog_listing(runner):
    result = runner.invoke(cli, ["catalog"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert "unknot (1 component, no crossings)" in lines
    assert "K1 (2 components, 2 singular crossings)" in lines
    assert "K2 (2 components, 1 positive crossing, 1 singular crossing)" in lines


def test_catalog_json(runner):
    result = runner.invoke(cli, ["catalog", "--json"])
    assert result.exit_code == 0
    entries = {entry["name"]: entry for entry in json.loads(result.output)}
    assert entries["trefoil+"]["crossings"] == {"positive": 3, "negative": 0, "singular": 0}
    assert entries["hopf+"]["components"] == 2


def test_unknown_option(runner):
    assert runner.invoke(cli, ["catalog", "--yaml"]).exit_code == 2


def test_suite(runner, tmp_path):
    for name in ("alex5.psy", "w42.wgt", "K1.dgm"):
        shutil.copy(data_path(name), tmp_path / name)
    (tmp_path / "suite.txt").write_text("# one entry\nalex5.psy w42.wgt K1.dgm K2 unknot\n")
    result = runner.invoke(cli, ["suite", str(tmp_path), "--workers", "2"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "X = alex5.psy, weights = w42.wgt"
    assert lines[1] == "Φ_X^Z | Φ_X^{φ,ψ} | L"
    assert lines[2] == "5 | 5 | K1, unknot"
    assert lines[3] == "5 | 5w^2 | K2"


def test_suite_reports_rows_that_fail(runner, tmp_path):
    for name in ("alex5.psy", "w42.wgt"):
        shutil.copy(data_path(name), tmp_path / name)
    (tmp_path / "suite.txt").write_text("alex5.psy w42.wgt K2\n")
    result = runner.invoke(cli, ["suite", str(tmp_path), "--pseudoknot"])
    assert result.exit_code == 0
    assert "- | error:" in result.output


def test_suite_on_empty_directory(runner, tmp_path):
    assert runner.invoke(cli, ["suite", str(tmp_path)]).exit_code == 2


@pytest.mark.parametrize(
    "line",
    ["nope.psq w42.wgt K1", "alex5.psy w42.wgt nope.dgm", "alex5.psy gone.wgt K1"],
)
def test_suite_names_missing_files(runner, tmp_path, line):
    for name in ("alex5.psy", "w42.wgt"):
        shutil.copy(data_path(name), tmp_path / name)
    (tmp_path / "suite.txt").write_text(line + "\n")
    result = runner.invoke(cli, ["suite", str(tmp_path)])
    assert result.exit_code == 2
    missing = next(token for token in line.split() if token.startswith(("nope", "gone")))
    assert missing in result.output
