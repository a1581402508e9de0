import json

import numpy as np
import pytest

import _main
from core.errors import ConfigError
from modules.corpus import entry_constant
from modules.field import SpaceGrid, TimeGrid, read_field, write_field
from modules.verify import CheckResult, lemma_checks


@pytest.fixture
def constant_manifest(tmp_path):
    entry = entry_constant(3.0, SpaceGrid.uniform(5), TimeGrid.over(0.0, 1.0, 9))
    return write_field(entry.field, tmp_path / "v.json")


def test_average_of_a_constant(tmp_path, constant_manifest):
    out = tmp_path / "vh.json"
    status = _main.main(["average", "--in", str(constant_manifest), "--h", "0.25", "--out", str(out)])
    assert status == _main.EXIT_OK
    averaged = read_field(out)
    assert averaged.time.n == 7
    assert np.all(averaged.values == 3.0)


def test_average_extended_keeps_the_grid(tmp_path, constant_manifest):
    out = tmp_path / "vh.json"
    status = _main.main(["average", "--in", str(constant_manifest), "--h", "0.25", "--out", str(out),
                         "--extended"])
    assert status == _main.EXIT_OK
    averaged = read_field(out)
    assert averaged.time.n == 9
    assert averaged.values[0, -1] == 0.0


def test_average_rejects_fractional_window(tmp_path, constant_manifest):
    status = _main.main(["average", "--in", str(constant_manifest), "--h", "0.3", "--out", str(tmp_path / "o.json")])
    assert status == _main.EXIT_CONFIG


def test_average_missing_input_is_an_io_error(tmp_path):
    status = _main.main(["average", "--in", str(tmp_path / "none.json"), "--h", "0.25",
                         "--out", str(tmp_path / "o.json")])
    assert status == _main.EXIT_IO


def test_average_needs_its_flags(tmp_path):
    assert _main.main(["average", "--h", "0.25"]) == _main.EXIT_CONFIG


def test_gen_corpus(tmp_path):
    status = _main.main(["gen-corpus", "--out", str(tmp_path / "corpus"), "--dt", "0.125"])
    assert status == _main.EXIT_OK
    manifests = sorted((tmp_path / "corpus").glob("*.json"))
    assert len(manifests) == 7
    assert read_field(tmp_path / "corpus" / "step.json").time.n == 9


def test_verify_commutation_only(tmp_path):
    report = tmp_path / "out.json"
    status = _main.main(["verify", "--lemma", "4.1", "--h", "0.125", "--dt", "0.0625", "--report", str(report)])
    assert status == _main.EXIT_OK
    payload = json.loads(report.read_text())
    assert payload["results"]
    assert {r["check_id"] for r in payload["results"]} == {"lemma-4.1-commutation"}
    assert {r["parameters"]["h"] for r in payload["results"]} == {0.125}


def test_failing_check_sets_exit_status(tmp_path, monkeypatch):
    def broken(entry, h, axis):
        return CheckResult.identity("lemma-4.1-commutation", entry.name, {"h": h, "axis": axis}, 1.0, 0.0, 1e-12)

    monkeypatch.setattr(lemma_checks, "check_commutation", broken)
    report = tmp_path / "out.csv"
    status = _main.main(["verify", "--lemma", "4.1", "--h", "0.125", "--dt", "0.0625",
                         "--report", str(report), "--format", "csv"])
    assert status == _main.EXIT_CHECK_FAILED
    assert report.exists()


def test_unmatched_lemma_is_a_config_error(tmp_path):
    status = _main.main(["verify", "--lemma", "9.9", "--report", str(tmp_path / "r.json")])
    assert status == _main.EXIT_CONFIG
    assert not (tmp_path / "r.json").exists()


def test_verify_all_rejects_lemma_filter():
    assert _main.main(["verify-all", "--lemma", "2.4"]) == _main.EXIT_CONFIG


def test_run_maps_config_errors(monkeypatch):
    def explode(run_config):
        raise ConfigError("boom")

    monkeypatch.setattr(_main, "run_checks", explode)
    config = _main.resolve("verify", {"lemma_ids": "4.1"})
    assert _main.run(config) == _main.EXIT_CONFIG


def test_unknown_command_exits_through_argparse():
    with pytest.raises(SystemExit):
        _main.main(["launch"])


def test_converge_study_on_a_coarse_grid(tmp_path):
    report = tmp_path / "study.json"
    status = _main.main(["converge-study", "--dt", "0.125", "--report", str(report)])
    assert status in (_main.EXIT_OK, _main.EXIT_CHECK_FAILED)
    payload = json.loads(report.read_text())
    studies = [r for r in payload["results"] if r["check_id"] == "lemma-2.5-lr-convergence"]
    assert studies
    assert all(r["h_values"] == [0.5, 0.25, 0.125] for r in studies)


def test_converge_study_rejects_a_grid_without_three_windows(tmp_path):
    report = tmp_path / "study.json"
    assert _main.main(["converge-study", "--dt", "0.25", "--report", str(report)]) == _main.EXIT_CONFIG
    assert not report.exists()
