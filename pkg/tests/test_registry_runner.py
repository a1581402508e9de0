import pytest

from core.base_module import BaseModule
from core.errors import ConfigError
from core.module_registry import ModuleRegistry
from core.orchestrator import CheckJob, VerificationRunner, build_suite
from core.run_config import RunConfig


@pytest.fixture
def fresh_registry():
    module_registry = ModuleRegistry()
    module_registry.auto_discover("modules.verify")
    return module_registry


def _config(**overrides):
    settings = dict(command="verify", time_points=33, space_points=9, random_fields=2)
    settings.update(overrides)
    return RunConfig(**settings).validate()


def test_discovery_finds_concrete_checks_only(fresh_registry):
    assert "BaseCheck" not in fresh_registry.modules
    assert len(fresh_registry.modules) == 15
    assert all(issubclass(cls, BaseModule) for cls in fresh_registry.modules.values())


def test_select_by_prefix(fresh_registry):
    assert fresh_registry.select(["4.1"]) == ["CommutationCheck"]
    assert set(fresh_registry.select(["2.4"])) == {"ContractionCheck", "PointwiseBoundCheck", "LipschitzCheck"}
    assert fresh_registry.select(["weak"]) == ["WeakFormCheck"]
    assert fresh_registry.select(None) == list(fresh_registry.modules)


def test_register_rejects_foreign_classes():
    with pytest.raises(TypeError):
        ModuleRegistry().register("x", dict)


def test_get_module_unknown_name(fresh_registry):
    assert fresh_registry.get_module("NoSuchCheck") is None
    check = fresh_registry.get_module("FtcCheck")
    assert check is fresh_registry.get_module("FtcCheck")
    assert "5.1" in str(check)


def test_build_suite_resamples_on_grid_override():
    standard, randoms = build_suite(_config(), include_random=True)
    assert len(standard) == 7 and len(randoms) == 2
    assert standard[0].field.time.n == 33
    assert standard[0].field.space.shape == (9,)
    assert standard[-1].field.space.shape == (33, 33)


def test_runner_filters_by_lemma(fresh_registry):
    runner = VerificationRunner(_config(lemma_ids=["4.1"]), fresh_registry)
    runner.initialize()
    assert list(runner.modules) == ["CommutationCheck"]
    jobs = runner.plan()
    assert all(isinstance(job, CheckJob) and job.module == "CommutationCheck" for job in jobs)
    results = runner.run(jobs)
    assert results and all(r.check_id == "lemma-4.1-commutation" for r in results)
    assert all(r.passed for r in results)


def test_random_fields_only_for_checks_that_take_them(fresh_registry):
    runner = VerificationRunner(_config(lemma_ids=["2.4a", "3.1"]), fresh_registry)
    runner.initialize()
    planned = runner.plan()
    randoms = {job.entry for job in planned if job.entry in runner.random_names}
    assert randoms == runner.random_names
    assert all(job.module == "PointwiseBoundCheck" for job in planned if job.entry in runner.random_names)


def test_results_do_not_depend_on_worker_count(fresh_registry):
    def records(jobs):
        runner = VerificationRunner(_config(lemma_ids=["2.4a", "kernel"], jobs=jobs), fresh_registry)
        runner.initialize()
        return [{k: v for k, v in r.to_record().items() if k != "runtime_ms"} for r in runner.run()]

    assert records(1) == records(3)


def test_unknown_lemma_is_a_config_error(fresh_registry):
    runner = VerificationRunner(_config(lemma_ids=["9.9"]), fresh_registry)
    with pytest.raises(ConfigError):
        runner.initialize()


def test_study_filter(fresh_registry):
    runner = VerificationRunner(_config(command="converge-study", lemma_ids=["2.5", "4.1"]), fresh_registry)
    runner.initialize(studies_only=True)
    assert list(runner.modules) == ["LrConvergenceCheck"]
