# tests/test_suites.py
import pytest

from app.core import suites
from app.models.enums import Verdict
from app.utils.errors import DomainError
from tests.conftest import mat, vec

SEEDED = [name for name in suites.suite_names() if name != "worked-examples"]


@pytest.mark.parametrize("name", SEEDED)
def test_suite_passes_on_a_short_run(name):
    report = suites.run_suite(name, trials=10, seed=7)
    assert report.verdict is Verdict.passed, report.failures
    assert report.trials == 10
    assert report.seed == 7


@pytest.mark.parametrize("name", ["frobenius", "det-engines", "decompose"])
def test_reports_are_reproducible(name):
    first = suites.run_suite(name, trials=6, seed=123)
    second = suites.run_suite(name, trials=6, seed=123)
    assert first.to_json() == second.to_json()


def test_worked_examples():
    report = suites.run_suite("worked-examples")
    assert report.passed
    assert report.trials == 12


def test_default_trials_and_seed(monkeypatch):
    monkeypatch.setenv("SUPERTROP_SEED", "11")
    suites.get_settings.cache_clear()
    monkeypatch.setitem(suites.DEFAULT_TRIALS, "frobenius", 3)
    report = suites.run_suite("frobenius")
    assert (report.trials, report.seed) == (3, 11)


def test_unknown_suite():
    with pytest.raises(DomainError, match="unknown suite"):
        suites.run_suite("no-such-suite", trials=1)


def test_registry_covers_every_default():
    assert set(suites.DEFAULT_TRIALS) == set(suites.suite_names())


def test_counterexample_is_reported(monkeypatch):
    def broken(index, seed, settings):
        t = suites.Trial(index, index)
        t.expect(index != 2, "index differs from 2", index)
        return t.failures

    monkeypatch.setitem(suites.SUITES, "broken", broken)
    report = suites.run_suite("broken", trials=4, seed=0)
    assert report.verdict is Verdict.counterexample
    assert [f.index for f in report.failures] == [2]
    assert '"schema":"supertrop/1"' in report.to_json()


def test_diagonal_argmax_decides_cauchy_schwartz():
    F = suites.bl.BilinearForm(mat("0 -2; -2 0"))
    assert suites._diagonal_argmax(F, vec("0 -1")) == frozenset({0})
    assert suites._diagonal_argmax(F, vec("0 0")) == frozenset({0, 1})
    assert suites.bl.pair_class(F, vec("0 -1"), vec("-1 0")).cauchy_schwartz
    assert not suites.bl.pair_class(F, vec("0 -1"), vec("0 0")).cauchy_schwartz
    with pytest.raises(DomainError, match="tangible"):
        suites._diagonal_argmax(F, vec("0 1g"))


def test_cs_gram_checks_every_trial(monkeypatch):
    seen = []
    real = suites.ghost_surpasses
    monkeypatch.setattr(suites, "ghost_surpasses", lambda b, a: seen.append((b, a)) or real(b, a))
    report = suites.run_suite("cs-gram", trials=25, seed=3)
    assert report.passed
    tangible_norms = [a for _, a in seen if a.is_tangible]
    assert len(tangible_norms) >= 25
