import pytest

from taurank.linalg.field import Field
from taurank.scripts import worked_examples
from taurank.scripts.worked_examples import example
from taurank.scripts.worked_examples import ExampleFailed
from taurank.scripts.worked_examples import expect
from taurank.scripts.worked_examples import run_examples
from taurank.scripts.worked_examples import RunOptions
from taurank.settings import DEFAULTS


@pytest.mark.slow
def test_all_examples_pass():
    results = run_examples(RunOptions())
    assert len(results) == len(worked_examples.EXAMPLES)
    failed = [r.to_json() for r in results if not r.passed]
    assert failed == []


@pytest.mark.slow
def test_examples_over_a_prime_field():
    results = run_examples(RunOptions(field=Field(2147483647)))
    assert all(r.passed for r in results)


def test_run_options_from_settings():
    settings = dict(DEFAULTS, field=Field(), trials=3)
    options = RunOptions.from_settings(settings)
    assert options.trials == 3
    assert options.algebra('ALG-B').dim == 5


def test_expect():
    expect(True, 'never raised')
    with pytest.raises(ExampleFailed, match=r'r = 2'):
        expect(False, 'r = 2')


def test_failures_are_reported(monkeypatch, caplog):
    monkeypatch.setattr(worked_examples, 'EXAMPLES', [])

    @example('always fails')
    def broken(options):
        expect(False, 'wrong on purpose')

    @example('passes')
    def fine(options):
        return 'ok'

    results = run_examples(RunOptions())
    assert [(r.name, r.passed) for r in results] == [
        ('always fails', False), ('passes', True)
    ]
    assert results[0].detail == 'wrong on purpose'
    assert results[1].to_json() == {
        'name': 'passes', 'passed': True, 'detail': 'ok'
    }
    assert "example 'always fails' failed" in caplog.text
