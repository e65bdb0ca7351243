import os

import pytest

from plankforge.cli import RunConfig, build_parser, resolve_output_format, resolve_seed, resolve_threads
from plankforge.reporting import OutputFormat


def test_seed_flag_wins_over_environment() -> None:
    assert resolve_seed(7, {'PLANKFORGE_SEED': '3'}) == 7


def test_seed_falls_back_to_environment_then_zero() -> None:
    assert resolve_seed(None, {'PLANKFORGE_SEED': '3'}) == 3
    assert resolve_seed(None, {}) == 0


def test_seed_environment_must_be_an_integer() -> None:
    with pytest.raises(ValueError, match='PLANKFORGE_SEED'):
        resolve_seed(None, {'PLANKFORGE_SEED': 'abc'})


def test_threads_default_to_available_cores(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(os, 'cpu_count', lambda: 6)

    assert resolve_threads(None) == 6
    assert resolve_threads(2) == 2


def test_threads_must_be_positive() -> None:
    with pytest.raises(ValueError, match='threads must be >= 1'):
        resolve_threads(0)


def test_run_config_separates_common_options() -> None:
    args = build_parser().parse_args(['constants', '--kind', 'eq2', '--k', '1,1', '--threads', '1', '--format', 'csv'])

    config = RunConfig.from_args(args, environ={'PLANKFORGE_SEED': '11'})

    assert config.seed == 11
    assert config.threads == 1
    assert config.output_format is OutputFormat.CSV
    assert config.options['kind'] == 'eq2'
    assert 'seed' not in config.options
    assert config.as_dict()['format'] == 'csv'


@pytest.mark.parametrize(('argv', 'expected'), (
    (['constants', 'sweep'], OutputFormat.CSV),
    (['constants', 'sweep', '--format', 'json'], OutputFormat.JSON),
    (['constants', 'compare'], OutputFormat.JSON),
    (['constants', '--kind', 'eq2'], OutputFormat.JSON),
    (['extremal', '--d', '2', '--n', '3'], OutputFormat.JSON),
))
def test_output_format_defaults_to_csv_only_for_sweeps(argv: list[str], expected: OutputFormat) -> None:
    config = RunConfig.from_args(build_parser().parse_args([*argv, '--threads', '1']), {})

    assert config.output_format is expected


def test_explicit_output_format_wins() -> None:
    assert resolve_output_format('json', 'constants', 'sweep') is OutputFormat.JSON
    assert resolve_output_format(None, 'remez', 'sweep') is OutputFormat.JSON
