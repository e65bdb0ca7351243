import io
import json

import pytest

from plankforge.reporting import CsvReportWriter, JsonReportWriter, OutputFormat, Report, writer_for

HEADER = {'plankforge_version': '0.1', 'seed': 3, 'config': {'command': 'constants'}}


def sweep_report() -> Report:
    rows = (
        {'kind': 'eq4', 'field': 'real', 'd': 1, 'p': 2.0, 'n': 2, 'k': 1, 'log_value': 0.1},
        {'kind': 'eq6', 'field': 'real', 'd': 1, 'p': '', 'n': 2, 'k': 1, 'log_value': 2.5},
    )
    return Report(HEADER, 'constants-sweep', 'ok', {'rows': 2}, rows)


def test_json_writer_is_sorted_and_newline_terminated() -> None:
    stream = io.StringIO()

    JsonReportWriter().write(Report(HEADER, 'constants', 'ok', {'b': 1, 'a': 2}), stream)

    text = stream.getvalue()
    assert text.endswith('}\n')
    assert text.index('"command"') < text.index('"config"') < text.index('"seed"')
    assert json.loads(text)['result'] == {'a': 2, 'b': 1}
    assert 'rows' not in json.loads(text)


def test_json_writer_includes_rows() -> None:
    stream = io.StringIO()

    JsonReportWriter().write(sweep_report(), stream)

    assert len(json.loads(stream.getvalue())['rows']) == 2


def test_csv_writer_columns() -> None:
    stream = io.StringIO()

    CsvReportWriter().write(sweep_report(), stream)

    assert stream.getvalue().splitlines() == [
        '# plankforge_version=0.1 seed=3',
        '# config={"command": "constants"}',
        'kind,field,d,p,n,k,log_value',
        'eq4,real,1,2.0,2,1,0.1',
        'eq6,real,1,,2,1,2.5',
    ]


def test_csv_writer_needs_rows() -> None:
    with pytest.raises(ValueError, match='no tabular output'):
        CsvReportWriter().write(Report(HEADER, 'plank', 'ok', {}), io.StringIO())


def test_writer_for_format() -> None:
    assert isinstance(writer_for(OutputFormat.CSV), CsvReportWriter)
    assert isinstance(writer_for(OutputFormat.JSON), JsonReportWriter)
