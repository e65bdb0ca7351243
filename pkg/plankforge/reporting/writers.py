from __future__ import annotations

import csv
import json
from typing import TextIO

from .types import OutputFormat, Report, ReportWriter

SWEEP_COLUMNS = ('kind', 'field', 'd', 'p', 'n', 'k', 'log_value')


class JsonReportWriter(ReportWriter):
    output_format = OutputFormat.JSON

    def write(self, report: Report, stream: TextIO) -> None:
        document = {**report.header, 'command': report.command, 'status': report.status, 'result': report.result}
        if report.rows:
            document['rows'] = list(report.rows)
        stream.write(json.dumps(document, sort_keys=True, indent=2, allow_nan=False))
        stream.write('\n')


class CsvReportWriter(ReportWriter):
    """Tabular reports only; the header travels as leading '#' comment lines."""

    output_format = OutputFormat.CSV

    def __init__(self, columns: tuple[str, ...] = SWEEP_COLUMNS) -> None:
        self._columns = columns

    def write(self, report: Report, stream: TextIO) -> None:
        if not report.rows:
            raise ValueError(f'{report.command} has no tabular output; use --format json')
        stream.write(f'# plankforge_version={report.header["plankforge_version"]} seed={report.header["seed"]}\n')
        stream.write(f'# config={json.dumps(report.header["config"], sort_keys=True)}\n')
        writer = csv.DictWriter(stream, fieldnames=self._columns, extrasaction='ignore', lineterminator='\n')
        writer.writeheader()
        for row in report.rows:
            writer.writerow({column: _cell(row.get(column, '')) for column in self._columns})


def _cell(value: object) -> object:
    if isinstance(value, float):
        return repr(value)
    return value


def writer_for(output_format: OutputFormat) -> ReportWriter:
    if output_format is OutputFormat.CSV:
        return CsvReportWriter()
    return JsonReportWriter()
