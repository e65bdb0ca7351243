from .builder import ReportBuilder, to_jsonable
from .types import OutputFormat, Report, ReportWriter
from .writers import SWEEP_COLUMNS, CsvReportWriter, JsonReportWriter, writer_for

__all__ = [
    'OutputFormat',
    'Report',
    'ReportWriter',
    'ReportBuilder',
    'JsonReportWriter',
    'CsvReportWriter',
    'SWEEP_COLUMNS',
    'to_jsonable',
    'writer_for',
]
