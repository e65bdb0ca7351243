from __future__ import annotations

import io
import logging
import sys
from collections.abc import Sequence

from plankforge.cli.config import RunConfig
from plankforge.cli.parser import build_parser
from plankforge.cli.requests import build_request
from plankforge.cli.types import ExitCode
from plankforge.commands import default_handler_registry
from plankforge.commands.types import CommandStatus
from plankforge.errors import AllocationInfeasibleError, FeasibilityError, RationalizationError
from plankforge.reporting import ReportBuilder, writer_for
from .orchestration import CommandOrchestrator

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

logger = logging.getLogger(__name__)


def configure_logging(verbosity: int) -> None:
    logging.basicConfig(
        level=LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)],
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )


def report_error(message: str) -> None:
    print(f'plankforge: error: {message}', file=sys.stderr)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return ExitCode.OK if exit_request.code in (0, None) else ExitCode.USAGE

    configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        request = build_request(args, config)
        orchestrator = CommandOrchestrator(default_handler_registry(), ReportBuilder(), writer_for(config.output_format))
        buffer = io.StringIO()
        status = orchestrator.run(request, config, buffer)
        if config.output is None:
            sys.stdout.write(buffer.getvalue())
        else:
            config.output.write_text(buffer.getvalue(), encoding='utf-8')
            logger.info('report written to %s', config.output)
    except (FeasibilityError, AllocationInfeasibleError, RationalizationError) as error:
        report_error(str(error))
        return ExitCode.INFEASIBLE
    except (ValueError, KeyError, TypeError, ArithmeticError, OSError) as error:
        report_error(str(error))
        return ExitCode.USAGE

    return ExitCode.CHECK_FAILED if status is CommandStatus.CHECK_FAILED else ExitCode.OK


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
