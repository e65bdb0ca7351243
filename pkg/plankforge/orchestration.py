from typing import TextIO

from plankforge.cli.config import RunConfig
from plankforge.commands.registry import HandlerRegistry
from plankforge.commands.requests import CommandRequest
from plankforge.commands.types import CommandStatus
from plankforge.reporting.builder import ReportBuilder
from plankforge.reporting.types import ReportWriter


class CommandOrchestrator:
    def __init__(
        self,
        registry: HandlerRegistry,
        builder: ReportBuilder,
        writer: ReportWriter,
    ) -> None:
        self._registry = registry
        self._builder = builder
        self._writer = writer

    def run(self, request: CommandRequest, config: RunConfig, stream: TextIO) -> CommandStatus:
        handler = self._registry.for_request(request)
        result = handler.handle(request)
        report = self._builder.build(result, config.as_dict(), config.seed)
        self._writer.write(report, stream)
        return result.status
