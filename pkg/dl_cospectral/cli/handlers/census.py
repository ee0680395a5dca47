"""Handler for the ``census`` subcommand."""

import itertools
import logging

from dl_cospectral.cli.handlers.base import EXIT_OK, BaseCommandHandler
from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.templates.report_templates import ReportTemplates

logger = logging.getLogger(__name__)


class CensusHandler(BaseCommandHandler):
    """Runs a census over the built-in enumeration or graph6 corpora."""

    def _graphs(self):
        from dl_cospectral.census.corpus import CorpusReader
        from dl_cospectral.census.enumeration import enumerate_connected

        if self.args.enumerate and self.args.corpus:
            raise ParameterError("use either --enumerate or --corpus, not both")
        if self.args.enumerate:
            return enumerate_connected(self.args.enumerate)
        if not self.args.corpus:
            raise ParameterError("census needs --enumerate N or --corpus PATH")
        return itertools.chain.from_iterable(CorpusReader(path) for path in self.args.corpus)

    def handle(self) -> int:
        from dl_cospectral.census.report import preservation_report
        from dl_cospectral.census.runner import run_census
        from dl_cospectral.census.storage import class_to_record, save_classes

        counted = _Counter(self._graphs())
        classes = run_census(counted, shards=self.config.shards, progress=self.args.progress)
        if self.config.output:
            save_classes(classes, self.config.output)

        report = preservation_report(classes) if classes and not self.args.no_report else None
        if self.args.report and report is not None:
            with open(self.args.report, "w", encoding="utf-8") as stream:
                stream.write(report.to_markdown() + "\n")

        if self.config.json_output:
            self.emit_json(
                {
                    "graphs": counted.count,
                    "classes": [class_to_record(c) for c in classes],
                    "report": report.to_json() if report else None,
                }
            )
        else:
            self.emit(ReportTemplates.census_summary(classes, counted.count))
            if report is not None and not self.args.report:
                self.emit("")
                self.emit(report.to_markdown())
        return EXIT_OK


class _Counter:
    """Pass-through iterator that counts the graphs it hands out."""

    def __init__(self, graphs):
        self._graphs = iter(graphs)
        self.count = 0

    def __iter__(self):
        return self

    def __next__(self):
        g = next(self._graphs)
        self.count += 1
        return g
