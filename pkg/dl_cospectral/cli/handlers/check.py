"""Handler for the ``check`` subcommand."""

from dl_cospectral.checks import CheckOptions, run_check
from dl_cospectral.cli.handlers.base import EXIT_FAILED, EXIT_OK, BaseCommandHandler
from dl_cospectral.templates.report_templates import ReportTemplates


class CheckHandler(BaseCommandHandler):
    """Runs one named verification suite."""

    def handle(self) -> int:
        options = CheckOptions(
            max_n=self.args.max_n,
            enumerate_n=self.args.enumerate,
            corpus=self.args.corpus,
            count=self.args.count,
            seed=self.args.seed,
            progress=self.args.progress,
        )
        result = run_check(self.args.check_id, options)
        if self.config.json_output:
            self.emit_json(result.to_json())
        else:
            self.emit(ReportTemplates.check_result(result))
        return EXIT_OK if result.passed else EXIT_FAILED
