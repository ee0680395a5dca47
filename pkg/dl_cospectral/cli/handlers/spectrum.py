"""Handler for the ``spectrum`` subcommand."""

import logging

from dl_cospectral.cli.handlers.base import EXIT_OK, BaseCommandHandler
from dl_cospectral.spectra.coefficients import coefficients_csv
from dl_cospectral.spectra.cospectral import dl_char_poly, dl_spectrum
from dl_cospectral.templates.report_templates import ReportTemplates

logger = logging.getLogger(__name__)


class SpectrumHandler(BaseCommandHandler):
    """Prints the exact polynomial and the floating spectrum of each graph."""

    def handle(self) -> int:
        records = []
        blocks = []
        for label, g in self._load_graphs():
            poly = dl_char_poly(g)
            if self.args.csv:
                blocks.append(coefficients_csv(poly).rstrip("\n"))
                continue
            spectrum = dl_spectrum(g)
            records.append(
                {
                    "source": label,
                    "graph6": g.to_graph6(),
                    "order": g.order,
                    "poly": [str(c) for c in poly.coefficients],
                    "poly_text": str(poly),
                    "spectrum": spectrum.to_json(),
                }
            )
            blocks.append(ReportTemplates.spectrum(label, g.order, poly, spectrum))

        if self.config.json_output and not self.args.csv:
            self.emit_json(records)
        else:
            self.emit("\n\n".join(blocks))
        return EXIT_OK
