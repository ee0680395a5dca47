"""Handler for the ``verify`` subcommand."""

import logging

from dl_cospectral.cli.handlers.base import EXIT_FAILED, EXIT_OK, BaseCommandHandler
from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.isomorphism import are_isomorphic
from dl_cospectral.invariants.profile import compare_profiles, profile
from dl_cospectral.spectra.cospectral import d_char_poly, dl_char_poly
from dl_cospectral.templates.report_templates import ReportTemplates

logger = logging.getLogger(__name__)

ISOMORPHIC = "isomorphic"
COSPECTRAL = "cospectral, non-isomorphic"
NOT_COSPECTRAL = "not cospectral"


class VerifyHandler(BaseCommandHandler):
    """Decides cospectrality of two graphs and lists the parameters that differ."""

    def handle(self) -> int:
        graphs = self._load_graphs()
        if len(graphs) != 2:
            raise ParameterError(f"verify needs exactly two graphs, got {len(graphs)}")
        (first_label, g), (second_label, h) = graphs

        same_poly = g.order == h.order and dl_char_poly(g) == dl_char_poly(h)
        if are_isomorphic(g, h):
            verdict = ISOMORPHIC
        elif same_poly:
            verdict = COSPECTRAL
        else:
            verdict = NOT_COSPECTRAL
        d_cospectral = g.order == h.order and d_char_poly(g) == d_char_poly(h)
        logger.info(f"{first_label} vs {second_label}: {verdict}")

        differences = []
        if not self.args.no_profile:
            a, b = profile(g), profile(h)
            differences = [(name, getattr(a, name), getattr(b, name)) for name in compare_profiles(a, b)]

        if self.config.json_output:
            self.emit_json(
                {
                    "graphs": [g.to_graph6(), h.to_graph6()],
                    "verdict": verdict,
                    "dl_polynomials_equal": same_poly,
                    "d_polynomials_equal": d_cospectral,
                    "differences": {name: [a, b] for name, a, b in differences},
                }
            )
        else:
            self.emit(ReportTemplates.verify(verdict, d_cospectral, differences))
        return EXIT_FAILED if verdict == NOT_COSPECTRAL else EXIT_OK
