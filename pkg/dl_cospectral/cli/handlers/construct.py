"""Handler for the ``construct`` subcommand."""

import logging
from typing import Any, Dict, List

import jsonschema

from dl_cospectral import __version__
from dl_cospectral.cli.handlers.base import EXIT_OK, BaseCommandHandler
from dl_cospectral.core.exceptions import ConstructionError
from dl_cospectral.graphs.graph import Graph

logger = logging.getLogger(__name__)

# Constructions built from a host graph rather than from family parameters
SWITCH = "switch"
CO_TRANSMISSION_HOST = "co-transmission-host"

PROVENANCE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Provenance",
    "type": "object",
    "properties": {
        "family": {"type": "string"},
        "parameters": {"type": "object"},
        "orders": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "graphs": {"type": "array", "items": {"type": "string"}},
        "version": {"type": "string"},
    },
    "required": ["family", "parameters", "orders", "graphs", "version"],
}


class ConstructHandler(BaseCommandHandler):
    """Builds named families, cousin switches and the co-transmission twin host."""

    def handle(self) -> int:
        name = self.args.name
        if name == SWITCH:
            graphs, parameters = self._switch_pairs()
        elif name == CO_TRANSMISSION_HOST:
            graphs, parameters = self._co_transmission_host()
        else:
            graphs, parameters = self._family(name)

        lines = [g.to_graph6() for g in graphs]
        provenance = {
            "family": name,
            "parameters": parameters,
            "orders": [g.order for g in graphs],
            "graphs": lines,
            "version": __version__,
        }
        jsonschema.validate(provenance, PROVENANCE_SCHEMA)
        logger.info(f"Constructed {len(graphs)} graph(s) of {name}")

        if self.config.json_output:
            self.emit_json(provenance)
        else:
            if lines:
                self.emit("\n".join(lines))
            self.emit_json(provenance)
        return EXIT_OK

    def _family(self, name: str):
        from dl_cospectral.constructions.families import FAMILY_PARAMETER_NAMES, build_named_family

        values = {
            parameter: getattr(self.args, f"family_{parameter}")
            for parameter in FAMILY_PARAMETER_NAMES
            if getattr(self.args, f"family_{parameter}", None) is not None
        }
        graphs, provenance = build_named_family(name, values)
        return graphs, provenance["parameters"]

    def _switch_pairs(self):
        from dl_cospectral.constructions.cousins import cross_switch_pair, find_cousin_sets, inner_switch_pair

        mode = self.args.mode
        builders = {"inner": inner_switch_pair, "cross": cross_switch_pair}
        selected = builders if mode == "both" else {mode: builders[mode]}
        graphs: List[Graph] = []
        pairs: List[Dict[str, Any]] = []
        for label, host in self._load_graphs():
            for cousins in find_cousin_sets(host):
                for kind, build in selected.items():
                    pair = build(host, cousins)
                    if pair is None:
                        continue
                    graphs.extend(pair)
                    pairs.append({"host": label, "cousins": [list(p) for p in cousins.pairs], "mode": kind})
        if not graphs:
            logger.warning("No cousin set of the given graph(s) yields a non-isomorphic pair")
        return graphs, {"mode": mode, "pairs": pairs}

    def _co_transmission_host(self):
        from dl_cospectral.constructions.cousins import CousinSet, inner_switch_pair
        from dl_cospectral.constructions.twins import co_transmission_twin_host

        host, twin_set = co_transmission_twin_host()
        pair = inner_switch_pair(host, CousinSet(host, twin_set.pairs))
        if pair is None:
            raise ConstructionError("co-transmission host did not yield a pair")
        return [host, *pair], {
            "twins": [list(p) for p in twin_set.pairs],
            "transmission": twin_set.transmission,
        }
