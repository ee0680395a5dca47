"""
Parameter profiles of connected graphs.

A profile records every parameter that cospectral graphs are compared on.
Planarity and circulant recognition are left as None ("not evaluated") above
their configured order limits.
"""

from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import jsonschema

from dl_cospectral.core.config import settings
from dl_cospectral.core.exceptions import SchemaError
from dl_cospectral.constructions.srg import srg_parameters
from dl_cospectral.graphs.distances import all_pairs_distances, components_count
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.isomorphism import has_nontrivial_automorphism
from dl_cospectral.graphs.operators import complement
from dl_cospectral.invariants.cliques import clique_number, independence_number
from dl_cospectral.invariants.planarity import is_circulant, is_planar
from dl_cospectral.invariants.structure import (
    distance_multiset,
    girth,
    has_cut_vertex,
    has_dominating_vertex,
    has_leaf,
    is_bipartite,
    is_regular,
    is_tree,
)
from dl_cospectral.spectra.matrices import transmissions

_INT = {"type": "integer", "minimum": 0}
_BOOL = {"type": "boolean"}
_INT_LIST = {"type": "array", "items": _INT}

PROFILE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "ParameterProfile",
    "description": "Parameters of one connected graph; null means not evaluated. "
    "girth is 0 for a forest.",
    "type": "object",
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "edge_count": _INT,
        "degree_sequence": _INT_LIST,
        "transmission_sequence": _INT_LIST,
        "diameter": _INT,
        "girth": _INT,
        "distance_multiset": {
            "type": "array",
            "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2},
        },
        "wiener_index": _INT,
        "average_transmission": {"type": "string", "pattern": r"^\d+(/\d+)?$"},
        "complement_components": {"type": "integer", "minimum": 1},
        "has_leaf": _BOOL,
        "has_dominating_vertex": _BOOL,
        "has_cut_vertex": _BOOL,
        "has_nontrivial_automorphism": _BOOL,
        "clique_number": {"type": "integer", "minimum": 1},
        "independence_number": {"type": "integer", "minimum": 1},
        "is_bipartite": _BOOL,
        "is_tree": _BOOL,
        "is_regular": _BOOL,
        "is_transmission_regular": _BOOL,
        "srg_parameters": {
            "oneOf": [
                {"type": "null"},
                {"type": "array", "items": _INT, "minItems": 4, "maxItems": 4},
            ]
        },
        "is_planar": {"type": ["boolean", "null"]},
        "is_circulant": {"type": ["boolean", "null"]},
    },
    "additionalProperties": False,
}
PROFILE_SCHEMA["required"] = list(PROFILE_SCHEMA["properties"])

@dataclass(frozen=True)
class ParameterProfile:
    order: int
    edge_count: int
    degree_sequence: Tuple[int, ...]
    transmission_sequence: Tuple[int, ...]
    diameter: int
    girth: int
    distance_multiset: Tuple[Tuple[int, int], ...]
    wiener_index: int
    average_transmission: Fraction
    complement_components: int
    has_leaf: bool
    has_dominating_vertex: bool
    has_cut_vertex: bool
    has_nontrivial_automorphism: bool
    clique_number: int
    independence_number: int
    is_bipartite: bool
    is_tree: bool
    is_regular: bool
    is_transmission_regular: bool
    srg_parameters: Optional[Tuple[int, int, int, int]]
    is_planar: Optional[bool]
    is_circulant: Optional[bool]

    def to_json(self) -> Dict[str, Any]:
        """Flat JSON object matching ``PROFILE_SCHEMA``."""
        record = {}
        for field in fields(self):
            value = getattr(self, field.name)
            if isinstance(value, Fraction):
                value = str(value)
            elif isinstance(value, tuple):
                value = [list(item) if isinstance(item, tuple) else item for item in value]
            record[field.name] = value
        jsonschema.validate(record, PROFILE_SCHEMA)
        return record

    @classmethod
    def from_json(cls, record: Dict[str, Any]) -> "ParameterProfile":
        try:
            jsonschema.validate(record, PROFILE_SCHEMA)
        except jsonschema.ValidationError as error:
            raise SchemaError(f"invalid profile: {error.message}") from error
        values = dict(record)
        values["degree_sequence"] = tuple(values["degree_sequence"])
        values["transmission_sequence"] = tuple(values["transmission_sequence"])
        values["distance_multiset"] = tuple(tuple(item) for item in values["distance_multiset"])
        values["average_transmission"] = Fraction(values["average_transmission"])
        if values["srg_parameters"] is not None:
            values["srg_parameters"] = tuple(values["srg_parameters"])
        return cls(**values)

def profile(g: Graph) -> ParameterProfile:
    """
    Compute every parameter of a connected graph.

    Raises:
        DisconnectedGraphError: If ``g`` is disconnected
    """
    d = all_pairs_distances(g)
    t = transmissions(d)
    srg = srg_parameters(g)
    return ParameterProfile(
        order=g.order,
        edge_count=g.edge_count,
        degree_sequence=tuple(sorted(g.degrees())),
        transmission_sequence=t.sorted(),
        diameter=d.diameter,
        girth=girth(g),
        distance_multiset=distance_multiset(d),
        wiener_index=t.total // 2,
        average_transmission=Fraction(t.total, g.order),
        complement_components=components_count(complement(g)),
        has_leaf=has_leaf(g),
        has_dominating_vertex=has_dominating_vertex(g),
        has_cut_vertex=has_cut_vertex(g),
        has_nontrivial_automorphism=has_nontrivial_automorphism(g),
        clique_number=clique_number(g),
        independence_number=independence_number(g),
        is_bipartite=is_bipartite(g),
        is_tree=is_tree(g),
        is_regular=is_regular(g),
        is_transmission_regular=t.is_regular(),
        srg_parameters=srg.as_tuple() if srg else None,
        is_planar=is_planar(g) if g.order <= settings.DL_PLANARITY_LIMIT else None,
        is_circulant=is_circulant(g) if g.order <= settings.DL_CIRCULANT_LIMIT else None,
    )

PROFILE_FIELDS = tuple(field.name for field in fields(ParameterProfile))

def compare_profiles(a: ParameterProfile, b: ParameterProfile) -> List[str]:
    """Names of the fields whose values differ, in field order."""
    return [name for name in PROFILE_FIELDS if getattr(a, name) != getattr(b, name)]
