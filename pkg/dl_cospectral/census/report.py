"""
Which profile parameters cospectral classes agree on.

Every pair of members inside every class is compared field by field. A field
with no differing pair is reported as always equal in the sample; otherwise
up to ``DL_WITNESS_LIMIT`` differing pairs are kept as witnesses.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from dl_cospectral.census.reducer import CospectralClass
from dl_cospectral.core.config import settings
from dl_cospectral.graphs.formats import parse_graph6
from dl_cospectral.invariants.profile import PROFILE_FIELDS, ParameterProfile, compare_profiles, profile

logger = logging.getLogger(__name__)

ALWAYS_EQUAL = "always-equal-in-sample"
WITNESS_OF_DIFFERENCE = "witness-of-difference"

# Properties whose preservation is unsettled; one member has it, the other not
OPEN_QUESTION_FIELDS = (
    "is_tree",
    "is_bipartite",
    "is_transmission_regular",
    "is_regular",
    "srg_parameters",
)


def _json_value(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_json_value(item) for item in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


@dataclass(frozen=True)
class Witness:
    class_index: int
    first: str
    second: str
    first_value: Any
    second_value: Any

    def to_json(self) -> Dict[str, Any]:
        return {
            "class": self.class_index,
            "members": [self.first, self.second],
            "values": [_json_value(self.first_value), _json_value(self.second_value)],
        }


@dataclass
class ParameterStatus:
    name: str
    witnesses: List[Witness] = field(default_factory=list)
    differing_pairs: int = 0

    @property
    def status(self) -> str:
        return WITNESS_OF_DIFFERENCE if self.differing_pairs else ALWAYS_EQUAL


@dataclass
class PreservationReport:
    class_count: int
    pair_count: int
    parameters: Dict[str, ParameterStatus]
    open_questions: Dict[str, List[Witness]]

    def status(self, name: str) -> str:
        return self.parameters[name].status

    def always_equal(self) -> List[str]:
        return [name for name, entry in self.parameters.items() if entry.status == ALWAYS_EQUAL]

    def not_preserved(self) -> List[str]:
        return [name for name, entry in self.parameters.items() if entry.status != ALWAYS_EQUAL]

    def to_json(self) -> Dict[str, Any]:
        return {
            "classes": self.class_count,
            "pairs": self.pair_count,
            "parameters": {
                name: {
                    "status": entry.status,
                    "differing_pairs": entry.differing_pairs,
                    "witnesses": [w.to_json() for w in entry.witnesses],
                }
                for name, entry in self.parameters.items()
            },
            "open_questions": {
                name: [w.to_json() for w in witnesses]
                for name, witnesses in self.open_questions.items()
            },
        }

    def to_markdown(self) -> str:
        from dl_cospectral.templates.report_templates import ReportTemplates

        return ReportTemplates.preservation_table(self)


def _has(value: Any) -> bool:
    return value is not None and value is not False


def _one_sided(a: Any, b: Any) -> bool:
    return _has(a) != _has(b)


def preservation_report(
    classes: Sequence[CospectralClass], witness_limit: Optional[int] = None
) -> PreservationReport:
    """
    Compare the parameter profiles of all intra-class member pairs.

    Args:
        classes: Cospectral classes, e.g. from ``run_census``
        witness_limit: Witnesses kept per parameter; defaults to
            ``DL_WITNESS_LIMIT``

    Returns:
        PreservationReport: Per-parameter status with witnesses, plus
        one-sided witnesses for the open-question properties
    """
    limit = settings.DL_WITNESS_LIMIT if witness_limit is None else witness_limit
    parameters = {name: ParameterStatus(name) for name in PROFILE_FIELDS}
    open_questions: Dict[str, List[Witness]] = {name: [] for name in OPEN_QUESTION_FIELDS}
    profiles: Dict[str, ParameterProfile] = {}
    pair_count = 0

    for index, c in enumerate(classes):
        for text in c.members:
            if text not in profiles:
                profiles[text] = profile(parse_graph6(text))
        for first, second in itertools.combinations(c.members, 2):
            pair_count += 1
            a, b = profiles[first], profiles[second]
            for name in compare_profiles(a, b):
                entry = parameters[name]
                entry.differing_pairs += 1
                witness = Witness(index, first, second, getattr(a, name), getattr(b, name))
                if len(entry.witnesses) < limit:
                    entry.witnesses.append(witness)
                if (
                    name in open_questions
                    and len(open_questions[name]) < limit
                    and _one_sided(witness.first_value, witness.second_value)
                ):
                    open_questions[name].append(witness)

    found = {name: len(ws) for name, ws in open_questions.items() if ws}
    if found:
        logger.info(f"One-sided witnesses for open-question properties: {found}")
    logger.info(f"Compared {pair_count} cospectral pairs across {len(classes)} classes")
    return PreservationReport(len(classes), pair_count, parameters, open_questions)

