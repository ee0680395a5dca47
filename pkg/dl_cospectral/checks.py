"""
Named verification suites run by ``dl-cospectral check``.

Each suite recomputes a known fact about distance Laplacian spectra from
scratch over a range of inputs and reports the cases that disagree.
"""

import logging
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.graph import Graph

logger = logging.getLogger(__name__)

# Failures listed in a result; the count is always exact
MAX_REPORTED_FAILURES = 20


@dataclass
class CheckOptions:
    """Optional knobs shared by the suites; ``None`` means the suite default."""

    max_n: Optional[int] = None
    enumerate_n: Optional[int] = None
    corpus: Optional[str] = None
    count: Optional[int] = None
    seed: Optional[int] = None
    progress: bool = False


@dataclass
class CheckResult:
    check_id: str
    description: str
    cases: int = 0
    failure_count: int = 0
    failures: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED_FAILURES:
                self.failures.append(label)

    def to_json(self) -> Dict[str, Any]:
        record = asdict(self)
        record["passed"] = self.passed
        return record


def _progress(items: Iterable, options: CheckOptions, desc: str) -> Iterable:
    return tqdm(items, desc=desc, disable=not options.progress)


def check_four_vertex_switch(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.cousins import four_vertex_switch_cases

    result = CheckResult(
        "four-vertex-switch",
        "Whenever H + v1v2 and H + v3v4 are isomorphic on four vertices, "
        "the reversal or the pair swap is an isomorphism",
    )
    cases = four_vertex_switch_cases()
    for h, reverse, swap in cases:
        result.record(reverse or swap, f"H with edges {h.edges()}")
    result.details = {
        "configurations": 16,
        "isomorphic": len(cases),
        "by_reverse": sum(1 for _, reverse, _ in cases if reverse),
        "by_swap": sum(1 for _, _, swap in cases if swap),
    }
    return result


def check_hn_transmission(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.families import hn_graph
    from dl_cospectral.invariants.structure import is_regular
    from dl_cospectral.spectra.matrices import graph_transmissions

    max_n = options.max_n or 15
    result = CheckResult(
        "hn-transmission",
        "H_n is never regular, and for odd n it is transmission regular "
        "with transmission (3n^2 + 1) / 2",
    )
    even = {}
    for n in _progress(range(2, max_n + 1), options, "hn"):
        g = hn_graph(n)
        t = graph_transmissions(g)
        result.record(not is_regular(g), f"H_{n} is regular")
        if n % 2:
            expected = (3 * n * n + 1) // 2
            result.record(
                t.is_regular() and t[0] == expected,
                f"H_{n}: transmissions {sorted(set(t))}, expected {expected}",
            )
        else:
            even[n] = sorted(set(t))
    result.details = {"even_transmissions": even}
    return result


def check_consecutive_circulant(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.families import (
        consecutive_circulant,
        consecutive_transmission,
        consecutive_wiener_index,
    )
    from dl_cospectral.spectra.matrices import graph_transmissions

    max_n = options.max_n or 60
    result = CheckResult(
        "consecutive-circulant",
        "The closed-form transmission and Wiener index of Circ(n, {1..r}) "
        "match breadth-first search",
    )
    for n in _progress(range(3, max_n + 1), options, "circulant"):
        for r in range(1, n // 2 + 1):
            t = graph_transmissions(consecutive_circulant(n, r))
            expected = consecutive_transmission(n, r)
            result.record(
                t.is_regular() and t[0] == expected and t.total // 2 == consecutive_wiener_index(n, r),
                f"Circ({n}, 1..{r}): transmissions {sorted(set(t))}, expected {expected}",
            )
    return result


def _connected_graphs(options: CheckOptions, default_n: int) -> Iterable[Graph]:
    from dl_cospectral.census.corpus import ingest_corpus
    from dl_cospectral.census.enumeration import enumerate_connected

    if options.corpus:
        yield from ingest_corpus(options.corpus)
        return
    for n in range(2, (options.enumerate_n or default_n) + 1):
        yield from enumerate_connected(n)


def check_coefficients(options: CheckOptions) -> CheckResult:
    from dl_cospectral.spectra.coefficients import coefficient_report
    from dl_cospectral.spectra.cospectral import dl_char_poly, dl_second_eigenvalue_bound

    result = CheckResult(
        "coefficients",
        "Distance Laplacian coefficients alternate in sign, are log-concave and "
        "decrease in absolute value; the second smallest eigenvalue is at least n",
    )
    for g in _progress(_connected_graphs(options, 6), options, "coefficients"):
        report = coefficient_report(dl_char_poly(g))
        ok = (
            report.alternating_signs
            and report.log_concave
            and report.decreasing_abs
            and dl_second_eigenvalue_bound(g)
        )
        result.record(ok, f"{g.to_graph6()}: {report.to_dict()}")
    return result


# (family label, builder) pairs of strongly regular graphs
def _srg_samples() -> List[tuple]:
    from dl_cospectral.constructions.families import hamming, paley, shrikhande, triangular

    return [
        ("shrikhande", shrikhande),
        ("hamming:2:4", lambda: hamming(2, 4)),
        ("triangular:8", lambda: triangular(8)),
        ("paley:13", lambda: paley(13)),
        ("paley:29", lambda: paley(29)),
    ]


def check_srg_spectrum(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.srg import srg_dl_char_poly, srg_dl_spectrum, srg_parameters
    from dl_cospectral.spectra.cospectral import dl_char_poly, dl_spectrum

    result = CheckResult(
        "srg-spectrum",
        "The distance Laplacian spectrum of a strongly regular graph follows "
        "from its parameters",
    )
    for label, build in _srg_samples():
        g = build()
        p = srg_parameters(g)
        if p is None:
            result.record(False, f"{label} is not strongly regular")
            continue
        exact = dl_char_poly(g) == srg_dl_char_poly(p)
        floating = dl_spectrum(g).matches(srg_dl_spectrum(p), tolerance=1e-8)
        result.record(exact and floating, f"{label} {p.as_tuple()}: exact={exact} float={floating}")
        result.details[label] = list(p.as_tuple())
    return result


def check_collins_peak(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.families import path_graph
    from dl_cospectral.spectra.coefficients import normalized_tree_coefficients, peak_index

    result = CheckResult(
        "collins-peak",
        "The normalized distance coefficients of the path P_n peak beyond n // 2 "
        "for n >= 18 and for odd n >= 9",
    )
    top = options.max_n or 24
    orders = [n for n in range(9, top + 1) if n >= 18 or n % 2]
    peaks = {}
    for n in orders:
        coefficients: List[Fraction] = list(normalized_tree_coefficients(path_graph(n)))
        peaks[n] = peak_index(coefficients)
        result.record(peaks[n] > n // 2, f"P_{n}: peak at {peaks[n]}, n // 2 = {n // 2}")
    result.details = {"peaks": peaks}
    return result


def _random_connected(rng: random.Random, n: int, density: float = 0.3) -> Graph:
    edges = [(v, rng.randrange(v)) for v in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph(n, edges)


def check_twin_eigenstructure(options: CheckOptions) -> CheckResult:
    from dl_cospectral.constructions.twins import twin_vertex
    from dl_cospectral.spectra.twins import verify_twin_eigenstructure

    count = options.count or 200
    seed = 0 if options.seed is None else options.seed
    max_n = options.max_n or 12
    if max_n < 4:
        raise ParameterError(f"twin eigenstructure needs max_n >= 4, got {max_n}")
    rng = random.Random(seed)
    result = CheckResult(
        "twin-eigenstructure",
        "Independent twins u, v of transmission t give the eigenvector e_u - e_v "
        "for t + 2, and for t after adding the edge uv",
    )
    for _ in _progress(range(count), options, "twins"):
        g = _random_connected(rng, rng.randint(3, max_n - 1))
        v = rng.randrange(g.order)
        host = twin_vertex(g, v)
        record = verify_twin_eigenstructure(host, v, g.order)
        result.record(record.passed, f"{host.to_graph6()} twins {v}, {g.order}")
    result.details = {"seed": seed}
    return result


CHECKS: Dict[str, Callable[[CheckOptions], CheckResult]] = {
    "four-vertex-switch": check_four_vertex_switch,
    "hn-transmission": check_hn_transmission,
    "consecutive-circulant": check_consecutive_circulant,
    "coefficients": check_coefficients,
    "srg-spectrum": check_srg_spectrum,
    "collins-peak": check_collins_peak,
    "twin-eigenstructure": check_twin_eigenstructure,
}

# Short ids kept for scripts written against the numbered checks
CHECK_ALIASES: Dict[str, str] = {
    "lemma-3.8": "four-vertex-switch",
    "prop-4.2": "hn-transmission",
    "prop-4.9": "consecutive-circulant",
    "thm-5.3": "coefficients",
    "remark-4.4": "srg-spectrum",
}


def run_check(check_id: str, options: Optional[CheckOptions] = None) -> CheckResult:
    """
    Run one named suite.

    Args:
        check_id: A key of ``CHECKS`` or of ``CHECK_ALIASES``
        options: Suite knobs; defaults apply when omitted

    Raises:
        ParameterError: If ``check_id`` is unknown
    """
    check_id = CHECK_ALIASES.get(check_id, check_id)
    try:
        suite = CHECKS[check_id]
    except KeyError:
        known = ", ".join([*CHECKS, *CHECK_ALIASES])
        raise ParameterError(f"Unknown check '{check_id}'; known: {known}") from None
    logger.info(f"Running check {check_id}")
    result = suite(options or CheckOptions())
    logger.info(
        f"Check {check_id}: {result.cases} cases, "
        f"{'passed' if result.passed else f'{result.failure_count} failed'}"
    )
    return result
