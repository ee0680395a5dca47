"""
Named graph families.

Every builder validates its parameters and raises ``ParameterError`` on a
violation. ``FAMILIES`` registers the builders with their parameter names so
the command line can build any of them from flags or a ``"name:arg:arg"``
string.
"""

import logging
from functools import reduce
from math import gcd
from typing import Any, Callable, Dict, Iterable, List, Sequence, Tuple

from dl_cospectral.core.exceptions import ParameterError
from dl_cospectral.graphs.graph import Graph
from dl_cospectral.graphs.operators import add_edge, cartesian_product, line_graph

logger = logging.getLogger(__name__)

# Vertex labels of the named vertices of B_k
V0, V1, V2, V3, V4 = range(5)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def empty_graph(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    _require(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete bipartite graph needs parts >= 1, got {a}, {b}")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def bk_graph(k: int) -> Graph:
    """
    The bipartite host ``B_k`` on ``2k + 6`` vertices.

    Vertices 0..4 are ``v0..v4`` with edges ``v0v1``, ``v0v2`` and ``v2v3``.
    Vertices ``5..4+k`` are the leaves ``L`` on ``v0``; vertices
    ``5+k..5+2k`` form ``R``, each adjacent to ``v0``, ``v3`` and ``v4``.
    """
    _require(k >= 1, f"B_k needs k >= 1, got {k}")
    leaves = range(5, 5 + k)
    right = range(5 + k, 6 + 2 * k)
    edges = [(V0, V1), (V0, V2), (V2, V3)]
    edges += [(V0, leaf) for leaf in leaves]
    edges += [(r, w) for r in right for w in (V0, V3, V4)]
    return Graph(2 * k + 6, edges)


def bk_pair(k: int) -> Tuple[Graph, Graph]:
    """``(B_k + v1v3, B_k + v2v4)``."""
    host = bk_graph(k)
    return add_edge(host, V1, V3), add_edge(host, V2, V4)


def grow_bk(g: Graph, k: int) -> Graph:
    """
    Twin one leaf of ``L`` and one vertex of ``R`` of ``B_k``.

    The result is isomorphic to ``B_(k+1)`` (with a different labeling).
    """
    from dl_cospectral.constructions.twins import twin_vertex

    _require(g.order == 2 * k + 6, f"graph of order {g.order} is not B_{k}")
    return twin_vertex(twin_vertex(g, 5), 5 + k)


def hn_graph(n: int) -> Graph:
    """
    Outer ``2n``-cycle ``0..2n-1`` plus ``n`` inner vertices.

    Inner vertex ``2n + i - 1`` (for ``i = 1..n``) is adjacent to cycle
    vertices ``2i - 2``, ``2i - 1`` and ``2i mod 2n``.
    """
    _require(n >= 2, f"H_n needs n >= 2, got {n}")
    outer = 2 * n
    edges = [(v, (v + 1) % outer) for v in range(outer)]
    for i in range(1, n + 1):
        inner = outer + i - 1
        edges += [(inner, 2 * i - 2), (inner, 2 * i - 1), (inner, (2 * i) % outer)]
    return Graph(3 * n, edges)


def normalize_connection_set(n: int, connection_set: Iterable[int]) -> Tuple[int, ...]:
    """Map every jump ``s`` to ``min(s, n - s)``; jumps must lie in ``1..n-1``."""
    jumps = set()
    for s in connection_set:
        _require(1 <= s <= n - 1, f"jump {s} is outside 1..{n - 1} for a circulant of order {n}")
        jumps.add(min(s, n - s))
    _require(bool(jumps), "circulant connection set must not be empty")
    return tuple(sorted(jumps))


def circulant(n: int, connection_set: Iterable[int]) -> Graph:
    """
    Circulant graph on ``Z_n``; ``i ~ j`` when ``i - j`` or ``j - i`` is a jump.

    A disconnected result (``gcd`` of the jumps and ``n`` above 1) is built
    anyway and logged.
    """
    _require(n >= 3, f"circulant needs n >= 3, got {n}")
    jumps = normalize_connection_set(n, connection_set)
    if reduce(gcd, jumps, n) != 1:
        logger.warning(f"Circulant of order {n} with jumps {list(jumps)} is disconnected")
    return Graph(n, [(v, (v + s) % n) for v in range(n) for s in jumps])


def consecutive_circulant(n: int, r: int) -> Graph:
    _require(1 <= r <= n // 2, f"consecutive circulant needs 1 <= r <= {n // 2}, got {r}")
    return circulant(n, range(1, r + 1))


def consecutive_transmission(n: int, r: int) -> int:
    """Closed form of the (common) transmission of ``consecutive_circulant(n, r)``."""
    _require(n >= 3, f"consecutive circulant needs n >= 3, got {n}")
    _require(1 <= r <= n // 2, f"consecutive circulant needs 1 <= r <= {n // 2}, got {r}")
    q = (n - 1) // (2 * r)
    return (q + 1) * ((n - 1) - r * q)


def consecutive_wiener_index(n: int, r: int) -> int:
    return n * consecutive_transmission(n, r) // 2


def shrikhande() -> Graph:
    """Cayley graph on ``Z4 x Z4`` with jumps ``±(0,1)``, ``±(1,0)``, ``±(1,1)``; ``(a, b)`` is ``4a + b``."""
    jumps = [(0, 1), (1, 0), (1, 1)]
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in jumps:
                edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return Graph(16, edges)


def hamming(d: int, q: int) -> Graph:
    """``d``-fold Cartesian power of ``K_q``."""
    _require(d >= 1 and q >= 2, f"Hamming graph needs d >= 1 and q >= 2, got d={d}, q={q}")
    factor = complete_graph(q)
    graph = factor
    for _ in range(d - 1):
        graph = cartesian_product(graph, factor)
    return graph


def doob(m: int, n: int) -> Graph:
    """``m`` Shrikhande factors times ``hamming(n, 4)``."""
    _require(m >= 1 and n >= 0, f"Doob graph needs m >= 1 and n >= 0, got m={m}, n={n}")
    graph = shrikhande()
    for _ in range(m - 1):
        graph = cartesian_product(graph, shrikhande())
    if n:
        graph = cartesian_product(graph, hamming(n, 4))
    return graph


def triangular(m: int) -> Graph:
    """Line graph of ``K_m``."""
    _require(m >= 3, f"triangular graph needs m >= 3, got {m}")
    return line_graph(complete_graph(m))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def quadratic_residues(p: int) -> Tuple[int, ...]:
    return tuple(sorted({x * x % p for x in range(1, p)}))


def paley(p: int) -> Graph:
    """Paley graph on ``Z_p``; adjacent when the difference is a nonzero square."""
    _require(is_prime(p) and p % 4 == 1, f"Paley graph needs a prime p = 1 mod 4, got {p}")
    return circulant(p, quadratic_residues(p))


def _int_set(text: str) -> List[int]:
    return [int(part) for part in text.split(",") if part]


# name -> (builder, ((parameter name, parser), ...)) with parameters in call order
FAMILIES: Dict[str, Tuple[Callable[..., Any], Sequence[Tuple[str, Callable[[str], Any]]]]] = {
    "empty": (empty_graph, (("n", int),)),
    "complete": (complete_graph, (("n", int),)),
    "path": (path_graph, (("n", int),)),
    "cycle": (cycle_graph, (("n", int),)),
    "star": (star_graph, (("n", int),)),
    "complete-bipartite": (complete_bipartite_graph, (("a", int), ("b", int))),
    "bk": (bk_graph, (("k", int),)),
    "bk-pair": (bk_pair, (("k", int),)),
    "hn": (hn_graph, (("n", int),)),
    "circulant": (circulant, (("n", int), ("set", _int_set))),
    "consecutive-circulant": (consecutive_circulant, (("n", int), ("r", int))),
    "shrikhande": (shrikhande, ()),
    "hamming": (hamming, (("d", int), ("q", int))),
    "doob": (doob, (("m", int), ("n", int))),
    "triangular": (triangular, (("m", int),)),
    "paley": (paley, (("p", int),)),
}

FAMILY_PARAMETER_NAMES = tuple(sorted({name for _, params in FAMILIES.values() for name, _ in params}))


def family_parameters(name: str) -> Tuple[str, ...]:
    if name not in FAMILIES:
        raise ParameterError(f"Unknown family '{name}'; known: {', '.join(sorted(FAMILIES))}")
    return tuple(parameter for parameter, _ in FAMILIES[name][1])


def build_named_family(name: str, values: Dict[str, str]) -> Tuple[List[Graph], Dict[str, Any]]:
    """
    Build graphs of a family from named parameter strings.

    Args:
        name: Family name, a key of ``FAMILIES``
        values: Parameter name to raw string, e.g. ``{"n": "16", "set": "1,2,8"}``;
            names the family does not take must be absent

    Returns:
        Tuple[List[Graph], Dict[str, Any]]: The graphs (two for pair
        families) and a provenance record ``{"family", "parameters"}``

    Raises:
        ParameterError: On an unknown family, a missing, unexpected or
            malformed parameter, or parameters the family rejects
    """
    names = family_parameters(name)
    missing = [parameter for parameter in names if parameter not in values]
    extra = sorted(set(values) - set(names))
    if missing or extra:
        raise ParameterError(
            f"family '{name}' takes parameters ({', '.join(names) or 'none'}); "
            f"missing {missing or 'none'}, unexpected {extra or 'none'}"
        )
    builder, parsers = FAMILIES[name]
    try:
        args = {parameter: parse(values[parameter]) for parameter, parse in parsers}
    except ValueError as error:
        raise ParameterError(f"bad parameter for family '{name}': {error}") from error
    built = builder(*args.values())
    graphs = list(built) if isinstance(built, tuple) else [built]
    return graphs, {"family": name, "parameters": args}


def build_family(text: str) -> Tuple[List[Graph], Dict[str, Any]]:
    """Build graphs from a positional ``"name:arg:arg"`` string, e.g. ``"circulant:16:1,2,8"``."""
    name, *raw = text.split(":")
    names = family_parameters(name)
    if len(raw) != len(names):
        raise ParameterError(f"family '{name}' takes {len(names)} parameter(s), got {len(raw)}")
    return build_named_family(name, dict(zip(names, raw)))
