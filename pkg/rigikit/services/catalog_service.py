"""
Catalog of the named figure graphs.

Each entry is transcribed from its figure with block labels: "23" is vertex 3
of block 2 (a K4 or K5 in the clique-ring figures), "a4" is vertex 4 of side a.
The asserted facts are re-checked with the exact deciders when an entry is
loaded, so a wrong transcription fails loudly.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Sequence, Set, Tuple

from sympy import Poly, sympify

from rigikit.errors import CatalogFactError, CatalogLookupError
from rigikit.models.catalog_models import (
    AssertedFact,
    CatalogEntry,
    CatalogSummary,
    FactCheck,
    FactKind,
    FactValue,
)
from rigikit.models.graph_models import SimpleGraph
from rigikit.services.connectivity_service import edge_connectivity
from rigikit.services.graph6_service import emit_graph6
from rigikit.services.graph_service import is_bipartite, regular_degree
from rigikit.services.packing_service import body_hinge_globally_rigid, body_hinge_rigid
from rigikit.services.rigidity_service import is_globally_rigid_2d, is_rigid_2d
from rigikit.services.spectral_service import characteristic_polynomial, is_ramanujan, x
from rigikit.services.surface_service import redundantly_rigid_on_cylinder

logger = logging.getLogger(__name__)

_validated: Set[str] = set()

# Graph plus the figure label of each vertex
Drawing = Tuple[SimpleGraph, Tuple[str, ...]]


# Transcription helpers

def _blocks(block_ids: Iterable[object], size: int) -> Tuple[List[str], List[str]]:
    """Labels and clique edges of disjoint K_size blocks."""
    labels: List[str] = []
    edges: List[str] = []
    for block in block_ids:
        members = [f"{block}{i}" for i in range(1, size + 1)]
        labels.extend(members)
        edges.extend(f"{a}-{b}" for a, b in combinations(members, 2))
    return labels, edges


def _side(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, count + 1)]


def _pairs(prefix: str, text: str) -> List[str]:
    """Expand "1-2 1-5" into ["a1-a2", "a1-a5"] for prefix "a"."""
    out = []
    for token in text.split():
        u, v = token.split("-")
        out.append(f"{prefix}{u}-{prefix}{v}")
    return out


def _build(labels: Sequence[str], edges: Iterable[str]) -> Drawing:
    index = {label: i for i, label in enumerate(labels)}
    pairs = []
    for token in edges:
        u, v = token.split("-")
        pairs.append((index[u], index[v]))
    return SimpleGraph(len(labels), tuple(pairs)), tuple(labels)


def _ring_figure(block_ids: Sequence[object], size: int, links: str) -> Drawing:
    labels, edges = _blocks(block_ids, size)
    return _build(labels, edges + links.split())


def _seven_block(prefix: str) -> Tuple[List[str], List[str]]:
    """Seven vertices; 1, 2 and 5 are joined to 3, 4, 6 and 7."""
    edges = [f"{prefix}{a}-{prefix}{b}" for a in (1, 2, 5) for b in (3, 4, 6, 7)]
    return _side(prefix, 7), edges


# Figure 3 left half: a bridge endpoint 1 and a 4-vertex block
_CUBIC_HALF = "1-2 1-5 2-3 2-4 3-4 3-5 4-5"
# Figure 3 right half: K5 minus the edge 3-4
_QUARTIC_HALF = "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-5 4-5"


def _fig1() -> Drawing:
    return _ring_figure(
        range(6),
        5,
        "14-23 24-33 34-43 44-53 54-13 "
        "01-51 02-11 03-21 04-31 05-41 "
        "12-45 22-55 32-15 42-25 52-35",
    )


def _fig3_left() -> Drawing:
    labels = _side("a", 5) + _side("b", 5)
    edges = _pairs("a", _CUBIC_HALF) + _pairs("b", _CUBIC_HALF) + ["a1-b1"]
    return _build(labels, edges)


def _fig3_right() -> Drawing:
    labels = _side("a", 5) + _side("b", 5)
    edges = _pairs("a", _QUARTIC_HALF) + _pairs("b", _QUARTIC_HALF) + ["a3-b4", "a4-b3"]
    return _build(labels, edges)


def _fig4_b() -> Drawing:
    labels = _side("a", 5) + _side("b", 6)
    b_side = "1-2 1-4 1-5 1-6 2-3 2-5 2-6 3-5 3-6 4-5 4-6"
    edges = _pairs("a", _QUARTIC_HALF) + _pairs("b", b_side) + ["a3-b4", "a4-b3"]
    return _build(labels, edges)


def _fig4_c() -> Drawing:
    # 11-31 and 21-41 complete the drawing to a 4-regular graph
    return _ring_figure(
        range(1, 5), 4, "12-24 22-34 32-44 42-14 13-33 23-43 11-31 21-41"
    )


def _fig4_d() -> Drawing:
    return _ring_figure(
        range(1, 5), 4, "12-21 22-31 32-41 42-11 13-24 23-34 33-44 43-14"
    )


def _fig5_a() -> Drawing:
    a_labels, a_edges = _seven_block("a")
    b_labels, b_edges = _seven_block("b")
    links = "c1-a3 c1-a6 c1-b3 c1-b6 c2-a4 c2-a7 c2-b4 c2-b7"
    labels = a_labels + b_labels + _side("c", 2)
    return _build(labels, a_edges + b_edges + links.split())


def _fig5_b() -> Drawing:
    a_labels, a_edges = _seven_block("a")
    b_labels, b_edges = _seven_block("b")
    d_edges = _pairs(
        "d", "1-4 3-2 1-6 1-8 3-6 3-8 5-2 5-4 5-6 5-8 7-2 7-4 7-6 7-8"
    )
    links = "a4-b4 a7-b7 a3-d3 a6-d1 b3-d4 b6-d2"
    return _build(
        a_labels + b_labels + _side("d", 8), a_edges + b_edges + d_edges + links.split()
    )


def _fig6() -> Drawing:
    labels: List[str] = []
    edges: List[str] = []
    for block in range(1, 5):
        block_labels, block_edges = _seven_block(str(block))
        labels.extend(block_labels)
        edges.extend(block_edges)
    links = (
        "13-c2 16-c3 14-c1 17-c4 23-c3 26-c4 24-c2 27-c1 "
        "33-c4 36-c1 34-c3 37-c2 43-c1 46-c2 44-c4 47-c3"
    )
    return _build(labels + _side("c", 4), edges + links.split())


def _fig7_c() -> Drawing:
    links = []
    for i in range(1, 7):
        nxt, skip = i % 6 + 1, (i + 1) % 6 + 1
        links.append(f"{i}2-{nxt}1")
        links.append(f"{i}3-{skip}4")
    return _ring_figure(range(1, 7), 4, " ".join(links))


def _fig7_d() -> Drawing:
    # As drawn, the inner and outer 4-cycles contract to C8(1,2), which is not
    # Ramanujan. Inner blocks 1-4 are joined to every outer block 5-8 instead,
    # so the blocks contract to K4,4.
    return _ring_figure(
        range(1, 9),
        4,
        "13-71 14-81 23-82 24-51 33-52 34-61 43-62 44-72 "
        "11-53 21-63 31-73 41-83 12-64 22-74 32-84 42-54",
    )


def _fig7_e() -> Drawing:
    return _ring_figure(
        range(9),
        4,
        "13-02 33-04 23-03 43-01 52-61 62-71 72-81 82-51 "
        "12-34 22-44 21-74 31-73 14-53 42-54 11-64 24-63 41-83 32-84",
    )


def _fig7_f() -> Drawing:
    return _ring_figure(
        range(1, 11),
        4,
        "14-64 13-24 12-31 11-71 21-54 22-44 34-41 33-51 "
        "62-93 63-84 73-82 72-91 61-43 81-23 94-32 74-52 "
        "101-53 102-92 103-83 104-42",
    )


def _fig8(b_side: str) -> Callable[[], Drawing]:
    def build() -> Drawing:
        labels = _side("a", 5) + _side("b", 7)
        edges = _pairs("a", _CUBIC_HALF) + _pairs("b", b_side) + ["a1-b7"]
        return _build(labels, edges)

    return build


def _fig9_a() -> Drawing:
    half = "1-2 1-4 3-2 3-6 5-4 5-6 1-7 3-7 7-9 6-9 2-8 4-8 8-10 5-10"
    labels = _side("a", 10) + _side("b", 10)
    edges = _pairs("a", half) + _pairs("b", half) + ["a9-b9", "a10-b10"]
    return _build(labels, edges)


def _fig9_b() -> Drawing:
    a_side = (
        "1-2 1-4 3-2 3-4 5-6 1-7 3-9 5-7 5-9 7-11 9-11 2-8 4-10 6-8 6-10 8-12 10-12"
    )
    b_side = "1-2 1-4 1-6 3-2 3-4 3-6 5-2 5-4 5-7 6-8 7-8"
    labels = _side("a", 12) + _side("b", 8)
    edges = _pairs("a", a_side) + _pairs("b", b_side) + ["a11-b8", "a12-b7"]
    return _build(labels, edges)


# Facts

def _facts(**values: FactValue) -> Tuple[AssertedFact, ...]:
    return tuple(AssertedFact(FactKind(kind), value) for kind, value in values.items())


def _not_rigid_ramanujan(n: int) -> Tuple[AssertedFact, ...]:
    return _facts(vertex_count=n, regular_degree=4, ramanujan=True, rigid_2d=False)


def _bipartite_rigid_not_gr(n: int) -> Tuple[AssertedFact, ...]:
    return _facts(
        vertex_count=n,
        regular_degree=4,
        bipartite=True,
        ramanujan=True,
        rigid_2d=True,
        globally_rigid_2d=False,
    )


def _vt_not_rigid(n: int) -> Tuple[AssertedFact, ...]:
    return _not_rigid_ramanujan(n) + _facts(vertex_transitive=True)


def _cubic_ramanujan(n: int, edge_conn: int) -> Tuple[AssertedFact, ...]:
    return _facts(
        vertex_count=n, regular_degree=3, ramanujan=True, edge_connectivity=edge_conn
    )


_FIG3_LEFT_FACTS = _facts(
    vertex_count=10,
    edge_count=15,
    regular_degree=3,
    edge_connectivity=1,
    ramanujan=True,
) + (
    AssertedFact(FactKind.CHARPOLY_DIVISIBLE_BY, True, "x**3 - 7*x - 2"),
    AssertedFact(FactKind.BODY_HINGE_RIGID, False, 2),
    AssertedFact(FactKind.BODY_HINGE_RIGID, False, 3),
)

_FIG3_RIGHT_FACTS = _facts(
    vertex_count=10, regular_degree=4, edge_connectivity=2, ramanujan=True
) + (
    AssertedFact(FactKind.CHARPOLY_SHARES_ROOT_WITH, True, "x**2 - x - 8"),
    AssertedFact(FactKind.BODY_HINGE_GLOBALLY_RIGID, False, 2),
    AssertedFact(FactKind.CYLINDER_REDUNDANTLY_RIGID, False),
)

Builder = Callable[[], Drawing]

_FIGURES: Dict[str, Tuple[str, str, Builder, Tuple[AssertedFact, ...]]] = {}


def _register(
    name: str,
    figure: str,
    description: str,
    build: Builder,
    facts: Tuple[AssertedFact, ...],
) -> None:
    _FIGURES[name] = (figure, description, build, facts)


def _fig2_left() -> Drawing:
    return _ring_figure(range(1, 4), 4, "12-21 22-31 32-11 13-24 23-34 33-14")


def _fig2_right() -> Drawing:
    return _ring_figure(
        range(1, 6), 4, "12-21 22-31 32-41 42-51 52-11 13-34 23-44 33-54 43-14 53-24"
    )


_register(
    "fig1_special30",
    "1",
    "5-regular vertex-transitive Ramanujan graph, rigid but not globally rigid",
    _fig1,
    _facts(
        vertex_count=30,
        regular_degree=5,
        vertex_transitive=True,
        ramanujan=True,
        rigid_2d=True,
        globally_rigid_2d=False,
    ),
)
_register(
    "fig2_ring3K4",
    "2 left",
    "Ring of three K4 blocks, vertex-transitive, rigid but not globally rigid",
    _fig2_left,
    _facts(
        vertex_count=12,
        regular_degree=4,
        vertex_transitive=True,
        rigid_2d=True,
        globally_rigid_2d=False,
    ),
)
_register(
    "fig2_ring5K4",
    "2 right",
    "Ring of five K4 blocks, vertex-transitive and not rigid",
    _fig2_right,
    _facts(vertex_count=20, regular_degree=4, vertex_transitive=True, rigid_2d=False),
)
_register(
    "fig3_cubic_bridge10",
    "3 left",
    "Cubic Ramanujan graph with edge connectivity one",
    _fig3_left,
    _FIG3_LEFT_FACTS,
)
_register(
    "fig3_quartic_cut2_10",
    "3 right",
    "4-regular Ramanujan graph with edge connectivity two",
    _fig3_right,
    _FIG3_RIGHT_FACTS,
)

for _name, _build_fn, _n in (
    ("fig4_a", _fig3_right, 10),
    ("fig4_b", _fig4_b, 11),
    ("fig4_c", _fig4_c, 16),
    ("fig4_d", _fig4_d, 16),
):
    _register(
        _name,
        "4",
        f"4-regular Ramanujan graph on {_n} vertices that is not rigid",
        _build_fn,
        _not_rigid_ramanujan(_n),
    )

_register(
    "fig5_a",
    "5 left",
    "Bipartite 4-regular Ramanujan graph, rigid but not globally rigid",
    _fig5_a,
    _bipartite_rigid_not_gr(16),
)
_register(
    "fig5_b",
    "5 right",
    "Bipartite 4-regular Ramanujan graph, rigid but not globally rigid",
    _fig5_b,
    _bipartite_rigid_not_gr(22),
)
_register(
    "fig6_bip28",
    "6",
    "Bipartite 4-regular Ramanujan graph on 32 vertices that is not rigid",
    _fig6,
    _not_rigid_ramanujan(32) + _facts(bipartite=True),
)

for _name, _build_fn, _n in (
    ("fig7_a", _fig4_d, 16),
    ("fig7_b", _fig2_right, 20),
    ("fig7_c", _fig7_c, 24),
    ("fig7_d", _fig7_d, 32),
    ("fig7_e", _fig7_e, 36),
    ("fig7_f", _fig7_f, 40),
):
    _register(
        _name,
        "7",
        f"Non-rigid vertex-transitive 4-regular Ramanujan graph of K4 blocks on {_n}"
        " vertices",
        _build_fn,
        _vt_not_rigid(_n),
    )

for _name, _b_side in (
    ("fig8_a", "1-2 1-3 2-3 2-5 3-6 4-5 4-6 5-6 1-7 4-7"),
    ("fig8_b", "1-3 2-3 1-4 2-5 3-6 4-5 4-6 5-6 1-7 2-7"),
    ("fig8_c", "1-4 1-6 3-2 3-4 3-6 5-2 5-4 5-6 1-7 2-7"),
):
    _register(
        _name,
        "8",
        "Cubic Ramanujan graph on 12 vertices with a bridge",
        _fig8(_b_side),
        _cubic_ramanujan(12, 1),
    )

_register(
    "fig9_a",
    "9 left",
    "Cubic Ramanujan graph on 20 vertices with edge connectivity two",
    _fig9_a,
    _cubic_ramanujan(20, 2),
)
_register(
    "fig9_b",
    "9 right",
    "Cubic Ramanujan graph on 20 vertices with edge connectivity two",
    _fig9_b,
    _cubic_ramanujan(20, 2),
)


# Fact evaluation

def _polynomial(text: str) -> Poly:
    return Poly(sympify(text, locals={"x": x}), x)


def evaluate_fact(graph: SimpleGraph, fact: AssertedFact) -> FactValue:
    """
    Compute the actual value of an asserted fact.

    Args:
        graph: Catalog graph
        fact: Fact to evaluate; polynomial facts read `argument` as a polynomial
            in x, dimension facts read it as d

    Returns:
        The computed boolean or integer
    """
    kind = fact.kind
    if kind == FactKind.VERTEX_COUNT:
        return graph.n
    if kind == FactKind.EDGE_COUNT:
        return graph.m
    if kind == FactKind.REGULAR_DEGREE:
        degree = regular_degree(graph)
        return -1 if degree is None else degree
    if kind == FactKind.EDGE_CONNECTIVITY:
        return edge_connectivity(graph)[0]
    if kind == FactKind.BIPARTITE:
        return is_bipartite(graph)
    if kind == FactKind.RAMANUJAN:
        return is_ramanujan(graph)
    if kind == FactKind.RIGID_2D:
        return is_rigid_2d(graph)
    if kind == FactKind.GLOBALLY_RIGID_2D:
        return is_globally_rigid_2d(graph)
    if kind == FactKind.VERTEX_TRANSITIVE:
        from rigikit.services.canonical_service import is_vertex_transitive

        return is_vertex_transitive(graph)
    if kind == FactKind.BODY_HINGE_RIGID:
        return body_hinge_rigid(graph, int(fact.argument or 2))
    if kind == FactKind.BODY_HINGE_GLOBALLY_RIGID:
        return body_hinge_globally_rigid(graph, int(fact.argument or 2))
    if kind == FactKind.CYLINDER_REDUNDANTLY_RIGID:
        return redundantly_rigid_on_cylinder(graph)

    charpoly = characteristic_polynomial(graph)
    target = _polynomial(str(fact.argument))
    if kind == FactKind.CHARPOLY_DIVISIBLE_BY:
        return charpoly.rem(target).is_zero
    if kind == FactKind.CHARPOLY_SHARES_ROOT_WITH:
        return charpoly.gcd(target).degree() > 0
    raise ValueError(f"Unknown fact kind {kind}")


def check_entry(entry: CatalogEntry) -> List[FactCheck]:
    """Evaluate every asserted fact of an entry."""
    results = []
    for fact in entry.facts:
        actual = evaluate_fact(entry.graph, fact)
        results.append(
            FactCheck(
                name=entry.name,
                fact=str(fact),
                expected=fact.expected,
                actual=actual,
                passed=actual == fact.expected,
            )
        )
    return results


# Lookup

def catalog_names() -> List[str]:
    return list(_FIGURES)


@lru_cache(maxsize=None)
def _load(name: str) -> CatalogEntry:
    figure, description, build, facts = _FIGURES[name]
    graph, labels = build()
    return CatalogEntry(name, figure, description, graph, labels, facts)


def catalog_get(name: str, validate: bool = True) -> CatalogEntry:
    """
    Look up a figure graph by name.

    Args:
        name: Catalog name, e.g. "fig3_cubic_bridge10"
        validate: Check the asserted facts on first load

    Returns:
        CatalogEntry

    Raises:
        CatalogLookupError: If the name is unknown
        CatalogFactError: If an asserted fact does not hold
    """
    if name not in _FIGURES:
        raise CatalogLookupError(f"Unknown catalog graph {name!r}")
    entry = _load(name)
    if validate and name not in _validated:
        failed = [check for check in check_entry(entry) if not check.passed]
        if failed:
            details = ", ".join(f"{c.fact} (got {c.actual})" for c in failed)
            raise CatalogFactError(f"Catalog graph {name} fails: {details}")
        _validated.add(name)
        logger.info("Catalog graph %s validated (%d facts)", name, len(entry.facts))
    return entry


def verify_catalog() -> List[FactCheck]:
    """Evaluate every asserted fact of every entry, without raising."""
    results: List[FactCheck] = []
    for name in catalog_names():
        entry = _load(name)
        checks = check_entry(entry)
        if all(check.passed for check in checks):
            _validated.add(name)
        results.extend(checks)
    return results


def summarize(entry: CatalogEntry) -> CatalogSummary:
    return CatalogSummary(
        name=entry.name,
        figure=entry.figure,
        description=entry.description,
        n=entry.graph.n,
        m=entry.graph.m,
        graph6=emit_graph6(entry.graph),
        facts=[str(fact) for fact in entry.facts],
    )
