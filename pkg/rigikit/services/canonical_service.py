"""Canonical labeling, automorphisms and vertex-transitivity.

Individualization-refinement: the ordered partition is refined to the coarsest
equitable partition, the first smallest non-singleton cell is individualized
vertex by vertex, and the lexicographically smallest adjacency certificate
over all leaves selects the canonical labeling. Automorphisms found at equal
leaves prune children in the same orbit.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from rigikit.config import settings
from rigikit.errors import EnumerationGuardError
from rigikit.models.census_models import AutomorphismSearch, CanonicalForm
from rigikit.models.graph_models import GraphLike, SimpleGraph, support_of
from rigikit.services.graph6_service import emit_graph6
from rigikit.services.graph_service import regular_degree, to_networkx

logger = logging.getLogger(__name__)

Cells = List[List[int]]
Certificate = Tuple[int, ...]


def _initial_cells(n: int, colors: Optional[Sequence[int]]) -> Cells:
    if colors is None:
        return [list(range(n))] if n else []
    if len(colors) != n:
        raise ValueError("One color per vertex is required")
    groups: Dict[int, List[int]] = {}
    for v, color in enumerate(colors):
        groups.setdefault(color, []).append(v)
    return [groups[color] for color in sorted(groups)]


def refine(masks: Sequence[int], cells: Cells) -> Cells:
    """
    Coarsest equitable refinement of an ordered partition.

    Each round splits every cell by the vector of neighbor counts into all
    current cells; sub-cells are ordered by that vector, so the result depends
    only on the graph and the input order of cells.
    """
    while True:
        cell_masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            cell_masks.append(mask)

        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                signature = tuple((masks[v] & mask).bit_count() for mask in cell_masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            split = True
            refined.extend(groups[key] for key in sorted(groups))
        cells = refined
        if not split:
            return cells


@dataclass
class _SearchState:
    masks: Sequence[int]
    first: Optional[Tuple[Certificate, List[int]]] = None
    best: Optional[Tuple[Certificate, List[int]]] = None
    generators: List[Tuple[int, ...]] = field(default_factory=list)
    leaves: int = 0


def _certificate(masks: Sequence[int], order: List[int]) -> Certificate:
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        neighbors = masks[v]
        while neighbors:
            low = neighbors & -neighbors
            row |= 1 << position[low.bit_length() - 1]
            neighbors ^= low
        rows.append(row)
    return tuple(rows)


def _automorphism(source: List[int], target: List[int]) -> Tuple[int, ...]:
    image = [0] * len(source)
    for u, v in zip(source, target):
        image[u] = v
    return tuple(image)


def _visit_leaf(state: _SearchState, cells: Cells) -> None:
    order = [cell[0] for cell in cells]
    certificate = _certificate(state.masks, order)
    state.leaves += 1
    if state.first is None or state.best is None:
        state.first = (certificate, order)
        state.best = (certificate, order)
        return
    if certificate == state.first[0]:
        state.generators.append(_automorphism(state.first[1], order))
    elif certificate == state.best[0]:
        state.generators.append(_automorphism(state.best[1], order))
    elif certificate < state.best[0]:
        state.best = (certificate, order)


def _same_orbit(
    generators: List[Tuple[int, ...]], path: List[int], v: int, seen: List[int]
) -> bool:
    """Whether v meets a seen vertex under automorphisms fixing the path."""
    usable = [g for g in generators if all(g[p] == p for p in path)]
    if not usable:
        return False
    orbits = UnionFind()
    for g in usable:
        for u, w in enumerate(g):
            if u != w:
                orbits.union(u, w)
    return any(orbits[v] == orbits[u] for u in seen)


def _search(state: _SearchState, cells: Cells, path: List[int]) -> None:
    cells = refine(state.masks, cells)
    if len(cells) == len(state.masks):
        _visit_leaf(state, cells)
        return

    size = min(len(cell) for cell in cells if len(cell) > 1)
    index = next(i for i, cell in enumerate(cells) if len(cell) == size)
    target = cells[index]
    explored: List[int] = []
    for v in target:
        if explored and _same_orbit(state.generators, path, v, explored):
            continue
        explored.append(v)
        child = cells[:index] + [[v], [w for w in target if w != v]] + cells[index + 1:]
        _search(state, child, path + [v])


def _run_search(masks: Sequence[int], colors: Optional[Sequence[int]]) -> _SearchState:
    state = _SearchState(masks)
    _search(state, _initial_cells(len(masks), colors), [])
    return state


def canonical_masks(
    masks: Sequence[int], colors: Optional[Sequence[int]] = None
) -> Tuple[Certificate, Tuple[int, ...]]:
    """
    Canonical adjacency rows of a graph given as neighbor bitmasks.

    Returns:
        (rows, order): rows[i] is the neighbor mask of canonical position i over
        canonical positions, and order[i] is the input vertex placed at position i
    """
    if not masks:
        return (), ()
    state = _run_search(masks, colors)
    assert state.best is not None
    return state.best[0], tuple(state.best[1])


def automorphism_search(
    graph: GraphLike, colors: Optional[Sequence[int]] = None
) -> AutomorphismSearch:
    """
    Canonical form plus automorphism generators of the simple support.

    Args:
        graph: Graph (multigraphs use their support)
        colors: Optional vertex colors; only color-preserving maps count

    Returns:
        AutomorphismSearch with the canonical form, generators and their orbits
    """
    simple = support_of(graph)
    n = simple.n
    if n == 0:
        return AutomorphismSearch(CanonicalForm(emit_graph6(simple), ()), (), (), 0)

    state = _run_search(simple.adjacency_masks, colors)
    assert state.best is not None
    order = state.best[1]
    labeling = [0] * n
    for position, v in enumerate(order):
        labeling[v] = position
    word = emit_graph6(simple.relabel(labeling))
    if colors is not None:
        # Colors sorted by canonical position keep colored forms apart
        word = word + ":" + ",".join(str(colors[v]) for v in order)

    orbit_sets = UnionFind(range(n))
    for g in state.generators:
        for u, w in enumerate(g):
            orbit_sets.union(u, w)
    orbits = tuple(sorted(tuple(sorted(s)) for s in orbit_sets.to_sets()))
    return AutomorphismSearch(
        CanonicalForm(word, tuple(labeling)),
        tuple(state.generators),
        orbits,
        state.leaves,
    )


def canonical_form(
    graph: GraphLike, colors: Optional[Sequence[int]] = None
) -> CanonicalForm:
    """
    Isomorphism-invariant graph6 word.

    Args:
        graph: Graph
        colors: Optional vertex colors

    Returns:
        CanonicalForm, equal for two inputs iff they are (color-preservingly) isomorphic
    """
    return automorphism_search(graph, colors).form


def are_isomorphic(first: GraphLike, second: GraphLike) -> bool:
    if first.n != second.n or first.m != second.m:
        return False
    return canonical_form(first) == canonical_form(second)


def _vertex_invariant(graph: SimpleGraph) -> List[Tuple[int, int]]:
    triangles = nx.triangles(to_networkx(graph))
    return [(graph.degree(v), triangles[v]) for v in range(graph.n)]


def automorphism_orbits(graph: GraphLike) -> Tuple[Tuple[int, ...], ...]:
    """
    Vertex orbits of the automorphism group.

    Generator orbits from the canonical search are merged further by comparing
    canonical forms with a single vertex marked.
    """
    simple = support_of(graph)
    search = automorphism_search(simple)
    merged = UnionFind(range(simple.n))
    for orbit in search.orbits:
        merged.union(*orbit)

    marked: Dict[int, CanonicalForm] = {}

    def marked_form(v: int) -> CanonicalForm:
        if v not in marked:
            colors = [1 if w == v else 0 for w in range(simple.n)]
            marked[v] = canonical_form(simple, colors)
        return marked[v]

    representatives = [orbit[0] for orbit in search.orbits]
    for i, u in enumerate(representatives):
        for w in representatives[i + 1:]:
            if merged[u] != merged[w] and marked_form(u) == marked_form(w):
                merged.union(u, w)
    return tuple(sorted(tuple(sorted(s)) for s in merged.to_sets()))


def is_vertex_transitive(graph: GraphLike) -> bool:
    """
    Whether the automorphism group acts transitively on the vertices.

    Raises:
        EnumerationGuardError: If n exceeds the configured vertex-transitivity guard
    """
    simple = support_of(graph)
    limit = settings.vertex_transitive_max_n
    if simple.n > limit:
        raise EnumerationGuardError(
            f"Vertex-transitivity test limited to n <= {limit}, got {simple.n}", limit
        )
    if simple.n <= 1:
        return True
    if regular_degree(simple) is None:
        return False
    if len(set(_vertex_invariant(simple))) > 1:
        return False

    search = automorphism_search(simple)
    if len(search.orbits) == 1:
        return True
    reference = canonical_form(simple, [1 if w == 0 else 0 for w in range(simple.n)])
    for orbit in search.orbits:
        if 0 in orbit:
            continue
        colors = [1 if w == orbit[0] else 0 for w in range(simple.n)]
        if canonical_form(simple, colors) != reference:
            return False
    logger.debug("Vertex-transitivity settled by marked canonical forms")
    return True
