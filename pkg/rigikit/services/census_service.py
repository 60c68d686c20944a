"""Small-order enumeration of regular graphs and census tables."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from rigikit.config import settings
from rigikit.errors import DomainError, EnumerationGuardError
from rigikit.models.census_models import CensusCounts, CensusFilters, CensusRow
from rigikit.models.graph_models import SimpleGraph
from rigikit.services.canonical_service import (
    canonical_form,
    canonical_masks,
    is_vertex_transitive,
)
from rigikit.services.connectivity_service import edge_connectivity
from rigikit.services.graph6_service import emit_graph6, parse_graph6
from rigikit.services.graph_service import is_connected
from rigikit.services.rigidity_service import is_globally_rigid_2d, is_rigid_2d
from rigikit.services.spectral_service import is_ramanujan

logger = logging.getLogger(__name__)

Masks = Tuple[int, ...]


# Enumeration

def _masks_to_graph(masks: Sequence[int]) -> SimpleGraph:
    n = len(masks)
    return SimpleGraph(
        n,
        tuple((u, v) for u in range(n) for v in range(u + 1, n) if (masks[u] >> v) & 1),
    )


def _components(masks: Sequence[int]) -> List[int]:
    """Component bitmasks."""
    n = len(masks)
    unseen = (1 << n) - 1
    components = []
    while unseen:
        frontier = unseen & -unseen
        component = 0
        while frontier:
            component |= frontier
            reach = 0
            bits = frontier
            while bits:
                low = bits & -bits
                reach |= masks[low.bit_length() - 1]
                bits ^= low
            frontier = reach & ~component
        components.append(component)
        unseen &= ~component
    return components


def _feasible(
    masks: Sequence[int], k: int, sides: Optional[Sequence[int]], connected: bool
) -> bool:
    """Degree deficits can still be met and no saturated component closes early."""
    n = len(masks)
    degrees = [mask.bit_count() for mask in masks]
    unsaturated = 0
    for v in range(n):
        if degrees[v] < k:
            unsaturated |= 1 << v

    side_deficit = [0, 0]
    for v in range(n):
        deficit = k - degrees[v]
        if deficit == 0:
            continue
        partners = unsaturated & ~masks[v] & ~(1 << v)
        if sides is not None:
            partners &= _side_mask(sides, 1 - sides[v])
            side_deficit[sides[v]] += deficit
        if partners.bit_count() < deficit:
            return False
    if sides is not None and side_deficit[0] != side_deficit[1]:
        return False

    if connected:
        full = (1 << n) - 1
        for component in _components(masks):
            if component != full and not component & unsaturated:
                return False
    return True


def _side_mask(sides: Sequence[int], side: int) -> int:
    mask = 0
    for v, s in enumerate(sides):
        if s == side:
            mask |= 1 << v
    return mask


def _children(
    masks: Masks, k: int, sides: Optional[Sequence[int]], connected: bool
) -> Iterator[Masks]:
    n = len(masks)
    degrees = [mask.bit_count() for mask in masks]
    unsaturated = [v for v in range(n) if degrees[v] < k]
    v = min(unsaturated, key=lambda u: (-degrees[u], u))
    candidates = [
        w
        for w in unsaturated
        if w != v
        and not (masks[v] >> w) & 1
        and (sides is None or sides[w] != sides[v])
    ]
    for chosen in combinations(candidates, k - degrees[v]):
        child = list(masks)
        for w in chosen:
            child[v] |= 1 << w
            child[w] |= 1 << v
        if _feasible(child, k, sides, connected):
            yield tuple(child)


def _canonical_state(
    masks: Masks, sides: Optional[Sequence[int]]
) -> Tuple[Masks, Optional[Tuple[int, ...]]]:
    rows, order = canonical_masks(masks, sides)
    if sides is None:
        return rows, None
    return rows, tuple(sides[v] for v in order)


def _check_request(n: int, k: int, bipartite: bool, force: bool) -> None:
    if n < 1 or k < 0:
        raise DomainError("Census needs n >= 1 and k >= 0")
    if k >= n:
        raise DomainError(f"A {k}-regular graph needs more than {k} vertices")
    if (n * k) % 2:
        raise DomainError(f"No {k}-regular graph on {n} vertices: n*k is odd")
    if bipartite and (n % 2 or 2 * k > n):
        raise DomainError(f"No bipartite {k}-regular graph on {n} vertices")
    limit = settings.enumeration_limit(k, bipartite)
    if n > limit and not force:
        raise EnumerationGuardError(
            f"Enumeration of n={n}, k={k} exceeds the guard n <= {limit}; use force",
            limit,
        )


def _enumerate_direct(
    n: int, k: int, connected: bool, bipartite: bool
) -> Iterator[SimpleGraph]:
    sides: Optional[Tuple[int, ...]] = None
    if bipartite:
        sides = tuple(0 if v < n // 2 else 1 for v in range(n))

    start: Masks = tuple([0] * n)
    if k == 0:
        if not connected or n == 1:
            yield SimpleGraph(n)
        return

    seen: Set[Tuple[Masks, Optional[Tuple[int, ...]]]] = set()
    emitted: Set[Masks] = set()
    level: List[Tuple[Masks, Optional[Tuple[int, ...]]]] = [(start, sides)]
    depth = 0
    while level:
        next_level = []
        for masks, state_sides in level:
            if all(mask.bit_count() == k for mask in masks):
                # Bipartite leaves are deduplicated without side colors
                key, _ = canonical_masks(masks) if bipartite else (masks, None)
                if key not in emitted:
                    emitted.add(key)
                    yield _masks_to_graph(key)
                continue
            for child in _children(masks, k, state_sides, connected):
                state = _canonical_state(child, state_sides)
                if state not in seen:
                    seen.add(state)
                    next_level.append(state)
        depth += 1
        logger.info(
            "Census n=%d k=%d: level %d holds %d states", n, k, depth, len(next_level)
        )
        level = next_level


def enumerate_regular(
    n: int,
    k: int,
    connected: bool = True,
    bipartite: bool = False,
    force: bool = False,
) -> Iterator[SimpleGraph]:
    """
    One representative per isomorphism class of k-regular graphs on n vertices.

    Vertices are saturated one at a time (largest degree first); partial graphs
    are deduplicated by canonical form level by level. Dense non-bipartite
    requests enumerate the (n-1-k)-regular complements instead.

    Args:
        n: Vertex count
        k: Degree
        connected: Only connected graphs
        bipartite: Only bipartite graphs
        force: Ignore the configured size guard

    Yields:
        SimpleGraph representatives in canonical labeling

    Raises:
        DomainError: If n*k is odd or no such graph can exist
        EnumerationGuardError: If n exceeds the guard and force is False
    """
    _check_request(n, k, bipartite, force)
    if not bipartite and 2 * k > n - 1:
        for complement in _enumerate_direct(n, n - 1 - k, False, False):
            graph = complement.complement()
            if connected and not is_connected(graph):
                continue
            yield parse_graph6(canonical_form(graph).word)
        return
    yield from _enumerate_direct(n, k, connected, bipartite)


# Classification

def _classify(word: str) -> Dict[str, object]:
    graph = parse_graph6(word)
    edge_conn = edge_connectivity(graph)[0] if graph.n >= 2 else 0
    ramanujan = False
    if graph.n >= 2:
        try:
            # Every eigenvalue equal to k or -k is trivial, whatever its multiplicity
            ramanujan = is_ramanujan(graph, allow_disconnected=True)
        except DomainError:
            ramanujan = False
    rigid = globally_rigid = False
    if ramanujan:
        rigid = is_rigid_2d(graph)
        globally_rigid = rigid and is_globally_rigid_2d(graph)
    return {
        "word": word,
        "edge_connectivity": edge_conn,
        "ramanujan": ramanujan,
        "rigid": rigid,
        "globally_rigid": globally_rigid,
    }


def classify_graphs(
    words: Sequence[str], threads: Optional[int] = None
) -> List[Dict[str, object]]:
    """Classify graph6 words in input order, with up to `threads` processes."""
    workers = threads or settings.threads
    if workers <= 1 or len(words) < 2:
        return [_classify(word) for word in words]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_classify, words, chunksize=8))


def census_table(
    n: int,
    k: int,
    filters: Optional[CensusFilters] = None,
    force: bool = False,
    dump: bool = False,
    timings: bool = False,
    threads: Optional[int] = None,
) -> CensusRow:
    """
    Enumerate, classify and aggregate one census stratum.

    Args:
        n: Vertex count
        k: Degree
        filters: Connected / bipartite / vertex-transitive restrictions
        force: Ignore the enumeration guard
        dump: Include the canonical graph6 words of the Ramanujan stratum
        timings: Record wall-clock seconds
        threads: Worker processes, settings.threads if None

    Returns:
        CensusRow with counts and edge connectivity histograms
    """
    filters = filters or CensusFilters()
    started = time.perf_counter()

    words = []
    for graph in enumerate_regular(
        n, k, connected=filters.connected, bipartite=filters.bipartite, force=force
    ):
        if filters.vertex_transitive and not is_vertex_transitive(graph):
            continue
        words.append(emit_graph6(graph))
    logger.info("Census n=%d k=%d: %d graphs to classify", n, k, len(words))

    counts: Dict[str, int] = dict.fromkeys(
        ("total", "ramanujan", "rigid", "globally_rigid"), 0
    )
    histogram: Dict[str, int] = {}
    ramanujan_histogram: Dict[str, int] = {}
    ramanujan_words = []
    for record in classify_graphs(words, threads):
        counts["total"] += 1
        key = str(record["edge_connectivity"])
        histogram[key] = histogram.get(key, 0) + 1
        if not record["ramanujan"]:
            continue
        counts["ramanujan"] += 1
        ramanujan_histogram[key] = ramanujan_histogram.get(key, 0) + 1
        ramanujan_words.append(str(record["word"]))
        if record["rigid"]:
            counts["rigid"] += 1
        if record["globally_rigid"]:
            counts["globally_rigid"] += 1

    return CensusRow(
        n=n,
        k=k,
        filters=filters,
        counts=CensusCounts(
            **counts,
            rigid_not_gr=counts["rigid"] - counts["globally_rigid"],
            edge_connectivity=dict(
                sorted(histogram.items(), key=lambda item: int(item[0]))
            ),
            ramanujan_edge_connectivity=dict(
                sorted(ramanujan_histogram.items(), key=lambda item: int(item[0]))
            ),
        ),
        ramanujan_graph6=sorted(ramanujan_words) if dump else None,
        seconds=round(time.perf_counter() - started, 3) if timings else None,
    )


def cubic_low_connectivity_scan(n_max: int, force: bool = False) -> List[SimpleGraph]:
    """
    Connected cubic Ramanujan graphs with edge connectivity one, up to isomorphism.

    Args:
        n_max: Largest vertex count scanned
        force: Ignore the enumeration guard

    Returns:
        Graphs ordered by vertex count, then canonical form
    """
    limit = settings.enumeration_limit(3)
    if n_max > limit and not force:
        raise EnumerationGuardError(f"Cubic scan limited to n <= {limit}", limit)

    found: List[SimpleGraph] = []
    for n in range(4, n_max + 1, 2):
        batch = []
        for graph in enumerate_regular(n, 3, connected=True, force=force):
            if edge_connectivity(graph)[0] != 1:
                continue
            if is_ramanujan(graph):
                batch.append(graph)
        logger.info("Cubic scan n=%d: %d bridged Ramanujan graphs", n, len(batch))
        found.extend(sorted(batch, key=lambda g: canonical_form(g).word))
    return found
