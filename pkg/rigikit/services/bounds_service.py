"""
Spectral and structural sufficient conditions, decided exactly.

Every checker evaluates its hypotheses with exact rational or quadratic
thresholds and lists the properties they imply. cross_check runs all checkers
that apply to a graph and confirms each implied property with the exact
deciders, reporting any disagreement as a soundness violation.
"""

import logging
from fractions import Fraction
from math import ceil
from typing import Callable, Dict, List, Optional, Tuple

from rigikit.config import settings
from rigikit.errors import CliqueStructureError, DomainError, InvalidArgumentError
from rigikit.models.bounds_models import (
    ArgumentValue,
    BoundProperty,
    BoundVerdict,
    CrossCheckReport,
    Implication,
    QuadraticJson,
    SoundnessViolation,
)
from rigikit.models.graph_models import GraphLike, Multigraph, as_multigraph, support_of
from rigikit.models.quadratic import QuadraticNumber
from rigikit.services.connectivity_service import edge_connectivity, vertex_connectivity
from rigikit.services.graph6_service import emit_graph6
from rigikit.services.graph_service import (
    clique_contract,
    diameter,
    is_bipartite,
    is_connected,
    min_degree,
    regular_degree,
    scale,
)
from rigikit.services.packing_service import (
    body_bar_globally_rigid,
    body_bar_rigid,
    body_count,
    body_hinge_globally_rigid,
    body_hinge_rigid,
    packs_k_trees_minus_any_edge,
    packs_trees,
    strength,
)
from rigikit.services.rigidity_service import is_globally_rigid_2d, is_rigid_2d
from rigikit.services.spectral_service import (
    is_ramanujan,
    lambda2_at_most,
    lambda2_below,
    Threshold,
    mu2_bracket,
    mu2_exceeds,
)
from rigikit.services.surface_service import (
    SurfaceKind,
    globally_rigid_on_cylinder,
    redundantly_rigid_on_cylinder,
    rigid_on_surface,
)

logger = logging.getLogger(__name__)

MOORE_EXCEPTIONS = frozenset({2, 3, 7, 57})


# Exact decisions

def _agree(decide: Callable[[str], bool], threshold: QuadraticNumber) -> bool:
    """Irrational thresholds are decided by both exact paths, which must agree."""
    first = decide("inertia")
    if threshold.is_rational:
        return first
    second = decide("sturm")
    if first != second:
        raise RuntimeError(f"Inertia and Sturm decisions differ at {threshold}")
    return first


def _mu2_gt(graph: GraphLike, tau: Threshold) -> bool:
    """mu_2 > tau; false for disconnected graphs and for n < 2."""
    if graph.n < 2 or not is_connected(graph):
        return False
    threshold = QuadraticNumber.of(tau)
    return _agree(
        lambda method: mu2_exceeds(graph, threshold, method=method), threshold
    )


def _lambda2_below(graph: GraphLike, tau: QuadraticNumber) -> bool:
    return _agree(lambda method: lambda2_below(graph, tau, method=method), tau)


def _lambda2_at_most(graph: GraphLike, tau: QuadraticNumber) -> bool:
    return _agree(lambda method: lambda2_at_most(graph, tau, method=method), tau)


def _is_simple(graph: GraphLike) -> bool:
    return not isinstance(graph, Multigraph) or graph.is_simple()


def _ramanujan_degree(graph: GraphLike) -> Optional[int]:
    """Degree of a Ramanujan graph, None for anything else."""
    k = regular_degree(graph)
    if k is None or k < 3 or graph.n < 2 or not is_connected(graph):
        return None
    return k if is_ramanujan(graph) else None


def _json(value: Threshold) -> QuadraticJson:
    return QuadraticJson.from_number(QuadraticNumber.of(value))


def _rejected(theorem_id: str, note: str) -> BoundVerdict:
    return BoundVerdict(theorem_id=theorem_id, hypothesis_holds=False, margin_note=note)


def _implies(prop: BoundProperty, **arguments: ArgumentValue) -> Implication:
    return Implication(property=prop, arguments=arguments)


# Planar rigidity

def check_specrigid(graph: GraphLike) -> BoundVerdict:
    """
    Algebraic connectivity condition for rigidity in the plane.

    With minimum degree delta >= 6, mu_2 > 2 + 1/(delta-1) implies rigidity and
    mu_2 > 2 + 2/(delta-1) implies global rigidity.

    Args:
        graph: Simple graph

    Returns:
        BoundVerdict; the threshold is the rigidity one, the global rigidity
        outcome is listed among the implications and in the note
    """
    theorem_id = "spectral-rigidity"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    delta = min_degree(graph) if graph.n else 0
    if delta < 6:
        return _rejected(theorem_id, f"minimum degree {delta} < 6")

    rigid_threshold = 2 + Fraction(1, delta - 1)
    global_threshold = 2 + Fraction(2, delta - 1)
    rigid = _mu2_gt(graph, rigid_threshold)
    globally = rigid and _mu2_gt(graph, global_threshold)
    implied = []
    if rigid:
        implied.append(_implies(BoundProperty.RIGID_2D))
    if globally:
        implied.append(_implies(BoundProperty.GLOBALLY_RIGID_2D))
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=rigid,
        implied_properties=implied,
        threshold=_json(rigid_threshold),
        margin_note=(
            f"global rigidity threshold {global_threshold}: "
            f"{'holds' if globally else 'fails'}"
        ),
    )


def check_ramanujan_global_rigidity(graph: GraphLike) -> BoundVerdict:
    """
    Global rigidity of Ramanujan graphs by degree and order.

    Degree at least 8 always suffices; degree 7 needs n >= 22 and degree 6
    needs n >= 329.
    """
    theorem_id = "ramanujan-global-rigidity"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    k = _ramanujan_degree(graph)
    if k is None:
        return _rejected(theorem_id, "not a Ramanujan graph")

    n = graph.n
    threshold = QuadraticNumber(0, 2, k - 1)
    if k >= 8:
        holds, note = True, f"degree {k} >= 8"
    elif k == 7:
        holds, note = n >= 22, f"degree 7 with n = {n} (needs n >= 22)"
    elif k == 6:
        holds, note = n >= 329, f"degree 6 with n = {n} (needs n >= 329)"
    else:
        holds, note = False, f"degree {k} < 6"
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=holds,
        implied_properties=[_implies(BoundProperty.GLOBALLY_RIGID_2D)] if holds else [],
        threshold=QuadraticJson.from_number(threshold),
        margin_note=note,
    )


# Tree packing

def check_tree_packing_bounds(
    graph: GraphLike,
    k: Optional[int] = None,
    *,
    s: Optional[int] = None,
    t: Optional[int] = None,
) -> BoundVerdict:
    """
    Algebraic connectivity conditions for tree packing and strength.

    With k: delta >= 2k and mu_2 > (2k-1)/l, where l = max(ceil((delta+1)/m), 2)
    and m is the edge multiplicity (l = delta + 1 for simple graphs), imply k
    edge-disjoint spanning trees. With s and t: a simple graph with
    delta >= 2s/t and mu_2 > (2s-1)/(t(delta+1)) has strength at least s/t.

    Args:
        graph: Graph or multigraph
        k: Number of trees
        s: Numerator of the strength target
        t: Denominator of the strength target

    Returns:
        BoundVerdict

    Raises:
        InvalidArgumentError: Unless exactly one of k or (s, t) is given with
            positive values
    """
    if (k is None) == (s is None or t is None):
        raise InvalidArgumentError("Pass either k or both s and t")
    delta = min_degree(graph) if graph.n else 0

    if k is not None:
        if k < 1:
            raise InvalidArgumentError(f"Tree count must be positive, got {k}")
        multiplicity = as_multigraph(graph).max_multiplicity
        theorem_id = "tree-packing-multigraph" if multiplicity > 1 else "tree-packing"
        if delta < 2 * k:
            return _rejected(theorem_id, f"minimum degree {delta} < 2k = {2 * k}")
        ell = max(ceil(Fraction(delta + 1, max(multiplicity, 1))), 2)
        threshold = Fraction(2 * k - 1, ell)
        holds = _mu2_gt(graph, threshold)
        return BoundVerdict(
            theorem_id=theorem_id,
            hypothesis_holds=holds,
            implied_properties=(
                [_implies(BoundProperty.PACKS_TREES, k=k)] if holds else []
            ),
            threshold=_json(threshold),
            margin_note=f"l = {ell}, multiplicity {multiplicity}",
        )

    assert s is not None and t is not None
    if s < 1 or t < 1:
        raise InvalidArgumentError("s and t must be positive")
    theorem_id = "fractional-tree-packing"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    if delta < Fraction(2 * s, t):
        return _rejected(
            theorem_id, f"minimum degree {delta} < 2s/t = {Fraction(2 * s, t)}"
        )
    threshold = Fraction(2 * s - 1, t * (delta + 1))
    holds = _mu2_gt(graph, threshold)
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=holds,
        implied_properties=(
            [_implies(BoundProperty.STRENGTH_AT_LEAST, s=s, t=t)] if holds else []
        ),
        threshold=_json(threshold),
        margin_note=f"target strength {Fraction(s, t)}",
    )


def check_scaled_deletion_bound(graph: GraphLike, s: int, t: int) -> BoundVerdict:
    """
    delta > 2s/t and mu_2 > 2s/(t(delta+1)) imply that tG - e packs s spanning
    trees for every edge copy e.
    """
    if s < 1 or t < 1:
        raise InvalidArgumentError("s and t must be positive")
    theorem_id = "scaled-deletion-packing"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    delta = min_degree(graph) if graph.n else 0
    if delta <= Fraction(2 * s, t):
        return _rejected(
            theorem_id, f"minimum degree {delta} <= 2s/t = {Fraction(2 * s, t)}"
        )
    threshold = Fraction(2 * s, t * (delta + 1))
    holds = _mu2_gt(graph, threshold)
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=holds,
        implied_properties=(
            [_implies(BoundProperty.SCALED_DELETION_PACKS, s=s, t=t)] if holds else []
        ),
        threshold=_json(threshold),
        margin_note=f"{t}G - e against {s} trees",
    )


# Connectivity

def _two_connected_threshold(k: int) -> QuadraticNumber:
    radicand = k * k + (12 if k % 2 == 0 else 8)
    return QuadraticNumber(Fraction(k - 2, 2), Fraction(1, 2), radicand)


def _ramanujan_edge_connectivity(k: int, n: int) -> Optional[int]:
    """Edge connectivity guaranteed for a k-regular Ramanujan graph on n vertices."""
    if k >= 6:
        return k
    if k == 5:
        return 4
    if k == 4 and (n >= 20 or n <= 9):
        return 4
    return None


def check_edge_connectivity_bounds(graph: GraphLike, ell: int) -> BoundVerdict:
    """
    Eigenvalue conditions for edge connectivity and 2-connectivity of a regular graph.

    Evaluates, for a k-regular graph on n vertices:
      * n < 2k + 2, which alone forces k-edge-connectivity;
      * lambda_2 <= k - (l-1)n/((k+1)(n-k-1)) and the weaker
        lambda_2 < k - 2(l-1)/(k+1), each implying l-edge-connectivity;
      * lambda_2 < (k - 2 + sqrt(k^2 + 12))/2 (k even) or
        (k - 2 + sqrt(k^2 + 8))/2 (k odd), implying 2-connectivity when connected;
      * the Ramanujan consequences: k-edge-connected for k >= 6, 4-edge-connected
        for k = 5 and for k = 4 with n >= 20 or n <= 9, 2-connected for k >= 4.

    Args:
        graph: k-regular simple graph
        ell: Target edge connectivity, 2 <= ell <= k

    Returns:
        BoundVerdict holding when any clause holds; the threshold is the first
        lambda_2 bound

    Raises:
        DomainError: If the graph is irregular, not simple, or ell is out of range
    """
    k = regular_degree(graph)
    if k is None:
        raise DomainError("Edge connectivity bounds need a regular graph")
    if not _is_simple(graph):
        raise DomainError("Edge connectivity bounds need a simple graph")
    if not 2 <= ell <= k:
        raise DomainError(f"Need 2 <= l <= k, got l = {ell}, k = {k}")

    n = graph.n
    implied: List[Implication] = []
    notes: List[str] = []

    def add(implication: Implication, note: str) -> None:
        if all(existing.key() != implication.key() for existing in implied):
            implied.append(implication)
        notes.append(note)

    if n < 2 * k + 2:
        add(_implies(BoundProperty.EDGE_CONNECTED, l=k), f"n = {n} < 2k + 2")

    threshold: Optional[QuadraticNumber] = None
    if n > k + 1:
        threshold = QuadraticNumber(k - Fraction((ell - 1) * n, (k + 1) * (n - k - 1)))
        if _lambda2_at_most(graph, threshold):
            add(_implies(BoundProperty.EDGE_CONNECTED, l=ell), "lambda_2 bound with n")
        elif _lambda2_below(graph, QuadraticNumber(k - Fraction(2 * (ell - 1), k + 1))):
            add(_implies(BoundProperty.EDGE_CONNECTED, l=ell), "lambda_2 bound")

    if k >= 3 and n >= 2 and is_connected(graph):
        if _lambda2_below(graph, _two_connected_threshold(k)):
            add(_implies(BoundProperty.VERTEX_CONNECTED, c=2), "2-connectivity bound")

    ramanujan_k = _ramanujan_degree(graph)
    if ramanujan_k is not None:
        guaranteed = _ramanujan_edge_connectivity(k, n)
        if guaranteed is not None:
            add(
                _implies(BoundProperty.EDGE_CONNECTED, l=guaranteed),
                "Ramanujan edge connectivity",
            )
        if k >= 4:
            add(_implies(BoundProperty.VERTEX_CONNECTED, c=2), "Ramanujan 2-connected")

    return BoundVerdict(
        theorem_id="edge-connectivity",
        hypothesis_holds=bool(implied),
        implied_properties=implied,
        threshold=None if threshold is None else QuadraticJson.from_number(threshold),
        margin_note="; ".join(notes) or "no clause applies",
    )


# Diameter bounds

def nilli_upper_bound(k: int, m: int) -> QuadraticNumber:
    """
    Upper bound on mu_2 of a k-regular (multi)graph of diameter m > 1:
    k - 2 sqrt(k-1) + (2 sqrt(k-1) - 1) / floor(m/2).

    Raises:
        DomainError: If m <= 1 or k < 3
    """
    if m <= 1:
        raise DomainError(f"Diameter bound needs m > 1, got {m}")
    if k < 3:
        raise DomainError(f"Diameter bound needs k >= 3, got {k}")
    root = QuadraticNumber.sqrt(k - 1)
    return k - 2 * root + (2 * root - 1) / (m // 2)


def moore_bound(k: int, m: int) -> int:
    """Largest order of a k-regular graph with diameter m: 1 + k * sum_{i<m} (k-1)^i."""
    return 1 + k * sum((k - 1) ** i for i in range(m))


def _moore_attainable(k: int, m: int) -> bool:
    """Whether the Moore bound can be met with equality at diameter m."""
    if m <= 1 or k == 2:
        return True
    if m == 2:
        return k in MOORE_EXCEPTIONS
    return False


def moore_min_diameter(k: int, n: int) -> int:
    """
    Smallest diameter a k-regular graph on n vertices can have.

    The Moore bound is strict for k outside {2, 3, 7, 57} at diameter 2 and
    for every k >= 3 at larger diameters.

    Raises:
        DomainError: If k < 3
    """
    if k < 3:
        raise DomainError(f"Moore bound is used for k >= 3, got {k}")
    if n <= 1:
        return 0
    m = 1
    while True:
        bound = moore_bound(k, m)
        if n < bound or (n == bound and _moore_attainable(k, m)):
            return m
        m += 1


# Vertex-transitive graphs

def _is_clique_exception(graph: GraphLike, k: int) -> bool:
    """
    Whether contracting the k-cliques leaves a multigraph of diameter one of the
    excluded shapes: K6 for k = 5; K5 or the doubled triangle for k = 4.
    """
    simple = support_of(graph)
    try:
        contracted = clique_contract(simple, k)
    except CliqueStructureError:
        return False
    if not contracted.support.is_complete():
        return False
    multiplicities = {mult for _, _, mult in contracted.multiplicity}
    if k == 5:
        return contracted.n == 6 and multiplicities == {1}
    if k == 4:
        return (contracted.n == 5 and multiplicities == {1}) or (
            contracted.n == 3 and multiplicities == {2}
        )
    return False


def _is_vertex_transitive(graph: GraphLike) -> bool:
    from rigikit.services.canonical_service import is_vertex_transitive

    return is_vertex_transitive(graph)


def vtspec_threshold(k: int, m: int) -> QuadraticNumber:
    """1 - 2 sqrt(k-1)/k + (2 sqrt(k-1) - 1)/(k floor(m/2))."""
    return nilli_upper_bound(k, m) / k


def check_vtspec(graph: GraphLike) -> BoundVerdict:
    """
    Global rigidity of vertex-transitive graphs of degree 4 or 5 from mu_2.

    When mu_2 exceeds vtspec_threshold(k, diameter), the graph is globally rigid
    or contracts (by its k-cliques) to K6, K5 or the doubled triangle.

    Raises:
        DomainError: If the graph is not k-regular with k in {4, 5}
    """
    k = regular_degree(graph)
    if k not in (4, 5):
        raise DomainError(f"Vertex-transitive bound needs degree 4 or 5, got {k}")
    theorem_id = "vertex-transitive-spectral"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    if not is_connected(graph):
        return _rejected(theorem_id, "disconnected")
    m = diameter(graph)
    if m is None or m <= 1:
        return _rejected(theorem_id, "diameter <= 1")
    if not _is_vertex_transitive(graph):
        return _rejected(theorem_id, "not vertex-transitive")

    threshold = vtspec_threshold(k, m)
    holds = _mu2_gt(graph, threshold)
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=holds,
        implied_properties=(
            [_implies(BoundProperty.GLOBALLY_RIGID_OR_EXCEPTION, k=k)] if holds else []
        ),
        threshold=QuadraticJson.from_number(threshold),
        margin_note=f"diameter {m}",
    )


def check_vertex_transitive_ramanujan(graph: GraphLike) -> BoundVerdict:
    """
    Vertex-transitive Ramanujan graphs: degree >= 5 implies globally rigid apart
    from the K6 clique exception; degree 4 with n >= 53 or bipartite implies
    globally rigid.
    """
    theorem_id = "vertex-transitive-ramanujan"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    k = _ramanujan_degree(graph)
    if k is None or k < 4:
        return _rejected(theorem_id, "not a Ramanujan graph of degree >= 4")
    if not _is_vertex_transitive(graph):
        return _rejected(theorem_id, "not vertex-transitive")

    n = graph.n
    if k >= 6:
        implied = [_implies(BoundProperty.GLOBALLY_RIGID_2D)]
    elif k == 5:
        implied = [_implies(BoundProperty.GLOBALLY_RIGID_OR_EXCEPTION, k=5)]
    elif n >= 53 or is_bipartite(graph):
        implied = [_implies(BoundProperty.GLOBALLY_RIGID_2D)]
    else:
        implied = []
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=bool(implied),
        implied_properties=implied,
        threshold=QuadraticJson.from_number(QuadraticNumber(0, 2, k - 1)),
        margin_note=f"degree {k}, n = {n}",
    )


# Cut bounds

def degree_cut_bound(k: int, size: int) -> int:
    """Lower bound on the edges leaving `size` vertices of a k-regular simple graph."""
    return size * (k - size + 1)


def ramanujan_cut_bound(k: int, n: int, size: int) -> QuadraticNumber:
    """(k - 2 sqrt(k-1)) size (n - size) / n, a cut bound for Ramanujan graphs."""
    return (k - 2 * QuadraticNumber.sqrt(k - 1)) * Fraction(size * (n - size), n)


def spectral_cut_lower_bound(
    graph: GraphLike, size: int, width: Fraction = Fraction(1, 1024)
) -> Fraction:
    """
    Certified lower bound on e(S, V - S) over all vertex sets S of the given size.

    Uses e(S, V - S) >= mu_2 |S| |V - S| / n with a rational lo < mu_2 from
    mu2_bracket, so the bound is strictly below the spectral one.

    Raises:
        DomainError: If the graph is disconnected or size is out of range
    """
    n = graph.n
    if not 0 < size < n:
        raise DomainError(f"Set size must lie strictly between 0 and {n}")
    lo, _ = mu2_bracket(graph, width)
    return lo * Fraction(size * (n - size), n)


def expander_mixing_feasible(
    k: int, lam: Threshold, n: int, a: int, b: int
) -> bool:
    """
    Whether disjoint sets of sizes a and b with no edges between them are allowed
    by the expander mixing inequality k a b / n <= lam sqrt(ab (1 - a/n)(1 - b/n)).
    """
    if a < 0 or b < 0 or a + b > n:
        raise DomainError("Set sizes must be nonnegative and fit in the graph")
    bound = QuadraticNumber.of(lam)
    if bound.sign() < 0:
        raise DomainError("Eigenvalue bound must be nonnegative")
    left = Fraction(k * a * b, n) ** 2
    product = Fraction(a * b) * (1 - Fraction(a, n)) * (1 - Fraction(b, n))
    right = bound * bound * product
    return QuadraticNumber.of(left) <= right


# Body-bar, body-hinge and surfaces

def check_body_bar_ramanujan(graph: GraphLike, d: int) -> BoundVerdict:
    """
    k-regular Ramanujan multigraphs with multiplicity below d(d+1)/2: k >= d(d+1)
    implies body-bar rigid in R^d, k >= d(d+1) + 2 implies body-bar globally rigid.

    Raises:
        DomainError: If d < 2
    """
    if d < 2:
        raise DomainError(f"Body-bar bound needs d >= 2, got {d}")
    theorem_id = "body-bar-ramanujan"
    bodies = body_count(d)
    multiplicity = as_multigraph(graph).max_multiplicity
    if multiplicity >= bodies:
        return _rejected(theorem_id, f"multiplicity {multiplicity} >= {bodies}")
    k = _ramanujan_degree(graph)
    if k is None:
        return _rejected(theorem_id, "not a Ramanujan graph")

    implied = []
    if k >= d * (d + 1):
        implied.append(_implies(BoundProperty.BODY_BAR_RIGID, d=d))
    if k >= d * (d + 1) + 2:
        implied.append(_implies(BoundProperty.BODY_BAR_GLOBALLY_RIGID, d=d))
    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=bool(implied),
        implied_properties=implied,
        threshold=QuadraticJson.from_number(QuadraticNumber(0, 2, k - 1)),
        margin_note=f"degree {k} against d(d+1) = {d * (d + 1)}",
    )


def check_body_hinge_bounds(graph: GraphLike, d: int) -> BoundVerdict:
    """
    Algebraic connectivity conditions for body-hinge rigidity in R^d.

    For a simple graph with delta >= 3 and D = d(d+1)/2:
    mu_2 > (2 + 1/(D-1))/(delta+1) implies body-hinge rigid, and for d >= 3
    mu_2 > (2 + 2/(D-1))/(delta+1) implies body-hinge globally rigid. Ramanujan
    graphs of degree k >= 4 are body-hinge rigid, and globally rigid when d >= 3;
    in the plane global rigidity needs k >= 5, or k = 4 with n >= 20 or n <= 9.

    Raises:
        DomainError: If d < 2
    """
    if d < 2:
        raise DomainError(f"Body-hinge bound needs d >= 2, got {d}")
    theorem_id = "body-hinge"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    bodies = body_count(d)
    delta = min_degree(graph) if graph.n else 0
    implied: List[Implication] = []
    notes: List[str] = []
    threshold: Optional[Fraction] = None

    if delta >= 3:
        threshold = (2 + Fraction(1, bodies - 1)) / (delta + 1)
        if _mu2_gt(graph, threshold):
            implied.append(_implies(BoundProperty.BODY_HINGE_RIGID, d=d))
            notes.append("rigidity threshold holds")
        global_threshold = (2 + Fraction(2, bodies - 1)) / (delta + 1)
        if d >= 3 and _mu2_gt(graph, global_threshold):
            implied.append(_implies(BoundProperty.BODY_HINGE_GLOBALLY_RIGID, d=d))
            notes.append(f"global threshold {global_threshold} holds")
    else:
        notes.append(f"minimum degree {delta} < 3")

    k = _ramanujan_degree(graph)
    if k is not None and k >= 4:
        wanted = [_implies(BoundProperty.BODY_HINGE_RIGID, d=d)]
        if d >= 3 or _ramanujan_edge_connectivity(k, graph.n) is not None:
            wanted.append(_implies(BoundProperty.BODY_HINGE_GLOBALLY_RIGID, d=d))
        for implication in wanted:
            if all(existing.key() != implication.key() for existing in implied):
                implied.append(implication)
        notes.append(f"Ramanujan of degree {k}")

    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=bool(implied),
        implied_properties=implied,
        threshold=_json(threshold) if threshold is not None else None,
        margin_note="; ".join(notes),
    )


def check_surface_bounds(graph: GraphLike) -> BoundVerdict:
    """
    Rigidity on surfaces of revolution from mu_2.

    delta >= 4 and mu_2 > 3/(delta+1) imply rigidity on every surface of
    revolution other than the sphere; delta >= 5 and mu_2 > 4/(delta+1) imply
    redundant rigidity on the cylinder. Ramanujan graphs with k >= 5, or k = 4
    and n >= 20 or n <= 9, are rigid on those surfaces and globally rigid on the
    cylinder.
    """
    theorem_id = "surface-rigidity"
    if not _is_simple(graph):
        return _rejected(theorem_id, "simple graphs only")
    delta = min_degree(graph) if graph.n else 0
    implied: List[Implication] = []
    notes: List[str] = []

    def add(implication: Implication) -> None:
        if all(existing.key() != implication.key() for existing in implied):
            implied.append(implication)

    def off_sphere() -> None:
        for surface in (SurfaceKind.CYLINDER, SurfaceKind.GENERAL_REVOLUTION):
            add(_implies(BoundProperty.SURFACE_RIGID, surface=surface.value))

    threshold: Optional[Fraction] = None
    if delta >= 4:
        threshold = Fraction(3, delta + 1)
        if _mu2_gt(graph, threshold):
            off_sphere()
            notes.append("rigid off the sphere")
    if delta >= 5 and _mu2_gt(graph, Fraction(4, delta + 1)):
        add(_implies(BoundProperty.CYLINDER_REDUNDANTLY_RIGID))
        notes.append("redundantly rigid on the cylinder")

    k = _ramanujan_degree(graph)
    if k is not None and k >= 4 and _ramanujan_edge_connectivity(k, graph.n):
        off_sphere()
        add(_implies(BoundProperty.CYLINDER_GLOBALLY_RIGID))
        notes.append(f"Ramanujan of degree {k}")

    return BoundVerdict(
        theorem_id=theorem_id,
        hypothesis_holds=bool(implied),
        implied_properties=implied,
        threshold=_json(threshold) if threshold is not None else None,
        margin_note="; ".join(notes) or f"minimum degree {delta}",
    )


# Soundness

def _confirm(graph: GraphLike, implication: Implication) -> bool:
    """Decide an implied property with the exact checker."""
    args = implication.arguments
    prop = implication.property
    if prop == BoundProperty.RIGID_2D:
        return is_rigid_2d(graph)
    if prop == BoundProperty.GLOBALLY_RIGID_2D:
        return is_globally_rigid_2d(graph)
    if prop == BoundProperty.GLOBALLY_RIGID_OR_EXCEPTION:
        if is_globally_rigid_2d(graph):
            return True
        return _is_clique_exception(graph, int(args["k"]))
    if prop == BoundProperty.PACKS_TREES:
        return packs_trees(graph, int(args["k"]))
    if prop == BoundProperty.STRENGTH_AT_LEAST:
        return strength(graph).value >= Fraction(int(args["s"]), int(args["t"]))
    if prop == BoundProperty.SCALED_DELETION_PACKS:
        scaled = scale(graph, int(args["t"]))
        return packs_k_trees_minus_any_edge(scaled, int(args["s"]))
    if prop == BoundProperty.EDGE_CONNECTED:
        return graph.n >= 2 and edge_connectivity(graph)[0] >= int(args["l"])
    if prop == BoundProperty.VERTEX_CONNECTED:
        return graph.n >= 2 and vertex_connectivity(graph)[0] >= int(args["c"])
    if prop == BoundProperty.BODY_BAR_RIGID:
        return body_bar_rigid(graph, int(args["d"]))
    if prop == BoundProperty.BODY_BAR_GLOBALLY_RIGID:
        return body_bar_globally_rigid(graph, int(args["d"]))
    if prop == BoundProperty.BODY_HINGE_RIGID:
        return body_hinge_rigid(graph, int(args["d"]))
    if prop == BoundProperty.BODY_HINGE_GLOBALLY_RIGID:
        return body_hinge_globally_rigid(graph, int(args["d"]))
    if prop == BoundProperty.SURFACE_RIGID:
        return rigid_on_surface(graph, SurfaceKind(str(args["surface"])))
    if prop == BoundProperty.CYLINDER_REDUNDANTLY_RIGID:
        return redundantly_rigid_on_cylinder(graph)
    if prop == BoundProperty.CYLINDER_GLOBALLY_RIGID:
        return globally_rigid_on_cylinder(graph)
    raise ValueError(f"No exact checker for {prop}")


def _applicable_verdicts(graph: GraphLike) -> List[BoundVerdict]:
    verdicts = [check_specrigid(graph), check_ramanujan_global_rigidity(graph)]
    delta = min_degree(graph) if graph.n else 0

    for k in range(1, delta // 2 + 1):
        verdicts.append(check_tree_packing_bounds(graph, k))
    if _is_simple(graph):
        for s in range(1, delta + 1, 2):
            verdicts.append(check_tree_packing_bounds(graph, s=s, t=2))
        for s in range(1, (delta + 1) // 2):
            verdicts.append(check_scaled_deletion_bound(graph, s, 1))

    k = regular_degree(graph)
    if k is not None and _is_simple(graph):
        for ell in range(2, k + 1):
            verdicts.append(check_edge_connectivity_bounds(graph, ell))
        if graph.n <= settings.vertex_transitive_max_n:
            if k in (4, 5):
                verdicts.append(check_vtspec(graph))
            verdicts.append(check_vertex_transitive_ramanujan(graph))

    for d in settings.default_dimensions:
        if d >= 2:
            verdicts.append(check_body_bar_ramanujan(graph, d))
            verdicts.append(check_body_hinge_bounds(graph, d))
    verdicts.append(check_surface_bounds(graph))
    return verdicts


def _diameter_consistency(graph: GraphLike) -> Tuple[Optional[bool], Optional[bool]]:
    k = regular_degree(graph)
    if k is None or k < 3 or graph.n < 2 or not is_connected(graph):
        return None, None
    m = diameter(graph)
    assert m is not None
    nilli = None
    if m > 1:
        nilli = not _mu2_gt(graph, nilli_upper_bound(k, m))
    moore = None
    if _is_simple(graph):
        moore = moore_min_diameter(k, graph.n) <= m
    return nilli, moore


def cross_check(graph: GraphLike) -> CrossCheckReport:
    """
    Evaluate every applicable sufficient condition and confirm what it implies.

    Each implied property of a satisfied hypothesis is decided by the exact
    checkers; a refuted implication is reported as a violation. For connected
    regular graphs the Nilli and Moore consistency checks are added.

    Args:
        graph: Graph or multigraph

    Returns:
        CrossCheckReport with confirmed verdicts; `ok` is True when nothing failed
    """
    cache: Dict[Tuple, bool] = {}
    verdicts: List[BoundVerdict] = []
    violations: List[SoundnessViolation] = []

    for verdict in _applicable_verdicts(graph):
        confirmed = []
        for implication in verdict.implied_properties:
            key = implication.key()
            if key not in cache:
                cache[key] = _confirm(graph, implication)
            outcome = cache[key]
            confirmed.append(implication.model_copy(update={"confirmed": outcome}))
            if verdict.hypothesis_holds and not outcome:
                logger.warning(
                    "Soundness violation: %s implies %s %s",
                    verdict.theorem_id,
                    implication.property.value,
                    implication.arguments,
                )
                violations.append(
                    SoundnessViolation(
                        theorem_id=verdict.theorem_id,
                        property=implication.property,
                        arguments=implication.arguments,
                        message=verdict.margin_note,
                    )
                )
        verdicts.append(verdict.model_copy(update={"implied_properties": confirmed}))

    nilli, moore = _diameter_consistency(graph)
    graph6 = emit_graph6(support_of(graph)) if _is_simple(graph) else None
    return CrossCheckReport(
        graph6=graph6,
        verdicts=verdicts,
        violations=violations,
        nilli_consistent=nilli,
        moore_consistent=moore,
    )
