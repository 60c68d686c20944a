"""Exact eigenvalue location over Q and Q(sqrt(m)), with Ramanujan tests."""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from sympy import Poly, symbols
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from rigikit.errors import DomainError, InvalidArgumentError
from rigikit.models.graph_models import GraphLike
from rigikit.models.quadratic import QuadraticNumber, Scalar
from rigikit.models.spectral_models import (
    InertiaCertificate,
    RamanujanVerdict,
    SpectrumSummary,
)
from rigikit.services.graph_service import (
    adjacency_matrix,
    is_bipartite,
    is_connected,
    laplacian_matrix,
    max_degree,
    regular_degree,
    to_networkx,
)

logger = logging.getLogger(__name__)

x = symbols("x")

Threshold = Union[int, Fraction, QuadraticNumber]


def _sign(value: Scalar) -> int:
    if isinstance(value, QuadraticNumber):
        return value.sign()
    return (value > 0) - (value < 0)


def _normalize_threshold(tau: Threshold) -> Scalar:
    """Rational thresholds become Fractions so the fast path is used."""
    if isinstance(tau, QuadraticNumber):
        return tau.a if tau.is_rational else tau
    return Fraction(tau)


# Inertia

def inertia_shifted(
    matrix: Sequence[Sequence[Scalar]], c: Threshold = 0
) -> InertiaCertificate:
    """
    Signature of (matrix - c*I) by symmetric congruence diagonalization.

    Elimination runs over exact rationals (or Q(sqrt(m)) when c is a quadratic
    irrational) using 1x1 pivots on nonzero diagonal entries and 2x2 pivots when
    the active diagonal vanishes. By Sylvester's law the counts are the numbers of
    eigenvalues below, at and above c.

    Args:
        matrix: Square symmetric matrix with int, Fraction or QuadraticNumber entries
        c: Shift

    Returns:
        InertiaCertificate with the pivot transcript

    Raises:
        InvalidArgumentError: If the matrix is not square and symmetric
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise InvalidArgumentError("Matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if matrix[i][j] != matrix[j][i]:
                raise InvalidArgumentError(f"Matrix not symmetric at ({i}, {j})")

    shift = _normalize_threshold(c)
    a: List[List[Scalar]] = [
        [
            (Fraction(entry) if not isinstance(entry, QuadraticNumber) else entry)
            - (shift if i == j else 0)
            for j, entry in enumerate(row)
        ]
        for i, row in enumerate(matrix)
    ]

    active = list(range(n))
    pivots: List[Tuple[Scalar, ...]] = []
    while active:
        i = next((i for i in active if _sign(a[i][i]) != 0), None)
        if i is not None:
            d = a[i][i]
            active.remove(i)
            for j in active:
                if _sign(a[j][i]) == 0:
                    continue
                factor = a[j][i] / d
                row_j = a[j]
                row_i = a[i]
                for col in active:
                    if _sign(row_i[col]) != 0:
                        row_j[col] = row_j[col] - factor * row_i[col]
            pivots.append((d,))
            continue

        pair = next(
            (
                (i, j)
                for idx, i in enumerate(active)
                for j in active[idx + 1:]
                if _sign(a[i][j]) != 0
            ),
            None,
        )
        if pair is None:
            break
        i, j = pair
        p, q, r = a[i][i], a[i][j], a[j][j]
        determinant = p * r - q * q
        active.remove(i)
        active.remove(j)
        # Schur complement against the 2x2 block
        for row in active:
            xi, xj = a[row][i], a[row][j]
            if _sign(xi) == 0 and _sign(xj) == 0:
                continue
            wi = (r * xi - q * xj) / determinant
            wj = (p * xj - q * xi) / determinant
            for col in active:
                a[row][col] = a[row][col] - (wi * a[i][col] + wj * a[j][col])
        pivots.append((p, q, r))

    partial = InertiaCertificate(0, 0, 0, tuple(pivots), len(active))
    n_neg, n_zero, n_pos = partial.recount()
    return InertiaCertificate(n_neg, n_zero, n_pos, tuple(pivots), len(active))


# Characteristic polynomials and Sturm counting

@lru_cache(maxsize=512)
def _charpoly(graph: GraphLike, kind: str) -> Poly:
    rows = adjacency_matrix(graph) if kind == "adjacency" else laplacian_matrix(graph)
    n = graph.n
    matrix = DomainMatrix([[ZZ(v) for v in row] for row in rows], (n, n), ZZ)
    coefficients = [int(c) for c in matrix.charpoly()]
    return Poly(coefficients, x, domain=ZZ)


def characteristic_polynomial(graph: GraphLike, kind: str = "adjacency") -> Poly:
    """
    Exact integer characteristic polynomial det(xI - M).

    Args:
        graph: Graph or multigraph
        kind: "adjacency" or "laplacian"

    Returns:
        sympy Poly over ZZ in the symbol x
    """
    if kind not in ("adjacency", "laplacian"):
        raise InvalidArgumentError(f"Unknown matrix kind {kind!r}")
    return _charpoly(graph, kind)


def _to_fraction(coefficient: object) -> Fraction:
    numerator, denominator = int(coefficient.p), int(coefficient.q)  # type: ignore
    return Fraction(numerator, denominator)


def evaluate_polynomial(poly: Poly, point: Scalar) -> Scalar:
    """Horner evaluation at an exact rational or quadratic point."""
    value: Scalar = Fraction(0)
    for coefficient in poly.all_coeffs():
        value = value * point + _to_fraction(coefficient)
    return value


def _sign_variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _sturm_counts(factor: Poly, point: Scalar) -> Tuple[int, int]:
    """
    Distinct roots of a square-free factor above and at the point.

    Uses V(point) - V(+inf), which counts roots in the half-open interval
    (point, +inf); a root exactly at the point is reported separately.
    """
    chain = factor.sturm()
    at_point = [_sign(evaluate_polynomial(p, point)) for p in chain]
    at_infinity = [_sign(_to_fraction(p.LC())) for p in chain]
    above = _sign_variations(at_point) - _sign_variations(at_infinity)
    equal = 1 if at_point[0] == 0 else 0
    return above, equal


def count_roots(poly: Poly, tau: Threshold) -> Tuple[int, int]:
    """
    Roots (with multiplicity) strictly above tau and exactly at tau.

    The polynomial is factored over the integers; each irreducible factor is
    counted with its own Sturm chain and weighted by its exponent.
    """
    point = _normalize_threshold(tau)
    above = equal = 0
    _, factors = poly.factor_list()
    for factor, exponent in factors:
        if factor.degree() <= 0:
            continue
        factor_above, factor_equal = _sturm_counts(factor, point)
        above += factor_above * exponent
        equal += factor_equal * exponent
    return above, equal


def count_adjacency_eigenvalues_above(
    graph: GraphLike, tau: Threshold, method: str = "sturm"
) -> int:
    """
    Exact number of adjacency eigenvalues strictly greater than tau.

    Args:
        graph: Graph or multigraph (multiplicities as matrix entries)
        tau: Rational or quadratic irrational threshold
        method: "sturm" (characteristic polynomial) or "inertia"

    Returns:
        Eigenvalue count
    """
    if method == "inertia":
        return inertia_shifted(adjacency_matrix(graph), tau).n_pos
    above, _ = count_roots(characteristic_polynomial(graph, "adjacency"), tau)
    return above


def count_adjacency_eigenvalues_at_least(
    graph: GraphLike, tau: Threshold, method: str = "inertia"
) -> int:
    """Exact number of adjacency eigenvalues greater than or equal to tau."""
    if method == "sturm":
        above, equal = count_roots(characteristic_polynomial(graph, "adjacency"), tau)
        return above + equal
    certificate = inertia_shifted(adjacency_matrix(graph), tau)
    return certificate.n_pos + certificate.n_zero


def lambda2_at_most(graph: GraphLike, tau: Threshold, method: str = "inertia") -> bool:
    """Decide lambda_2 <= tau."""
    if graph.n < 2:
        raise DomainError("lambda_2 needs at least two vertices")
    return count_adjacency_eigenvalues_above(graph, tau, method=method) <= 1


def lambda2_below(graph: GraphLike, tau: Threshold, method: str = "inertia") -> bool:
    """Decide lambda_2 < tau."""
    if graph.n < 2:
        raise DomainError("lambda_2 needs at least two vertices")
    return count_adjacency_eigenvalues_at_least(graph, tau, method=method) <= 1


# Ramanujan

def ramanujan_certificate(
    graph: GraphLike, allow_disconnected: bool = False
) -> RamanujanVerdict:
    """
    Exact Ramanujan test via the inertia of M = 4(k-1)I - A^2.

    The eigenvalue k (and -k when bipartite) gives M the eigenvalue
    -(k-2)^2 < 0; every other eigenvalue lambda gives 4(k-1) - lambda^2, which
    is nonnegative exactly when |lambda| <= 2 sqrt(k-1).

    With allow_disconnected, k has one copy per component and -k one copy per
    bipartite component; all of them are discarded as trivial.

    Args:
        graph: Connected k-regular graph (or multigraph) with k >= 3
        allow_disconnected: Accept disconnected graphs

    Returns:
        RamanujanVerdict carrying the inertia certificate

    Raises:
        DomainError: If the graph is irregular, has k <= 2, or is disconnected
            without allow_disconnected
    """
    k = regular_degree(graph)
    if k is None:
        raise DomainError("Ramanujan test needs a regular graph")
    if k <= 2:
        raise DomainError(f"Ramanujan test needs degree at least 3, got {k}")
    if not allow_disconnected and not is_connected(graph):
        raise DomainError("Ramanujan test needs a connected graph")

    adjacency = np.array(adjacency_matrix(graph), dtype=np.int64)
    squared = adjacency @ adjacency
    n = graph.n
    matrix = [
        [(4 * (k - 1) if i == j else 0) - int(squared[i, j]) for j in range(n)]
        for i in range(n)
    ]
    certificate = inertia_shifted(matrix, 0)
    bipartite = is_bipartite(graph)
    expected_negative = 0
    nx_graph = to_networkx(graph)
    for component in nx.connected_components(nx_graph):
        expected_negative += 2 if nx.is_bipartite(nx_graph.subgraph(component)) else 1
    verdict = certificate.n_neg == expected_negative
    logger.debug(
        "Ramanujan test n=%d k=%d bipartite=%s n_neg=%d -> %s",
        n, k, bipartite, certificate.n_neg, verdict,
    )
    return RamanujanVerdict(
        is_ramanujan=verdict,
        degree=k,
        bipartite=bipartite,
        threshold=QuadraticNumber(0, 2, k - 1),
        certificate=certificate,
    )


def is_ramanujan(graph: GraphLike, allow_disconnected: bool = False) -> bool:
    return ramanujan_certificate(graph, allow_disconnected).is_ramanujan


# Algebraic connectivity

def mu2_exceeds(graph: GraphLike, tau: Threshold, method: Optional[str] = None) -> bool:
    """
    Decide mu_2(G) > tau exactly.

    For tau > 0 this holds iff exactly one Laplacian eigenvalue is <= tau.
    Rational thresholds use inertia_shifted; irrational ones use Sturm counting
    with sign evaluation in Q(sqrt(m)), unless a method is forced.

    Args:
        graph: Connected graph or multigraph with at least two vertices
        tau: Threshold
        method: Optional override, "inertia" or "sturm"

    Returns:
        True iff mu_2 > tau

    Raises:
        DomainError: If the graph is disconnected or has fewer than two vertices
    """
    if graph.n < 2:
        raise DomainError("mu_2 needs at least two vertices")
    if not is_connected(graph):
        raise DomainError("mu_2 of a disconnected graph is zero")
    point = _normalize_threshold(tau)
    if _sign(point) <= 0:
        return True

    if method is None:
        method = "inertia" if not isinstance(point, QuadraticNumber) else "sturm"
    if method == "inertia":
        certificate = inertia_shifted(laplacian_matrix(graph), point)
        return certificate.n_neg + certificate.n_zero == 1
    above, _ = count_roots(characteristic_polynomial(graph, "laplacian"), point)
    return graph.n - above == 1


def mu2_bracket(
    graph: GraphLike, width: Fraction = Fraction(1, 1024)
) -> Tuple[Fraction, Fraction]:
    """
    Rationals lo < mu_2 <= hi with hi - lo <= width, certified by mu2_exceeds.

    Args:
        graph: Connected graph or multigraph
        width: Target bracket width

    Returns:
        (lo, hi)
    """
    lo = Fraction(0)
    hi = Fraction(2 * max_degree(graph) + 1)
    if mu2_exceeds(graph, hi):
        raise DomainError("mu_2 above the Laplacian spectral radius bound")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mu2_exceeds(graph, mid):
            lo = mid
        else:
            hi = mid
    return lo, hi


# Approximate spectra

def approx_spectrum(graph: GraphLike) -> SpectrumSummary:
    """
    Floating point spectra from numpy's symmetric eigensolver.

    Never used for decisions; is_ramanujan is filled from the exact test when the
    graph is connected and regular of degree at least 3.
    """
    adjacency = np.array(adjacency_matrix(graph), dtype=float)
    laplacian = np.array(laplacian_matrix(graph), dtype=float)
    if graph.n:
        eigenvalues = sorted(np.linalg.eigvalsh(adjacency).tolist(), reverse=True)
        laplacian_eigenvalues = sorted(np.linalg.eigvalsh(laplacian).tolist())
    else:
        eigenvalues, laplacian_eigenvalues = [], []

    ramanujan: Optional[bool] = None
    k = regular_degree(graph)
    if k is not None and k >= 3 and is_connected(graph):
        ramanujan = is_ramanujan(graph)

    return SpectrumSummary(
        approx_adjacency_eigenvalues=eigenvalues,
        approx_lambda2=eigenvalues[1] if len(eigenvalues) > 1 else None,
        approx_mu2=laplacian_eigenvalues[1] if len(laplacian_eigenvalues) > 1 else None,
        is_ramanujan=ramanujan,
        bipartite=is_bipartite(graph),
    )
