"""Per-graph analysis behind `rigikit analyze`."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import List, Optional, Sequence, Tuple

from rigikit.config import settings
from rigikit.errors import DomainError
from rigikit.models.graph_models import SimpleGraph
from rigikit.schemas.report_schemas import (
    BasicStats,
    BodyReport,
    ConnectivityReport,
    PackingReport,
    PropertyReport,
    RigidityReport,
    SpectralReport,
    SurfaceReport,
)
from rigikit.services import (
    bounds_service,
    connectivity_service,
    graph_service,
    packing_service,
    rigidity_service,
    spectral_service,
    surface_service,
)
from rigikit.services.graph6_service import emit_graph6
from rigikit.services.surface_service import SurfaceKind

logger = logging.getLogger(__name__)


def _basic(graph: SimpleGraph) -> BasicStats:
    return BasicStats(
        n=graph.n,
        m=graph.m,
        regular_degree=graph_service.regular_degree(graph),
        min_degree=graph_service.min_degree(graph) if graph.n else 0,
        max_degree=graph_service.max_degree(graph) if graph.n else 0,
        connected=graph_service.is_connected(graph),
        bipartite=graph_service.is_bipartite(graph),
        diameter=graph_service.diameter(graph),
    )


def _spectral(graph: SimpleGraph) -> SpectralReport:
    summary = spectral_service.approx_spectrum(graph)
    return SpectralReport(
        is_ramanujan=summary.is_ramanujan,
        approx_lambda2=summary.approx_lambda2,
        approx_mu2=summary.approx_mu2,
    )


def _connectivity(graph: SimpleGraph) -> Optional[ConnectivityReport]:
    if graph.n < 2:
        return None
    return ConnectivityReport(
        edge_connectivity=connectivity_service.edge_connectivity(graph)[0],
        vertex_connectivity=connectivity_service.vertex_connectivity(graph)[0],
        jj_mixed=(
            connectivity_service.jj_mixed_condition(graph) if graph.n >= 4 else None
        ),
    )


def _rigidity(graph: SimpleGraph) -> RigidityReport:
    return RigidityReport(
        rigid=rigidity_service.is_rigid_2d(graph),
        redundantly_rigid=rigidity_service.is_redundantly_rigid_2d(graph),
        globally_rigid=rigidity_service.is_globally_rigid_2d(graph),
    )


def _packing(graph: SimpleGraph) -> Optional[PackingReport]:
    if graph.n < 2:
        return None
    packing = packing_service.max_tree_packing(graph)
    return PackingReport(
        tree_count=packing.tree_count,
        strength=str(packing_service.strength(graph)),
    )


def _body(graph: SimpleGraph, d: int) -> BodyReport:
    report = BodyReport(d=d)
    try:
        report.body_bar_rigid = packing_service.body_bar_rigid(graph, d)
        report.body_bar_globally_rigid = packing_service.body_bar_globally_rigid(
            graph, d
        )
    except DomainError as e:
        # d = 1 admits no simple edge below the multiplicity bound
        logger.debug("Body-bar skipped for d=%d: %s", d, e)
    if d >= 2:
        report.body_hinge_rigid = packing_service.body_hinge_rigid(graph, d)
        report.body_hinge_globally_rigid = packing_service.body_hinge_globally_rigid(
            graph, d
        )
    return report


def _surfaces(graph: SimpleGraph) -> Optional[SurfaceReport]:
    if graph.n == 0 or not graph_service.is_connected(graph):
        return None
    return SurfaceReport(
        sphere=surface_service.rigid_on_surface(graph, SurfaceKind.SPHERE),
        cylinder=surface_service.rigid_on_surface(graph, SurfaceKind.CYLINDER),
        general_revolution=surface_service.rigid_on_surface(
            graph, SurfaceKind.GENERAL_REVOLUTION
        ),
        cylinder_redundantly_rigid=surface_service.redundantly_rigid_on_cylinder(graph),
        cylinder_globally_rigid=surface_service.globally_rigid_on_cylinder(graph),
    )


def analyze_graph(
    graph: SimpleGraph,
    index: int = 1,
    dimensions: Optional[Sequence[int]] = None,
    bounds: bool = True,
    timings: bool = False,
) -> PropertyReport:
    """
    Run every exact analysis on one graph.

    Args:
        graph: Input graph
        index: Input line number reported back
        dimensions: Body frameworks dimensions, settings.default_dimensions if None
        bounds: Whether to evaluate and cross-check the sufficient conditions
        timings: Record wall-clock seconds

    Returns:
        PropertyReport for the graph
    """
    started = time.perf_counter()
    dims = list(dimensions) if dimensions is not None else settings.default_dimensions
    logger.debug("Analyzing graph %d (n=%d, m=%d)", index, graph.n, graph.m)

    report = PropertyReport(
        index=index,
        graph6=emit_graph6(graph),
        basic=_basic(graph),
        spectral=_spectral(graph),
        connectivity=_connectivity(graph),
        rigidity=_rigidity(graph),
        packing=_packing(graph),
        body=[_body(graph, d) for d in dims],
        surfaces=_surfaces(graph),
    )

    if bounds:
        try:
            checked = bounds_service.cross_check(graph)
        except DomainError as e:
            logger.debug("Bounds skipped for graph %d: %s", index, e)
            report.bounds = []
        else:
            report.bounds = checked.verdicts
            report.violations = checked.violations

    if timings:
        report.seconds = round(time.perf_counter() - started, 3)
    return report


def _analyze_entry(
    entry: Tuple[int, SimpleGraph],
    dimensions: Optional[Sequence[int]],
    bounds: bool,
    timings: bool,
) -> PropertyReport:
    index, graph = entry
    return analyze_graph(
        graph, index=index, dimensions=dimensions, bounds=bounds, timings=timings
    )


def analyze_graphs(
    entries: Sequence[Tuple[int, SimpleGraph]],
    dimensions: Optional[Sequence[int]] = None,
    bounds: bool = True,
    timings: bool = False,
    threads: Optional[int] = None,
) -> List[PropertyReport]:
    """
    Analyze numbered graphs, reporting in input order.

    With more than one worker the graphs are analyzed in separate processes;
    the output does not depend on the worker count.

    Args:
        entries: (input line number, graph) pairs
        dimensions: Body frameworks dimensions, settings.default_dimensions if None
        bounds: Whether to evaluate and cross-check the sufficient conditions
        timings: Record wall-clock seconds
        threads: Worker processes, settings.threads if None

    Returns:
        One PropertyReport per entry
    """
    worker = partial(
        _analyze_entry, dimensions=dimensions, bounds=bounds, timings=timings
    )
    workers = threads or settings.threads
    if workers <= 1 or len(entries) < 2:
        return [worker(entry) for entry in entries]
    logger.info("Analyzing %d graphs with %d workers", len(entries), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(worker, entries))
