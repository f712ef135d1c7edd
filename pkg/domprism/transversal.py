"""Exact minimum transversal by depth-first branch-and-bound.

Every node applies four reductions until none fires:
  unit edges force their vertex
  edges already hit are deleted
  an edge containing another edge is deleted
  a vertex whose incident edges are a subset of another vertex's is deleted
The lower bound is the larger of a disjoint-edge packing and a degree
counting bound. Branching takes the shortest edge and tries its vertices in
decreasing degree; once a vertex's branch is done it is excluded from its
siblings.
"""
from __future__ import annotations

import dataclasses
import logging
import typing as t

from domprism.errors import EmptyEdgeError
from domprism.hypergraph import (
    degree_bound,
    greedy_masks,
    greedy_packing,
    Hypergraph,
    hypergraph_components,
)
from domprism.vertexset import iter_bits, popcount, VertexSet

_LOGGER = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 50_000_000

# Packing is rebuilt from scratch at depths divisible by this, else extended
PACKING_REFRESH = 4


@dataclasses.dataclass
class SolverStats:
    """Search counters, summed over components."""

    nodes: int = 0
    incumbent_updates: int = 0
    bound_prunes: int = 0

    def __add__(self, obj: SolverStats) -> SolverStats:
        """Sum of two counters."""
        return SolverStats(
            self.nodes + obj.nodes,
            self.incumbent_updates + obj.incumbent_updates,
            self.bound_prunes + obj.bound_prunes,
        )


@dataclasses.dataclass(frozen=True)
class TransversalResult:
    """Outcome of transversal_number.

    When decided, value is τ(H) and no transversal of size value-1 exists.
    When the node budget ran out, value is the best size found and
    lower_bound the best proven bound.
    """

    value: int
    witness: VertexSet
    stats: SolverStats
    lower_bound: int
    decided: bool = True


class _BudgetExhaustedError(Exception):
    pass


def _incidence(edges: t.Sequence[int]) -> t.Dict[int, int]:
    """Map each vertex to the bitmask of edge indices containing it."""
    inc: t.Dict[int, int] = {}
    for i, e in enumerate(edges):
        bit = 1 << i
        for v in iter_bits(e):
            inc[v] = inc.get(v, 0) | bit
    return inc


def _superset_edges(edges: t.Sequence[int], inc: t.Dict[int, int]) -> int:
    """Indices of edges that strictly contain another edge, as a bitmask.

    Edges must be distinct.
    """
    drop = 0
    for i, f in enumerate(edges):
        holders = -1
        for v in iter_bits(f):
            holders &= inc[v]
        drop |= holders & ~(1 << i)
    return drop


def _dominated_vertices(edges: t.Sequence[int], inc: t.Dict[int, int]) -> int:
    """Vertices whose incident edges all contain some other kept vertex.

    Among vertices with identical incidence the smallest is kept.
    """
    removed = 0
    for u, inc_u in inc.items():
        common = -1
        for i in iter_bits(inc_u):
            common &= edges[i]
        for w in iter_bits(common & ~(1 << u)):
            if w < u or inc[w] != inc_u:
                removed |= 1 << u
                break
    return removed


def reduce_edges(
    edges: t.Sequence[int],
    chosen: int = 0,
) -> t.Tuple[t.List[int], int, t.Dict[int, int]]:
    """Apply the four safe reductions until a fixed point.

    Args:
        edges: Nonempty, not yet hit edges as bitmasks
        chosen: Vertices already in the transversal

    Returns:
        remaining edges, chosen vertices including forced ones, incidence map
    """
    edges = list(edges)
    while True:
        units = 0
        for e in edges:
            if e & (e - 1) == 0:
                units |= e
        if units:
            chosen |= units
            edges = [e for e in edges if not e & units]
            continue
        edges = list(dict.fromkeys(edges))
        inc = _incidence(edges)
        drop = _superset_edges(edges, inc)
        if drop:
            edges = [e for i, e in enumerate(edges) if not drop >> i & 1]
            inc = _incidence(edges)
        removed = _dominated_vertices(edges, inc)
        if removed:
            edges = [e & ~removed for e in edges]
            continue
        return edges, chosen, inc


class _Search:
    """Branch-and-bound over one connected component."""

    def __init__(self, edges: t.List[int], incumbent: int, budget: int) -> None:
        self.edges = edges
        self.best = incumbent
        self.best_size = popcount(incumbent)
        self.budget = budget
        self.stats = SolverStats()

    def run(self) -> None:
        self._visit(self.edges, 0, 0, [])

    def _visit(
        self,
        edges: t.List[int],
        chosen: int,
        depth: int,
        packing: t.List[int],
    ) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget:
            raise _BudgetExhaustedError
        edges, chosen, inc = reduce_edges(edges, chosen)
        size = popcount(chosen)
        if not edges:
            if size < self.best_size:
                self.best = chosen
                self.best_size = size
                self.stats.incumbent_updates += 1
            return

        if depth % PACKING_REFRESH == 0:
            packing = greedy_packing(edges)
        else:
            packing = greedy_packing(edges, [p for p in packing if not p & chosen])
        bound = max(
            len(packing),
            degree_bound((popcount(m) for m in inc.values()), len(edges)),
        )
        if size + bound >= self.best_size:
            self.stats.bound_prunes += 1
            return

        pivot = min(edges, key=lambda e: (popcount(e), e & -e, e))
        order = sorted(iter_bits(pivot), key=lambda v: (-popcount(inc[v]), v))
        excluded = 0
        for v in order:
            bit = 1 << v
            keep = ~excluded
            child = []
            for e in edges:
                if e & bit:
                    continue
                e &= keep
                if not e:
                    break
                child.append(e)
            else:
                self._visit(child, chosen | bit, depth + 1, packing)
            excluded |= bit


def transversal_number(
    h: Hypergraph,
    budget: t.Union[int, None] = None,
    incumbent: t.Union[VertexSet, None] = None,
) -> TransversalResult:
    """Minimum transversal of H with a witness.

    Components are solved independently and summed.

    Args:
        h: Hypergraph without empty edges
        budget: Node limit over all components, None for DEFAULT_NODE_BUDGET
        incumbent: Known transversal to start from, ignored if it is not one

    Returns:
        TransversalResult, decided=False if the budget ran out

    Raises:
        EmptyEdgeError if some edge is empty
    """
    empty = h.empty_edge()
    if empty is not None:
        origin = None if h.edge_origin is None else h.edge_origin[empty]
        msg = f"Hyperedge {empty} is empty, no transversal exists"
        raise EmptyEdgeError(msg, vertex=origin)
    remaining = DEFAULT_NODE_BUDGET if budget is None else budget

    stats = SolverStats()
    witness = 0
    lower = 0
    decided = True
    for comp in hypergraph_components(h):
        masks = list(comp.hypergraph.masks)
        if not masks:
            continue
        start = greedy_masks(masks)
        if incumbent is not None:
            local = sum(
                1 << i for i, v in enumerate(comp.back_map) if v in incumbent
            )
            if all(e & local for e in masks) and popcount(local) < popcount(start):
                start = local

        search = _Search(masks, start, remaining)
        try:
            search.run()
        except _BudgetExhaustedError:
            decided = False
            root_edges, forced, _ = reduce_edges(masks)
            root_bound = popcount(forced) + len(greedy_packing(root_edges))
            lower += min(search.best_size, root_bound)
            _LOGGER.info(
                "Budget exhausted on a %d-vertex component after %d nodes, "
                "bounds [%d, %d]",
                len(comp.back_map),
                search.stats.nodes,
                root_bound,
                search.best_size,
            )
        else:
            lower += search.best_size
        _LOGGER.debug(
            "Component of %d vertices, %d edges: size %d, %s",
            len(comp.back_map),
            len(masks),
            search.best_size,
            search.stats,
        )
        remaining = max(0, remaining - search.stats.nodes)
        stats = stats + search.stats
        witness |= comp.lift(search.best).mask

    w = VertexSet(h.num_vertices, witness)
    return TransversalResult(len(w), w, stats, lower, decided)
