"""Neighborhood hypergraphs and the transversal mappings of the prism proof."""
from __future__ import annotations

import collections
import typing as t

from domprism.errors import (
    CertificateError,
    EmptyEdgeError,
    GraphError,
    NotBipartiteError,
)
from domprism.graph import Bipartition, bipartition, Graph, OddCycle, prism
from domprism.vertexset import check_capacity, iter_bits, popcount, VertexSet


class Hypergraph:
    """Vertex universe plus a list of hyperedges.

    Duplicate hyperedges are kept so multiset comparisons see the original
    multiplicities.
    """

    __slots__ = ("_edge_origin", "_masks", "_num_vertices")

    def __init__(
        self,
        num_vertices: int,
        edges: t.Iterable[t.Union[VertexSet, int]],
        edge_origin: t.Union[t.Sequence[int], None] = None,
    ) -> None:
        """Create a Hypergraph.

        Args:
            num_vertices: Universe size
            edges: Hyperedges as VertexSets or bitmasks
            edge_origin: Optional per-edge tag, the graph vertex w whose
                neighborhood produced the edge

        Raises:
            GraphError if an edge leaves the universe or origins mismatch
        """
        check_capacity(num_vertices)
        masks = []
        for e in edges:
            mask = e.mask if isinstance(e, VertexSet) else int(e)
            if mask < 0 or mask >> num_vertices:
                msg = f"Hyperedge {mask:#x} leaves a universe of {num_vertices}"
                raise GraphError(msg)
            masks.append(mask)
        if edge_origin is not None and len(edge_origin) != len(masks):
            msg = f"{len(edge_origin)} edge origins for {len(masks)} edges"
            raise GraphError(msg)
        self._num_vertices = num_vertices
        self._masks = tuple(masks)
        self._edge_origin = None if edge_origin is None else tuple(edge_origin)

    @property
    def num_vertices(self) -> int:
        """Universe size."""
        return self._num_vertices

    @property
    def masks(self) -> t.Tuple[int, ...]:
        """Hyperedges as bitmasks."""
        return self._masks

    @property
    def edges(self) -> t.List[VertexSet]:
        """Hyperedges as VertexSets."""
        return [VertexSet(self._num_vertices, m) for m in self._masks]

    @property
    def edge_origin(self) -> t.Union[t.Tuple[int, ...], None]:
        """Graph vertex that produced each edge, if recorded."""
        return self._edge_origin

    def __len__(self) -> int:
        """Number of hyperedges."""
        return len(self._masks)

    def __repr__(self) -> str:
        """Representation debug string."""
        return f"<Hypergraph {self._num_vertices} vertices, {len(self)} edges>"

    def degree(self, v: int) -> int:
        """Number of hyperedges containing v."""
        return sum(1 for e in self._masks if e >> v & 1)

    def empty_edge(self) -> t.Union[int, None]:
        """Index of the first empty hyperedge, None if there is none."""
        for i, e in enumerate(self._masks):
            if e == 0:
                return i
        return None


class HypergraphComponent(t.NamedTuple):
    """Connected piece of a hypergraph, reindexed to 0..len(part)-1."""

    part: VertexSet
    hypergraph: Hypergraph
    back_map: t.Tuple[int, ...]

    def lift(self, local: int) -> VertexSet:
        """Map a bitmask over the reindexed universe back to the parent."""
        return VertexSet.of(
            self.part.universe_size,
            (self.back_map[i] for i in iter_bits(local)),
        )


def onh(g: Graph) -> Hypergraph:
    """Open neighborhood hypergraph, one edge N(w) per vertex w.

    Raises:
        EmptyEdgeError naming an isolated vertex
    """
    isolated = g.isolated_vertices()
    if isolated:
        v = isolated.min()
        msg = f"ONH has an empty edge: vertex {v} is isolated"
        raise EmptyEdgeError(msg, vertex=v)
    return Hypergraph(g.n, g.adjacency, edge_origin=range(g.n))


def cnh(g: Graph) -> Hypergraph:
    """Closed neighborhood hypergraph, one edge N[w] per vertex w."""
    return Hypergraph(
        g.n,
        (m | 1 << v for v, m in enumerate(g.adjacency)),
        edge_origin=range(g.n),
    )


def hypergraph_components(h: Hypergraph) -> t.List[HypergraphComponent]:
    """Split H where no hyperedge joins two vertex groups.

    Vertices in no edge form singleton components. Components are ordered by
    smallest vertex; each keeps the edges inside its part, reindexed.
    """
    n = h.num_vertices

    # Union-find keyed on lowest vertex of every edge
    root = list(range(n))

    def find(v: int) -> int:
        while root[v] != v:
            root[v] = root[root[v]]
            v = root[v]
        return v

    for e in h.masks:
        if not e:
            continue
        anchor = find((e & -e).bit_length() - 1)
        for v in iter_bits(e):
            r = find(v)
            if r != anchor:
                root[max(r, anchor)] = min(r, anchor)
                anchor = min(r, anchor)

    parts: t.Dict[int, int] = {}
    for v in range(n):
        r = find(v)
        parts[r] = parts.get(r, 0) | 1 << v

    origin = h.edge_origin
    components = []
    for r in sorted(parts):
        part = parts[r]
        back_map = tuple(iter_bits(part))
        forward = {v: i for i, v in enumerate(back_map)}
        sub_masks = []
        sub_origin = []
        for i, e in enumerate(h.masks):
            if e and e & part == e:
                sub_masks.append(sum(1 << forward[v] for v in iter_bits(e)))
                if origin is not None:
                    sub_origin.append(origin[i])
        components.append(
            HypergraphComponent(
                VertexSet(n, part),
                Hypergraph(
                    len(back_map),
                    sub_masks,
                    None if origin is None else sub_origin,
                ),
                back_map,
            ),
        )
    return components


def is_transversal(h: Hypergraph, transversal: VertexSet) -> bool:
    """True iff every hyperedge meets the set."""
    if transversal.universe_size != h.num_vertices:
        msg = (
            f"Set over {transversal.universe_size} vertices for a hypergraph "
            f"over {h.num_vertices}"
        )
        raise GraphError(msg)
    mask = transversal.mask
    return all(e & mask for e in h.masks)


def _require_nonempty(h: Hypergraph) -> None:
    i = h.empty_edge()
    if i is not None:
        origin = None if h.edge_origin is None else h.edge_origin[i]
        msg = f"Hyperedge {i} is empty, no transversal exists"
        raise EmptyEdgeError(msg, vertex=origin)


def greedy_masks(masks: t.Iterable[int]) -> int:
    """Max-coverage greedy transversal of nonempty bitmask edges."""
    remaining = list(masks)
    chosen = 0
    while remaining:
        counts: t.Dict[int, int] = collections.Counter()
        for e in remaining:
            for v in iter_bits(e):
                counts[v] += 1
        best = min(counts, key=lambda v: (-counts[v], v))
        chosen |= 1 << best
        remaining = [e for e in remaining if not e >> best & 1]
    return chosen


def greedy_transversal(h: Hypergraph) -> VertexSet:
    """Transversal built by repeatedly taking the vertex hitting most edges.

    Ties go to the smallest vertex.

    Raises:
        EmptyEdgeError if some edge is empty
    """
    _require_nonempty(h)
    return VertexSet(h.num_vertices, greedy_masks(h.masks))


def greedy_packing(masks: t.Iterable[int], taken: t.Sequence[int] = ()) -> t.List[int]:
    """Extend taken with pairwise disjoint edges, shortest first.

    Args:
        masks: Candidate nonempty edges
        taken: Pairwise disjoint edges already in the packing

    Returns:
        taken followed by every greedily added edge
    """
    packing = list(taken)
    used = 0
    for p in packing:
        used |= p
    for e in sorted(masks, key=lambda e: (popcount(e), e)):
        if e and not e & used:
            packing.append(e)
            used |= e
    return packing


def packing_lower_bound(h: Hypergraph) -> int:
    """Size of a greedy family of pairwise disjoint hyperedges.

    Each member needs its own transversal vertex, so the count is at most τ(H).
    """
    return len(greedy_packing(h.masks))


def degree_bound(degrees: t.Iterable[int], num_edges: int) -> int:
    """Smallest t whose t largest vertex degrees sum to at least num_edges."""
    covered = 0
    count = 0
    for d in sorted(degrees, reverse=True):
        if covered >= num_edges:
            break
        covered += d
        count += 1
    return count


def degree_lower_bound(h: Hypergraph) -> int:
    """Counting bound on τ(H): each vertex hits at most its degree in edges."""
    edges = [e for e in h.masks if e]
    degrees: t.Dict[int, int] = collections.Counter()
    for e in edges:
        for v in iter_bits(e):
            degrees[v] += 1
    return degree_bound(degrees.values(), len(edges))


def _prism_sides(g: Graph) -> t.Tuple[Graph, Bipartition]:
    """Prism of a bipartite G with its partite sets X (holding vertex 0) and Y."""
    colored = bipartition(g)
    if isinstance(colored, OddCycle):
        msg = f"Graph is not bipartite, odd cycle {list(colored.cycle)}"
        raise NotBipartiteError(msg, colored.cycle)
    p = prism(g)
    sides = bipartition(p)
    if not isinstance(sides, Bipartition):  # pragma: no cover
        msg = "Prism of a bipartite graph must be bipartite"
        raise AssertionError(msg)
    return p, sides


def _swap_layers(mask: int) -> int:
    """Apply partner() to every member of a prism vertex bitmask."""
    return sum(1 << (v ^ 1) for v in iter_bits(mask))


def prism_onh_sides(g: Graph) -> t.Tuple[Graph, Bipartition, t.List[int], t.List[int]]:
    """Split the ONH of the prism of a bipartite G into H_X and H_Y edges.

    Args:
        g: Bipartite graph without isolated vertices

    Returns:
        prism, its bipartition, edges inside X, edges inside Y

    Raises:
        NotBipartiteError if G has an odd cycle
        EmptyEdgeError if G has an isolated vertex
    """
    if g.isolated_vertices():
        v = g.isolated_vertices().min()
        msg = f"ONH has an empty edge: vertex {v} is isolated"
        raise EmptyEdgeError(msg, vertex=v)
    p, sides = _prism_sides(g)
    h = onh(p)
    x = sides.partite_x.mask
    y = sides.partite_y.mask
    h_x = [e for e in h.masks if e & ~x == 0]
    h_y = [e for e in h.masks if e & ~y == 0]
    return p, sides, h_x, h_y


def layer_isomorphism_check(g: Graph) -> bool:
    """Check that partner() maps the edges of H_X onto those of H_Y.

    H is the ONH of the prism of G; H_X and H_Y are its parts on the partite
    sets X and Y of the prism. Multiplicities must agree in both directions.

    Raises:
        NotBipartiteError if G is not bipartite
        EmptyEdgeError if G has an isolated vertex
    """
    _, _, h_x, h_y = prism_onh_sides(g)
    forward = collections.Counter(_swap_layers(e) for e in h_x)
    backward = collections.Counter(_swap_layers(e) for e in h_y)
    return forward == collections.Counter(h_y) and backward == collections.Counter(h_x)


def transversal_to_dominating(g: Graph, t_x: VertexSet) -> VertexSet:
    """Project a transversal of H_X onto a dominating set of G.

    Layer 0 of the prism is identified with G: a member 2v + 0 gives v, a
    member 2v + 1 gives its partner's vertex v.

    Args:
        g: Bipartite graph without isolated vertices
        t_x: Transversal of H_X over the prism's vertices

    Returns:
        Dominating set of G of size at most |t_x|

    Raises:
        CertificateError if t_x misses an edge of H_X
    """
    p, _, h_x, _ = prism_onh_sides(g)
    if t_x.universe_size != p.n:
        msg = f"Set over {t_x.universe_size} vertices, prism has {p.n}"
        raise GraphError(msg)
    missed = [e for e in h_x if not e & t_x.mask]
    if missed:
        msg = f"Not a transversal of H_X: misses {VertexSet(p.n, missed[0]).to_list()}"
        raise CertificateError(msg)
    return VertexSet.of(g.n, (v >> 1 for v in t_x))
