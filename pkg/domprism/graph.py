"""Simple undirected graphs, Cartesian products and prisms."""
from __future__ import annotations

import collections
import dataclasses
import typing as t

from domprism.errors import GraphError
from domprism.vertexset import check_capacity, iter_bits, popcount, VertexSet


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one neighbor bitmask per vertex. Graphs are immutable
    after construction and safe to share between processes.
    """

    __slots__ = ("_adj", "_n", "_prism_order")

    def __init__(
        self,
        n: int,
        adjacency: t.Sequence[int],
        prism_order: t.Union[int, None] = None,
    ) -> None:
        """Create a Graph from neighbor bitmasks.

        Args:
            n: Vertex count, at least 1
            adjacency: Neighbor bitmask for every vertex
            prism_order: Order of the base graph if this graph is its prism
                (vertex v of the base appears as 2v and 2v+1)

        Raises:
            GraphError if adjacency is not symmetric, has a loop, or n < 1
            CapacityError if n exceeds the vertex capacity
        """
        check_capacity(n)
        if n < 1:
            msg = f"Graph needs at least one vertex, got n={n}"
            raise GraphError(msg)
        if len(adjacency) != n:
            msg = f"Expected {n} adjacency masks, got {len(adjacency)}"
            raise GraphError(msg)
        for v, mask in enumerate(adjacency):
            if mask < 0 or mask >> n:
                msg = f"Vertex {v} has a neighbor outside 0..{n - 1}"
                raise GraphError(msg)
            if mask >> v & 1:
                msg = f"Vertex {v} has a self-loop"
                raise GraphError(msg)
            for u in iter_bits(mask):
                if not adjacency[u] >> v & 1:
                    msg = f"Adjacency not symmetric between {v} and {u}"
                    raise GraphError(msg)
        if prism_order is not None and prism_order * 2 != n:
            msg = f"Prism of order {prism_order} must have {2 * prism_order} vertices"
            raise GraphError(msg)
        self._n = n
        self._adj = tuple(adjacency)
        self._prism_order = prism_order

    @property
    def n(self) -> int:
        """Order of the graph."""
        return self._n

    @property
    def adjacency(self) -> t.Tuple[int, ...]:
        """Neighbor bitmask of every vertex."""
        return self._adj

    @property
    def prism_order(self) -> t.Union[int, None]:
        """Order of the base graph if this graph was built as a prism."""
        return self._prism_order

    @property
    def is_prism(self) -> bool:
        """True if built by prism() (or a constructor that tags it)."""
        return self._prism_order is not None

    @property
    def num_edges(self) -> int:
        """Size of the graph."""
        return sum(popcount(m) for m in self._adj) // 2

    def _vertex(self, v: int) -> int:
        if not 0 <= v < self._n:
            msg = f"Vertex {v} outside 0..{self._n - 1}"
            raise GraphError(msg)
        return v

    def vertices(self) -> VertexSet:
        """V(G)."""
        return VertexSet.full(self._n)

    def neighbors(self, v: int) -> VertexSet:
        """Open neighborhood N(v)."""
        return VertexSet(self._n, self._adj[self._vertex(v)])

    def closed_neighbors(self, v: int) -> VertexSet:
        """Closed neighborhood N[v]."""
        return VertexSet(self._n, self._adj[self._vertex(v)] | 1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        """True if uv is an edge."""
        return bool(self._adj[self._vertex(u)] >> self._vertex(v) & 1)

    def degree(self, v: int) -> int:
        """Degree of v."""
        return popcount(self._adj[self._vertex(v)])

    def degrees(self) -> t.List[int]:
        """Degree of every vertex."""
        return [popcount(m) for m in self._adj]

    def edges(self) -> t.List[t.Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [
            (u, v)
            for u, mask in enumerate(self._adj)
            for v in iter_bits(mask >> (u + 1) << (u + 1))
        ]

    def isolated_vertices(self) -> VertexSet:
        """Vertices of degree 0."""
        return VertexSet.of(self._n, (v for v, m in enumerate(self._adj) if m == 0))

    def relabel(self, perm: t.Sequence[int]) -> Graph:
        """Apply an explicit vertex bijection.

        Args:
            perm: perm[v] is the new index of vertex v

        Returns:
            Graph with edge perm[u]perm[v] for every edge uv

        Raises:
            GraphError if perm is not a permutation of 0..n-1
        """
        if sorted(perm) != list(range(self._n)):
            msg = "Relabeling is not a permutation of the vertex set"
            raise GraphError(msg)
        adj = [0] * self._n
        for v, mask in enumerate(self._adj):
            adj[perm[v]] = sum(1 << perm[u] for u in iter_bits(mask))
        return Graph(self._n, adj)

    def __eq__(self, obj: object) -> bool:
        """Equal if same order and same labeled edges; prism tags ignored."""
        if not isinstance(obj, Graph):
            return NotImplemented
        return self._n == obj._n and self._adj == obj._adj

    def __hash__(self) -> int:
        """Hash of the labeled graph."""
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        """Representation debug string."""
        return f"<Graph n={self._n} m={self.num_edges}>"

    def __getstate__(self) -> t.Tuple[int, t.Tuple[int, ...], t.Union[int, None]]:
        """Pickle support for worker pools."""
        return self._n, self._adj, self._prism_order

    def __setstate__(
        self,
        state: t.Tuple[int, t.Tuple[int, ...], t.Union[int, None]],
    ) -> None:
        """Restore from pickled state without revalidating."""
        self._n, self._adj, self._prism_order = state


@dataclasses.dataclass(frozen=True)
class ProductLabeling:
    """Vertex (g, h) of G □ H is index g * n(H) + h."""

    left_order: int
    right_order: int

    @property
    def size(self) -> int:
        """Order of the product."""
        return self.left_order * self.right_order

    def index(self, g: int, h: int) -> int:
        """Product index of (g, h)."""
        if not (0 <= g < self.left_order and 0 <= h < self.right_order):
            msg = f"({g}, {h}) outside {self.left_order} x {self.right_order}"
            raise GraphError(msg)
        return g * self.right_order + h

    def split(self, i: int) -> t.Tuple[int, int]:
        """Inverse of index."""
        if not 0 <= i < self.size:
            msg = f"Index {i} outside product of order {self.size}"
            raise GraphError(msg)
        return divmod(i, self.right_order)

    def transpose(self) -> t.List[int]:
        """Map from this labeling to the one of H □ G, as a permutation list."""
        return [
            h * self.left_order + g
            for g in range(self.left_order)
            for h in range(self.right_order)
        ]


@dataclasses.dataclass(frozen=True)
class Bipartition:
    """Partite sets of a bipartite graph."""

    partite_x: VertexSet
    partite_y: VertexSet


@dataclasses.dataclass(frozen=True)
class OddCycle:
    """Certificate that a graph is not bipartite."""

    cycle: t.Tuple[int, ...]

    def __len__(self) -> int:
        """Length of the odd cycle."""
        return len(self.cycle)


def make_graph(n: int, edges: t.Iterable[t.Tuple[int, int]]) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges are collapsed.

    Args:
        n: Vertex count
        edges: Unordered pairs of vertices

    Returns:
        Graph with exactly the given edges

    Raises:
        GraphError for an out-of-range endpoint or a self-loop
    """
    check_capacity(n)
    if n < 1:
        msg = f"Graph needs at least one vertex, got n={n}"
        raise GraphError(msg)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            msg = f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
            raise GraphError(msg)
        if u == v:
            msg = f"Self-loop at vertex {u}"
            raise GraphError(msg)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G followed by H, vertices of H shifted by n(G)."""
    check_capacity(g.n + h.n)
    return Graph(g.n + h.n, [*g.adjacency, *(m << g.n for m in h.adjacency)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product G □ H under ProductLabeling.

    Args:
        g: Left factor
        h: Right factor

    Returns:
        Graph of order n(G) * n(H)

    Raises:
        CapacityError if the product exceeds the vertex capacity
    """
    labels = ProductLabeling(g.n, h.n)
    check_capacity(labels.size)
    nh = h.n
    adj = []
    for gv, g_mask in enumerate(g.adjacency):
        # Neighbors of gv, spread onto layer offsets g' * n(H)
        spread = sum(1 << (u * nh) for u in iter_bits(g_mask))
        adj.extend(
            (h_mask << (gv * nh)) | (spread << hv)
            for hv, h_mask in enumerate(h.adjacency)
        )
    return Graph(labels.size, adj)


def prism(g: Graph) -> Graph:
    """Prism G □ K_2; vertex v of layer i is 2v + i."""
    p = cartesian_product(g, make_graph(2, [(0, 1)]))
    return Graph(p.n, p.adjacency, prism_order=g.n)


def partner(g_prism: Graph, v: int) -> int:
    """Other endpoint of the cross-matching edge at v.

    Args:
        g_prism: Graph produced by prism()
        v: Vertex of the prism

    Returns:
        The vertex in the other layer matched with v

    Raises:
        GraphError if g_prism is not tagged as a prism or v is invalid
    """
    if not g_prism.is_prism:
        msg = "partner() needs a graph built by prism()"
        raise GraphError(msg)
    if not 0 <= v < g_prism.n:
        msg = f"Vertex {v} outside 0..{g_prism.n - 1}"
        raise GraphError(msg)
    return v ^ 1


def partner_set(g_prism: Graph, s: VertexSet) -> VertexSet:
    """Apply partner() to every member of s."""
    return VertexSet.of(g_prism.n, (partner(g_prism, v) for v in s))


def bipartition(g: Graph) -> t.Union[Bipartition, OddCycle]:
    """Two-color G or find an odd cycle.

    Components are colored independently by breadth-first search; the
    smallest vertex of each component goes to X.

    Args:
        g: Graph to color

    Returns:
        Bipartition if G is bipartite, else OddCycle
    """
    color: t.List[t.Union[int, None]] = [None] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    adj = g.adjacency
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = collections.deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(adj[u]):
                if color[w] is None:
                    color[w] = 1 - t.cast(int, color[u])
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return OddCycle(_cycle_through(u, w, parent, depth))
    x = VertexSet.of(g.n, (v for v in range(g.n) if color[v] == 0))
    return Bipartition(x, x.complement())


def _cycle_through(
    u: int,
    w: int,
    parent: t.List[int],
    depth: t.List[int],
) -> t.Tuple[int, ...]:
    """Close the tree paths of u and w with the edge uw."""
    left = [u]
    right = [w]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    # Common ancestor appears once
    return tuple(left + right[-2::-1])


def is_bipartite(g: Graph) -> bool:
    """True if G has no odd cycle."""
    return isinstance(bipartition(g), Bipartition)


def connected_components(g: Graph) -> t.List[VertexSet]:
    """Maximal connected vertex sets, ordered by smallest member."""
    remaining = (1 << g.n) - 1
    adj = g.adjacency
    components = []
    while remaining:
        seen = remaining & -remaining
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & ~seen
            seen |= frontier
        components.append(VertexSet(g.n, seen))
        remaining &= ~seen
    return components


def is_connected(g: Graph) -> bool:
    """True if G has exactly one component."""
    return len(connected_components(g)) == 1


def max_degree(g: Graph) -> int:
    """Maximum degree Δ(G)."""
    return max(g.degrees())


def is_triangle_free(g: Graph) -> bool:
    """True if no two adjacent vertices share a neighbor."""
    adj = g.adjacency
    return all(adj[u] & adj[v] == 0 for u, v in g.edges())
