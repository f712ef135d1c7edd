"""Graph corpora: isomorph-free small graphs, trees, random samples, geng.

Orders up to MAX_GENERATED_ORDER are generated internally by adding one
vertex at a time and deduplicating on a canonical form. Larger corpora come
from nauty's geng or from a graph6 file.
"""
from __future__ import annotations

import functools
import itertools
import logging
import typing as t

import networkx as nx

from domprism import runner
from domprism.errors import DomprismError, GraphError, NotFoundError
from domprism.graph import Graph, is_connected, make_graph
from domprism.vertexset import iter_bits, popcount

if t.TYPE_CHECKING:
    import random

_LOGGER = logging.getLogger(__name__)

MAX_GENERATED_ORDER = 7


def to_networkx(g: Graph) -> nx.Graph:
    """Copy into a networkx graph with nodes 0..n-1."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Copy from networkx, numbering nodes in sorted order."""
    index = {node: i for i, node in enumerate(sorted(nxg.nodes))}
    return make_graph(len(index), ((index[u], index[v]) for u, v in nxg.edges))


def _color_classes(g: Graph) -> t.List[t.List[int]]:
    """Stable vertex coloring by iterated neighbor-color refinement.

    Classes are ordered by their color signature, which depends only on the
    isomorphism class of G.
    """
    adj = g.adjacency
    colors = [popcount(m) for m in adj]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [rank[s] for s in sigs]
        stable = len(rank) == len(set(colors))
        colors = refined
        if stable:
            break
    classes: t.List[t.List[int]] = [[] for _ in range(len(set(colors)))]
    for v, c in enumerate(colors):
        classes[c].append(v)
    return classes


def _code(adj: t.Sequence[int], order: t.Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        mj = adj[order[j]]
        for i in range(j):
            code = code << 1 | (mj >> order[i] & 1)
    return code


def _canonical_order(g: Graph) -> t.Tuple[int, t.Tuple[int, ...]]:
    adj = g.adjacency
    best_code = -1
    best_order: t.Tuple[int, ...] = ()
    per_class = [itertools.permutations(c) for c in _color_classes(g)]
    for parts in itertools.product(*per_class):
        order = tuple(itertools.chain.from_iterable(parts))
        code = _code(adj, order)
        if code > best_code:
            best_code, best_order = code, order
    return best_code, best_order


def canonical_form(g: Graph) -> t.Tuple[int, int]:
    """Isomorphism invariant key (n, code).

    The code is the largest upper-triangle adjacency code over all vertex
    orders that list the refined color classes in order. Every isomorphism
    maps classes onto classes, so two graphs share a key iff isomorphic.
    """
    return g.n, _canonical_order(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """G relabeled into its canonical vertex order."""
    order = _canonical_order(g)[1]
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(perm)


@functools.lru_cache(maxsize=None)
def graphs_of_order(n: int) -> t.Tuple[Graph, ...]:
    """Every graph of order n up to isomorphism, canonically labeled.

    Args:
        n: Order, 1..MAX_GENERATED_ORDER

    Returns:
        Graphs sorted by canonical code

    Raises:
        GraphError if n is outside the supported range
    """
    if not 1 <= n <= MAX_GENERATED_ORDER:
        msg = f"Internal generation covers orders 1..{MAX_GENERATED_ORDER}, got {n}"
        raise GraphError(msg)
    if n == 1:
        return (Graph(1, [0]),)
    found: t.Dict[int, Graph] = {}
    new = n - 1
    for base in graphs_of_order(n - 1):
        for mask in range(1 << new):
            adj = [m | (mask >> v & 1) << new for v, m in enumerate(base.adjacency)]
            adj.append(mask)
            g = Graph(n, adj)
            _, code = canonical_form(g)
            if code not in found:
                found[code] = canonical_graph(g)
    _LOGGER.debug("Generated %d graphs of order %d", len(found), n)
    return tuple(found[code] for code in sorted(found))


def connected_graphs(n: int) -> t.Tuple[Graph, ...]:
    """Connected members of graphs_of_order(n)."""
    return tuple(g for g in graphs_of_order(n) if is_connected(g))


def trees(n: int) -> t.List[Graph]:
    """Every tree of order n up to isomorphism."""
    if n < 1:
        msg = f"Trees need n >= 1, got {n}"
        raise GraphError(msg)
    if n == 1:
        return [Graph(1, [0])]
    return [from_networkx(tree) for tree in nx.nonisomorphic_trees(n)]


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """G(n, p): every pair is an edge independently with probability p."""
    pairs = itertools.combinations(range(n), 2)
    return make_graph(n, (e for e in pairs if rng.random() < p))


def random_connected_graph(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges.update(e for e in itertools.combinations(range(n), 2) if rng.random() < p)
    perm = list(range(n))
    rng.shuffle(perm)
    return make_graph(n, edges).relabel(perm)


def random_connected_bipartite(n: int, rng: random.Random, p: float = 0.3) -> Graph:
    """Random connected bipartite graph of order n >= 2.

    Sides are 0..a-1 and a..n-1 before a random relabeling. Each vertex past
    the first of either side is attached to an earlier vertex of the other
    side, then cross pairs are added with probability p.
    """
    if n < 2:  # noqa: PLR2004
        msg = f"Connected bipartite graphs here need n >= 2, got {n}"
        raise GraphError(msg)
    a = rng.randint(1, n - 1)
    xs = list(range(a))
    ys = list(range(a, n))
    edges = {(0, a)}
    placed_x, placed_y = [0], [a]
    for v in xs[1:] + ys[1:]:
        if v < a:
            edges.add((v, rng.choice(placed_y)))
            placed_x.append(v)
        else:
            edges.add((rng.choice(placed_x), v))
            placed_y.append(v)
    edges.update((x, y) for x in xs for y in ys if rng.random() < p)
    perm = list(range(n))
    rng.shuffle(perm)
    return make_graph(n, edges).relabel(perm)


def geng_tokens(n: int, *, connected: bool = True) -> t.List[str]:
    """graph6 tokens of every graph of order n from nauty's geng.

    Raises:
        NotFoundError if geng is not on PATH
        DomprismError if geng fails
    """
    if not runner.available("geng"):
        msg = "nauty 'geng' not found on PATH, supply a graph6 file instead"
        raise NotFoundError(msg)
    args = ["-c", "-q", str(n)] if connected else ["-q", str(n)]
    stdout, returncode = runner.run("geng", args)
    if returncode != 0:
        msg = f"geng exited with {returncode}: {stdout}"
        raise DomprismError(msg)
    return [line for line in stdout.splitlines() if line.strip()]
