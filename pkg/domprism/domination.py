"""Domination invariants, their certificate checkers and exact searches.

γ and γ_t are transversal numbers of the closed and open neighborhood
hypergraphs. γ_pr and γ_tr are found by increasing-size search with the
certificate as the acceptance test.
"""
from __future__ import annotations

import dataclasses
import enum
import itertools
import typing as t

from domprism.errors import (
    CertificateError,
    EmptyEdgeError,
    NotFoundError,
    UndecidedError,
)
from domprism.graph import Graph, max_degree
from domprism.hypergraph import cnh, onh
from domprism.transversal import SolverStats, transversal_number
from domprism.vertexset import iter_bits, popcount, VertexSet

DEFAULT_SEARCH_BUDGET = 50_000_000


class DominationKind(enum.Enum):
    """The four invariants, valued by their command-line names."""

    PLAIN = "gamma"
    TOTAL = "gammat"
    PAIRED = "gammapr"
    TOTAL_RESTRAINED = "gammatr"


class Method(enum.Enum):
    """How an InvariantResult was obtained."""

    TRANSVERSAL_REDUCTION = "transversal-reduction"
    DIRECT_SEARCH = "direct-search"
    CONSTRUCTION = "construction"


@dataclasses.dataclass(frozen=True)
class InvariantResult:
    """Minimum value of a domination invariant with a witness set."""

    kind: DominationKind
    value: int
    witness: VertexSet
    method: Method
    stats: t.Union[SolverStats, None] = None


def _closed_cover(g: Graph, mask: int) -> int:
    adj = g.adjacency
    covered = mask
    for v in iter_bits(mask):
        covered |= adj[v]
    return covered


def _open_cover(g: Graph, mask: int) -> int:
    adj = g.adjacency
    covered = 0
    for v in iter_bits(mask):
        covered |= adj[v]
    return covered


def _full(g: Graph) -> int:
    return (1 << g.n) - 1


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex outside S has a neighbor in S."""
    return _closed_cover(g, s.mask) == _full(g)


def is_total_dominating(g: Graph, s: VertexSet) -> bool:
    """Every vertex, members of S included, has a neighbor in S."""
    return _open_cover(g, s.mask) == _full(g)


def _matchable(adj: t.Sequence[int], mask: int, memo: t.Dict[int, bool]) -> bool:
    if not mask:
        return True
    if mask in memo:
        return memo[mask]
    low = mask & -mask
    u = low.bit_length() - 1
    rest = mask ^ low
    found = False
    for w in iter_bits(adj[u] & rest):
        if _matchable(adj, rest ^ (1 << w), memo):
            found = True
            break
    memo[mask] = found
    return found


def has_perfect_matching(g: Graph, s: VertexSet) -> bool:
    """True iff G[S] has a perfect matching.

    The smallest unmatched vertex is matched against each of its neighbors in
    turn, backtracking on failure.
    """
    if popcount(s.mask) % 2:
        return False
    return _matchable(g.adjacency, s.mask, {})


def is_paired_dominating(g: Graph, s: VertexSet) -> bool:
    """Total dominating, and G[S] has a perfect matching."""
    return is_total_dominating(g, s) and has_perfect_matching(g, s)


def _restrained(g: Graph, mask: int) -> bool:
    outside = _full(g) & ~mask
    adj = g.adjacency
    return all(adj[v] & outside for v in iter_bits(outside))


def is_total_restrained_dominating(g: Graph, s: VertexSet) -> bool:
    """Total dominating, and G - S has no isolated vertex."""
    return is_total_dominating(g, s) and _restrained(g, s.mask)


CHECKERS: t.Dict[DominationKind, t.Callable[[Graph, VertexSet], bool]] = {
    DominationKind.PLAIN: is_dominating,
    DominationKind.TOTAL: is_total_dominating,
    DominationKind.PAIRED: is_paired_dominating,
    DominationKind.TOTAL_RESTRAINED: is_total_restrained_dominating,
}


def _require_isolate_free(g: Graph, what: str) -> None:
    isolated = g.isolated_vertices()
    if isolated:
        v = isolated.min()
        msg = f"{what} is undefined: vertex {v} is isolated"
        raise EmptyEdgeError(msg, vertex=v)


def total_domination_degree_bound(g: Graph) -> int:
    """Trivial bound γ_t(G) >= n / Δ, rounded up."""
    _require_isolate_free(g, "Total domination")
    delta = max_degree(g)
    return -(-g.n // delta)


def domination_number(g: Graph, budget: t.Union[int, None] = None) -> InvariantResult:
    """γ(G) as the transversal number of the closed neighborhood hypergraph.

    Raises:
        UndecidedError if the node budget runs out
    """
    result = transversal_number(cnh(g), budget=budget)
    if not result.decided:
        lo, hi = result.lower_bound, result.value
        msg = f"γ undecided within budget, bounds [{lo}, {hi}]"
        raise UndecidedError(msg, result.lower_bound, result.value, result.witness)
    return InvariantResult(
        DominationKind.PLAIN,
        result.value,
        result.witness,
        Method.TRANSVERSAL_REDUCTION,
        result.stats,
    )


def total_domination_number(
    g: Graph,
    budget: t.Union[int, None] = None,
) -> InvariantResult:
    """γ_t(G) as the transversal number of the open neighborhood hypergraph.

    Raises:
        EmptyEdgeError if G has an isolated vertex
        UndecidedError if the node budget runs out
    """
    result = transversal_number(onh(g), budget=budget)
    if not result.decided:
        lo, hi = result.lower_bound, result.value
        msg = f"γ_t undecided within budget, bounds [{lo}, {hi}]"
        raise UndecidedError(msg, result.lower_bound, result.value, result.witness)
    return InvariantResult(
        DominationKind.TOTAL,
        result.value,
        result.witness,
        Method.TRANSVERSAL_REDUCTION,
        result.stats,
    )


class _CandidateSearch:
    """Lexicographic search for a smallest totally dominating set passing a test.

    A partial set is abandoned once its smallest undominated vertex has no
    neighbor left to pick, or when the remaining picks cannot reach every
    undominated vertex.
    """

    def __init__(
        self,
        g: Graph,
        certify: t.Callable[[int], bool],
        budget: int,
    ) -> None:
        self.adj = g.adjacency
        self.n = g.n
        self.full = _full(g)
        self.delta = max_degree(g)
        self.certify = certify
        self.budget = budget
        self.checks = 0

    def smallest(self, sizes: t.Iterable[int]) -> t.Union[int, None]:
        """First passing set of the first size that has one, as a bitmask."""
        for size in sizes:
            found = self._extend(0, 0, 0, size)
            if found is not None:
                return found
        return None

    def _extend(
        self,
        start: int,
        chosen: int,
        covered: int,
        left: int,
    ) -> t.Union[int, None]:
        uncovered = self.full & ~covered
        if left == 0:
            self.checks += 1
            if self.checks > self.budget:
                msg = f"Direct search exceeded {self.budget} candidates"
                raise UndecidedError(msg, popcount(chosen), None)
            if not uncovered and self.certify(chosen):
                return chosen
            return None
        if uncovered:
            low = uncovered & -uncovered
            u = low.bit_length() - 1
            if not self.adj[u] >> start:
                return None
            if popcount(uncovered) > left * self.delta:
                return None
        for w in range(start, self.n - left + 1):
            pick = 1 << w
            found = self._extend(w + 1, chosen | pick, covered | self.adj[w], left - 1)
            if found is not None:
                return found
        return None


def paired_domination_number(
    g: Graph,
    budget: t.Union[int, None] = None,
    search_budget: t.Union[int, None] = None,
) -> InvariantResult:
    """γ_pr(G) by even-size search starting at the γ_t(G) floor.

    Raises:
        EmptyEdgeError if G has an isolated vertex
        UndecidedError if the node or search budget runs out
    """
    _require_isolate_free(g, "Paired domination")
    floor = total_domination_number(g, budget=budget).value
    floor += floor % 2
    memo: t.Dict[int, bool] = {}
    search = _CandidateSearch(
        g,
        lambda mask: _matchable(g.adjacency, mask, memo),
        DEFAULT_SEARCH_BUDGET if search_budget is None else search_budget,
    )
    found = search.smallest(range(floor, g.n + 1, 2))
    if found is None:  # pragma: no cover
        # A maximal matching always pairs-dominates an isolate-free graph
        msg = "No paired-dominating set found"
        raise NotFoundError(msg)
    return InvariantResult(
        DominationKind.PAIRED,
        popcount(found),
        VertexSet(g.n, found),
        Method.DIRECT_SEARCH,
    )


def total_restrained_domination_number(
    g: Graph,
    budget: t.Union[int, None] = None,
    search_budget: t.Union[int, None] = None,
) -> InvariantResult:
    """γ_tr(G) by increasing-size search starting at the γ_t(G) floor.

    Raises:
        EmptyEdgeError if G has an isolated vertex
        NotFoundError if no total restrained dominating set exists
        UndecidedError if the node or search budget runs out
    """
    _require_isolate_free(g, "Total restrained domination")
    floor = total_domination_number(g, budget=budget).value
    search = _CandidateSearch(
        g,
        lambda mask: _restrained(g, mask),
        DEFAULT_SEARCH_BUDGET if search_budget is None else search_budget,
    )
    found = search.smallest(range(floor, g.n + 1))
    if found is None:
        msg = f"No total restrained dominating set up to {g.n} vertices"
        raise NotFoundError(msg)
    return InvariantResult(
        DominationKind.TOTAL_RESTRAINED,
        popcount(found),
        VertexSet(g.n, found),
        Method.DIRECT_SEARCH,
    )


def invariant(
    g: Graph,
    kind: DominationKind,
    budget: t.Union[int, None] = None,
    search_budget: t.Union[int, None] = None,
) -> InvariantResult:
    """Dispatch to the solver for kind."""
    if kind is DominationKind.PLAIN:
        return domination_number(g, budget)
    if kind is DominationKind.TOTAL:
        return total_domination_number(g, budget)
    if kind is DominationKind.PAIRED:
        return paired_domination_number(g, budget, search_budget)
    return total_restrained_domination_number(g, budget, search_budget)


def doubling_construction(g: Graph, d: VertexSet) -> VertexSet:
    """Copy a dominating set of G into both layers of its prism.

    The result is total dominating and paired (matched by the cross edges) in
    prism(G), of size 2|D|.

    Raises:
        CertificateError if D does not dominate G
    """
    if d.universe_size != g.n or not is_dominating(g, d):
        msg = f"{d.to_list()} is not a dominating set of the graph"
        raise CertificateError(msg)
    return VertexSet(2 * g.n, sum(3 << (2 * v) for v in d))


def brute_force_minimum(
    g: Graph,
    kind: DominationKind,
    cap: t.Union[int, None] = None,
) -> InvariantResult:
    """Smallest set passing the kind's certificate, by plain enumeration.

    Subsets are tried by increasing size, lexicographically within a size.

    Args:
        g: Graph, order 20 or less is advisable
        kind: Certificate to test
        cap: Largest size to try, None for n(G)

    Raises:
        NotFoundError if nothing passes up to cap
    """
    check = CHECKERS[kind]
    cap = g.n if cap is None else min(cap, g.n)
    for size in range(1, cap + 1):
        for combo in itertools.combinations(range(g.n), size):
            s = VertexSet.of(g.n, combo)
            if check(g, s):
                return InvariantResult(kind, size, s, Method.DIRECT_SEARCH)
    msg = f"No {kind.value} set up to size {cap}"
    raise NotFoundError(msg)
