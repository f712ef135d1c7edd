"""Named graph families and the explicit witness sets built on them."""
from __future__ import annotations

import dataclasses
import enum
import functools
import re
import typing as t

from domprism.domination import doubling_construction, is_total_dominating
from domprism.errors import CertificateError, GraphError
from domprism.graph import Graph, make_graph, prism
from domprism.vertexset import check_capacity, VertexSet

# Darkened vertices of the G_6 prism figure, 1-based, layer 0 is "x"
FIGURE_ONE = (
    "x1 x2 y5 y6 y7 x10 x11 x12 y15 y16 y17 x20 x21 x22 y25 y26 x29 x30"
).split()


class Family(enum.Enum):
    """Graph families addressable by a one letter code."""

    HYPERCUBE = "Q"
    CYCLE = "C"
    PATH = "P"
    COMPLETE = "K"
    CHAINED_FIVE_CYCLES = "G"
    STAR = "S"


_MINIMUM = {
    Family.HYPERCUBE: 1,
    Family.CYCLE: 3,
    Family.PATH: 1,
    Family.COMPLETE: 1,
    Family.CHAINED_FIVE_CYCLES: 1,
    Family.STAR: 1,
}

_RE_SPEC = re.compile(r"^([QCPKGS])(\d+)$")


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    """A family member such as Q5 or G3."""

    family: Family
    parameter: int

    def __post_init__(self) -> None:
        """Check the parameter range.

        Raises:
            GraphError if parameter is below the family minimum
        """
        lowest = _MINIMUM[self.family]
        if self.parameter < lowest:
            msg = (
                f"{self.family.name.lower()} needs parameter >= {lowest}, "
                f"got {self.parameter}"
            )
            raise GraphError(msg)

    def __str__(self) -> str:
        """Compact text form."""
        return f"{self.family.value}{self.parameter}"

    def build(self) -> Graph:
        """Construct the graph."""
        builders: t.Dict[Family, t.Callable[[int], Graph]] = {
            Family.HYPERCUBE: hypercube,
            Family.CYCLE: cycle,
            Family.PATH: path,
            Family.COMPLETE: complete,
            Family.CHAINED_FIVE_CYCLES: chained_five_cycles,
            Family.STAR: star,
        }
        return builders[self.family](self.parameter)


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a family spec: letter in QCPKGS followed by a decimal integer.

    Raises:
        GraphError if text does not match or the parameter is out of range
    """
    m = _RE_SPEC.match(text.strip())
    if m is None:
        msg = f"Unrecognized family spec '{text}'"
        raise GraphError(msg)
    return FamilySpec(Family(m.group(1)), int(m.group(2)))


def hypercube(n: int) -> Graph:
    """Hypercube Q_n; u~v iff u and v differ in exactly one bit.

    Bit 0 is the coordinate added last, so the labeling equals
    prism(hypercube(n - 1)) and the result is tagged as that prism.
    """
    if n < 1:
        msg = f"Hypercube needs n >= 1, got {n}"
        raise GraphError(msg)
    size = 1 << n
    check_capacity(size)
    adj = [0] * size
    for v in range(size):
        for i in range(n):
            adj[v] |= 1 << (v ^ (1 << i))
    return Graph(size, adj, prism_order=size // 2)


def cycle(n: int) -> Graph:
    """C_n with edges (i, i+1 mod n)."""
    if n < 3:  # noqa: PLR2004
        msg = f"Cycle needs n >= 3, got {n}"
        raise GraphError(msg)
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """P_n with edges (i, i+1)."""
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    """K_n."""
    return make_graph(n, ((u, v) for v in range(n) for u in range(v)))


def star(n: int) -> Graph:
    """K_{1,n}, center 0."""
    if n < 1:
        msg = f"Star needs n >= 1 leaves, got {n}"
        raise GraphError(msg)
    return make_graph(n + 1, ((0, v) for v in range(1, n + 1)))


def chained_five_cycles(k: int) -> Graph:
    """G_k: k five-cycles joined in a chain, or C_7 when k = 1.

    Block i occupies vertices 5i..5i+4 and runs around the cycle
    5i, 5i+1, 5i+3, 5i+4, 5i+2. The last vertex of each block is joined to the
    first vertex of the next, so G_k has order 5k and 6k - 1 edges.
    """
    if k < 1:
        msg = f"Chained five-cycles need k >= 1, got {k}"
        raise GraphError(msg)
    if k == 1:
        return cycle(7)
    edges = []
    for i in range(k):
        b = 5 * i
        edges.extend(
            [(b, b + 1), (b + 1, b + 3), (b + 3, b + 4), (b + 4, b + 2), (b + 2, b)],
        )
    edges.extend((5 * j - 1, 5 * j) for j in range(1, k))
    return make_graph(5 * k, edges)


def _is_codeword(x: int) -> bool:
    syndrome = 0
    j = 0
    while x:
        if x & 1:
            syndrome ^= j + 1
        x >>= 1
        j += 1
    return syndrome == 0


@functools.lru_cache(maxsize=None)
def hamming_perfect_code(k: int) -> VertexSet:
    """Codewords of the Hamming code of length 2^k - 1 as vertices of Q_{2^k-1}.

    Coordinate j is checked by the binary expansion of j + 1, least
    significant bit first. The closed neighborhoods of the codewords partition
    the hypercube, and there are 2^(2^k - k - 1) of them.

    Raises:
        GraphError if k < 1
        CapacityError if the hypercube exceeds the vertex capacity
    """
    if k < 1:
        msg = f"Hamming code needs k >= 1, got {k}"
        raise GraphError(msg)
    n = (1 << k) - 1
    check_capacity(1 << n)
    return VertexSet.of(1 << n, (x for x in range(1 << n) if _is_codeword(x)))


def doubled_code_dominating_set(k: int) -> VertexSet:
    """The Hamming code copied across the last coordinate of Q_{2^k}.

    Size 2^(2^k - k), dominating in Q_{2^k}.
    """
    n = (1 << k) - 1
    check_capacity(1 << (n + 1))
    return doubling_construction(hypercube(n), hamming_perfect_code(k))


def _certified(g_prism: Graph, members: t.Iterable[int], name: str) -> VertexSet:
    s = VertexSet.of(g_prism.n, members)
    if not is_total_dominating(g_prism, s):
        msg = f"{name} is not total dominating"
        raise CertificateError(msg)
    return s


def prop1_witness(k: int) -> VertexSet:
    """Total dominating set of size 4k + 1 in prism(C_{6k+1}).

    With u_j = (j-1, layer 0) and v_j = (j-1, layer 1) the set is
    {u_{6i+1}, u_{6i+2}, v_{6i+4}, v_{6i+5} : 0 <= i < k} plus u_{6k+1}.

    Raises:
        GraphError if k < 1
    """
    if k < 1:
        msg = f"k must be >= 1, got {k}"
        raise GraphError(msg)

    def u(j: int) -> int:
        return 2 * (j - 1)

    def v(j: int) -> int:
        return 2 * (j - 1) + 1

    members = [u(6 * k + 1)]
    for i in range(k):
        members.extend([u(6 * i + 1), u(6 * i + 2), v(6 * i + 4), v(6 * i + 5)])
    return _certified(prism(cycle(6 * k + 1)), members, f"prop1_witness({k})")


def claimB_witness(k: int) -> VertexSet:  # noqa: N802
    """Total dominating set of size 3k in prism(G_k), three vertices per block.

    Raises:
        GraphError if k < 2
    """
    if k < 2:  # noqa: PLR2004
        msg = f"k must be >= 2, got {k}"
        raise GraphError(msg)

    def x(j: int) -> int:
        return 2 * (j - 1)

    def y(j: int) -> int:
        return 2 * (j - 1) + 1

    members: t.Set[int] = set()
    for i in range(1, k // 2 + 1):
        base = 10 * (i - 1)
        members.update([x(base + 1), x(base + 2), x(10 * i)])
        members.update([y(base + 5), y(base + 6), y(base + 7)])
    if k % 2 == 0:
        members.add(x(5 * k - 1))
        members.discard(y(5 * k - 3))
    else:
        members.update([x(5 * k - 4), y(5 * k - 1), y(5 * k)])
    g_prism = prism(chained_five_cycles(k))
    return _certified(g_prism, members, f"claimB_witness({k})")


def figure_one_witness() -> VertexSet:
    """The G_6 prism figure's darkened set, transcribed label by label."""
    members = [2 * (int(label[1:]) - 1) + (label[0] == "y") for label in FIGURE_ONE]
    return VertexSet.of(60, members)
