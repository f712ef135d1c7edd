"""Verification suites that recompute every claimed value from scratch.

Each suite is a function registered under a name. It records checks of an
expected against a computed value; a check whose solver runs out of budget is
reported as undecided rather than failed.
"""
from __future__ import annotations

import dataclasses
import datetime
import fractions
import itertools
import logging
import random
import time
import typing as t

from domprism import census, corpus, families
from domprism.domination import (
    brute_force_minimum,
    CHECKERS,
    domination_number,
    DominationKind,
    invariant,
    is_dominating,
    paired_domination_number,
    total_domination_degree_bound,
    total_domination_number,
    total_restrained_domination_number,
)
from domprism.errors import UndecidedError, UnknownSuiteError
from domprism.graph import (
    cartesian_product,
    Graph,
    is_bipartite,
    prism,
)
from domprism.graph6 import encode_graph6
from domprism.hypergraph import (
    cnh,
    Hypergraph,
    hypergraph_components,
    layer_isomorphism_check,
    onh,
    prism_onh_sides,
    transversal_to_dominating,
)
from domprism.transversal import transversal_number
from domprism.vertexset import VertexSet

if t.TYPE_CHECKING:
    from pathlib import Path

_LOGGER = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
INFO = "info"
UNDECIDED = "undecided"

# γ(Q_n) for n = 1..8
HYPERCUBE_GAMMA = (1, 2, 2, 4, 7, 12, 16, 32)

CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)

# Connected graphs of order n whose prism has γ_t < 2γ, for n = 1..7
NON_PERFECT_COUNTS = (0, 0, 0, 0, 0, 0, 11)

ORDER_8_CONNECTED = 11117
ORDER_8_NON_PERFECT = 297


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """One expected-versus-computed comparison."""

    name: str
    expected: t.Any
    computed: t.Any
    status: str
    elapsed: float
    detail: str = ""


@dataclasses.dataclass
class SuiteReport:
    """Checks of one suite run."""

    suite: str
    started_at: str
    checks: t.List[CheckResult] = dataclasses.field(default_factory=list)

    @property
    def status(self) -> str:
        """fail if any check failed, else undecided if any was, else pass."""
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if UNDECIDED in statuses:
            return UNDECIDED
        return PASS

    def to_dict(self) -> t.Dict[str, t.Any]:
        """JSON-ready view."""
        d = dataclasses.asdict(self)
        d["status"] = self.status
        return d


@dataclasses.dataclass(frozen=True)
class SuiteOptions:
    """Sizing of suite runs.

    Attributes:
        seed: Seed for random corpora
        samples: Overrides every random sample size when set
        quick: Use reduced samples and skip the largest exact solves
        node_budget: Transversal solver budget, None for the default
        search_budget: Direct search budget, None for the default
        input_path: graph6 corpus for the census and ratio suites
        jobs: Census worker processes
        progress: Show census progress
    """

    seed: int = 0
    samples: t.Union[int, None] = None
    quick: bool = False
    node_budget: t.Union[int, None] = None
    search_budget: t.Union[int, None] = None
    input_path: t.Union[Path, None] = None
    jobs: int = 1
    progress: bool = False

    def count(self, full: int, quick: int) -> int:
        """Sample size for this run."""
        if self.samples is not None:
            return self.samples
        return quick if self.quick else full

    def scan_options(self) -> census.ScanOptions:
        """Census options carrying the same budget."""
        return census.ScanOptions(
            jobs=self.jobs,
            node_budget=self.node_budget,
            progress=self.progress,
        )


class _Checks:
    def __init__(self, name: str, options: SuiteOptions) -> None:
        now = datetime.datetime.now(datetime.timezone.utc)
        self.report = SuiteReport(name, now.isoformat())
        self.options = options
        self.rng = random.Random(options.seed)  # noqa: S311

    def _record(self, result: CheckResult) -> None:
        log = _LOGGER.error if result.status == FAIL else _LOGGER.info
        log(
            "%s: %s expected %s computed %s",
            result.status,
            result.name,
            result.expected,
            result.computed,
        )
        self.report.checks.append(result)

    def check(
        self,
        name: str,
        expected: t.Any,
        compute: t.Callable[[], t.Any],
    ) -> t.Any:
        """Compare compute() with expected; returns the computed value."""
        start = time.perf_counter()
        try:
            computed = compute()
        except UndecidedError as e:
            self._record(
                CheckResult(
                    name,
                    expected,
                    e.upper,
                    UNDECIDED,
                    time.perf_counter() - start,
                    str(e),
                ),
            )
            return None
        status = PASS if computed == expected else FAIL
        self._record(
            CheckResult(name, expected, computed, status, time.perf_counter() - start),
        )
        return computed

    def add(
        self,
        name: str,
        expected: t.Any,
        computed: t.Any,
        status: str,
        detail: str = "",
        elapsed: float = 0.0,
    ) -> None:
        """Record a check whose status was decided by the suite itself."""
        self._record(CheckResult(name, expected, computed, status, elapsed, detail))

    @property
    def budget(self) -> t.Union[int, None]:
        return self.options.node_budget

    def gamma(self, g: Graph) -> int:
        return domination_number(g, self.budget).value

    def gamma_t(self, g: Graph) -> int:
        return total_domination_number(g, self.budget).value


SuiteFunc = t.Callable[[_Checks], None]

SUITES: t.Dict[str, SuiteFunc] = {}


def _suite(name: str) -> t.Callable[[SuiteFunc], SuiteFunc]:
    def register(func: SuiteFunc) -> SuiteFunc:
        SUITES[name] = func
        return func

    return register


def verify_suite(name: str, options: t.Union[SuiteOptions, None] = None) -> SuiteReport:
    """Run a registered suite.

    Raises:
        UnknownSuiteError if name is not registered
    """
    func = SUITES.get(name)
    if func is None:
        msg = f"Unknown suite '{name}', choose from {', '.join(SUITES)}"
        raise UnknownSuiteError(msg)
    checks = _Checks(name, options or SuiteOptions())
    _LOGGER.info("Running suite %s", name)
    func(checks)
    return checks.report


@_suite("hypercube-table")
def _hypercube_table(c: _Checks) -> None:
    top = 5 if c.options.quick else 6
    for n in range(1, top + 1):
        c.check(
            f"γ(Q{n})",
            HYPERCUBE_GAMMA[n - 1],
            lambda n=n: c.gamma(families.hypercube(n)),
        )

    if not c.options.quick:
        code = families.hamming_perfect_code(3)
        q7 = families.hypercube(7)
        start = time.perf_counter()
        result = transversal_number(cnh(q7), c.budget, incumbent=code)
        elapsed = time.perf_counter() - start
        if result.decided:
            status = PASS if result.value == HYPERCUBE_GAMMA[6] else FAIL
            c.add("γ(Q7)", HYPERCUBE_GAMMA[6], result.value, status, elapsed=elapsed)
        else:
            c.add(
                "γ(Q7)",
                HYPERCUBE_GAMMA[6],
                result.value,
                SKIP,
                f"lower bound {result.lower_bound} after {elapsed:.0f}s, "
                "upper bound from the Hamming code",
                elapsed=elapsed,
            )

    c.check(
        "Hamming code dominates Q7 with 16",
        16,
        lambda: _dominating_size(7, families.hamming_perfect_code(3)),
    )
    c.check(
        "doubled code dominates Q8 with 32",
        32,
        lambda: _dominating_size(8, families.doubled_code_dominating_set(3)),
    )


def _dominating_size(n: int, s: VertexSet) -> t.Union[int, None]:
    return len(s) if is_dominating(families.hypercube(n), s) else None


@_suite("hypercube-identity")
def _hypercube_identity(c: _Checks) -> None:
    top = 3 if c.options.quick else 5
    for n in range(1, top + 1):
        doubled = c.check(
            f"2γ(Q{n})",
            2 * HYPERCUBE_GAMMA[n - 1],
            lambda n=n: 2 * c.gamma(families.hypercube(n)),
        )
        if doubled is not None:
            c.check(
                f"γ_t(Q{n + 1}) = 2γ(Q{n})",
                doubled,
                lambda n=n: c.gamma_t(families.hypercube(n + 1)),
            )


@_suite("infinite-families")
def _infinite_families(c: _Checks) -> None:
    c.check("γ_t(Q4)", 4, lambda: c.gamma_t(families.hypercube(4)))
    c.check("γ_t(Q5)", 8, lambda: c.gamma_t(families.hypercube(5)))
    for k in (1, 2, 3):
        size = 2 ** (2**k - k - 1)
        c.check(
            f"perfect code partitions Q{2**k - 1}",
            size,
            lambda k=k: _partition_size(k),
        )
        c.check(
            f"doubled code dominates Q{2**k}",
            2 * size,
            lambda k=k: _dominating_size(2**k, families.doubled_code_dominating_set(k)),
        )
    for k in (1, 2):
        size = 2 ** (2**k - k - 1)
        c.check(
            f"γ(Q{2**k - 1}) = code size",
            size,
            lambda k=k: c.gamma(families.hypercube(2**k - 1)),
        )
        c.check(
            f"γ(Q{2**k}) = doubled code size",
            2 * size,
            lambda k=k: c.gamma(families.hypercube(2**k)),
        )


def _partition_size(k: int) -> t.Union[int, None]:
    """Code size if closed neighborhoods of the code partition the cube."""
    code = families.hamming_perfect_code(k)
    q = families.hypercube(2**k - 1)
    covered = 0
    for v in code:
        ball = q.adjacency[v] | 1 << v
        if covered & ball:
            return None
        covered |= ball
    return len(code) if covered == (1 << q.n) - 1 else None


def _violations(
    graphs: t.Iterable[Graph],
    law: t.Callable[[Graph], bool],
) -> t.Tuple[int, t.List[str]]:
    count = 0
    failures = []
    for g in graphs:
        count += 1
        if not law(g):
            failures.append(encode_graph6(g))
    return count, failures


def _law_check(
    c: _Checks,
    name: str,
    graphs: t.Iterable[Graph],
    law: t.Callable[[Graph], bool],
) -> None:
    def compute() -> int:
        count, failures = _violations(graphs, law)
        if failures:
            _LOGGER.error("%s fails on %s", name, failures[:10])
        _LOGGER.info("%s held on %d of %d graphs", name, count - len(failures), count)
        return len(failures)

    c.check(f"{name}: violations", 0, compute)


def _random_bipartite(c: _Checks, samples: int, top: int) -> t.List[Graph]:
    return [
        corpus.random_connected_bipartite(c.rng.randint(2, top), c.rng)
        for _ in range(samples)
    ]


@_suite("bipartite-prism")
def _bipartite_prism(c: _Checks) -> None:
    def law(g: Graph) -> bool:
        return c.gamma_t(prism(g)) == 2 * c.gamma(g)

    samples = c.options.count(500, 40)
    _law_check(
        c,
        f"γ_t(prism) = 2γ on {samples} random bipartite",
        _random_bipartite(c, samples, 10),
        law,
    )
    top = 7 if c.options.quick else 9
    all_trees = [g for n in range(2, top + 1) for g in corpus.trees(n)]
    _law_check(c, f"γ_t(prism) = 2γ on trees of order <= {top}", all_trees, law)


@_suite("corollary1")
def _corollary1(c: _Checks) -> None:
    search = c.options.search_budget

    def law(g: Graph) -> bool:
        p = prism(g)
        gt = c.gamma_t(p)
        return (
            gt == paired_domination_number(p, c.budget, search).value
            and gt == total_restrained_domination_number(p, c.budget, search).value
        )

    samples = c.options.count(100, 15)
    _law_check(
        c,
        f"γ_t = γ_pr = γ_tr on {samples} bipartite prisms",
        _random_bipartite(c, samples, 8),
        law,
    )
    for n in (2, 3):
        q = families.hypercube(n + 1)
        gt = c.gamma_t(q)
        c.check(
            f"γ_pr(Q{n + 1}) = γ_t",
            gt,
            lambda q=q: paired_domination_number(q, c.budget, search).value,
        )
        c.check(
            f"γ_tr(Q{n + 1}) = γ_t",
            gt,
            lambda q=q: total_restrained_domination_number(q, c.budget, search).value,
        )


@_suite("cycles-prop1")
def _cycles_prop1(c: _Checks) -> None:
    top = 2 if c.options.quick else 3
    for k in range(1, top + 1):
        n = 6 * k + 1
        g = families.cycle(n)
        gamma = c.check(f"γ(C{n})", 2 * k + 1, lambda g=g: c.gamma(g))
        c.check(f"γ_t(prism(C{n}))", 4 * k + 1, lambda g=g: c.gamma_t(prism(g)))
        if gamma is not None:
            c.check(
                f"γ_t(prism(C{n})) = 2γ - 1",
                2 * gamma - 1,
                lambda g=g: c.gamma_t(prism(g)),
            )
        c.check(
            f"prop1 witness size for k={k}",
            4 * k + 1,
            lambda k=k: len(families.prop1_witness(k)),
        )
        c.check(
            f"⌈n/Δ⌉ <= γ_t(prism(C{n}))",
            True,
            lambda g=g: total_domination_degree_bound(prism(g)) <= c.gamma_t(prism(g)),
        )


@_suite("gk-theorem2")
def _gk_theorem2(c: _Checks) -> None:
    top = 3 if c.options.quick else 4
    for k in range(1, top + 1):
        g = families.chained_five_cycles(k)
        gamma_expected = 3 if k == 1 else 2 * k
        gt_expected = 5 if k == 1 else 3 * k
        gamma = c.check(f"γ(G{k})", gamma_expected, lambda g=g: c.gamma(g))
        gt = c.check(f"γ_t(prism(G{k}))", gt_expected, lambda g=g: c.gamma_t(prism(g)))
        if gamma is not None and gt is not None:
            c.add(
                f"2γ(G{k}) - γ_t(prism(G{k})) = k",
                k,
                2 * gamma - gt,
                PASS if 2 * gamma - gt == k else FAIL,
            )
    for k in range(2, 7):
        c.check(
            f"claimB witness size for k={k}",
            3 * k,
            lambda k=k: len(families.claimB_witness(k)),
        )
    c.check(
        "figure witness equals claimB witness for k=6",
        families.claimB_witness(6).to_list(),
        lambda: families.figure_one_witness().to_list(),
    )


def _scan_order(c: _Checks, n: int) -> census.ScanReport:
    report = census.ScanReport()
    for i, g in enumerate(corpus.connected_graphs(n)):
        report.add(census.evaluate_graph(i, g, c.options.scan_options()))
    return report


def _scan_input(c: _Checks) -> t.Union[census.ScanReport, None]:
    path = c.options.input_path
    if path is None:
        return None
    with path.open(encoding="utf-8") as file:
        return census.scan_stream(file, c.options.scan_options())


@_suite("ratio-problem")
def _ratio_problem(c: _Checks) -> None:
    floor = census.RATIO_FLOOR
    for k in (2, 3):
        g = families.chained_five_cycles(k)
        c.check(
            f"γ_t(prism(G{k}))/γ(G{k})",
            str(floor),
            lambda g=g: str(fractions.Fraction(c.gamma_t(prism(g)), c.gamma(g))),
        )

    report = _scan_input(c)
    if report is None:
        top = 5 if c.options.quick else 7
        graphs = itertools.chain.from_iterable(
            corpus.connected_graphs(n) for n in range(1, top + 1)
        )
        report = census.ScanReport()
        for i, g in enumerate(graphs):
            report.add(census.evaluate_graph(i, g, c.options.scan_options()))
        where = f"connected graphs of order <= {top}"
    else:
        where = str(c.options.input_path)

    below = [f"{g6} {ratio}" for _, g6, ratio in report.below_floor]
    if below:
        _LOGGER.warning(
            "%d graphs in %s have γ_t(prism)/γ below %s: %s",
            len(below),
            where,
            floor,
            ", ".join(below),
        )
    c.add(f"graphs below {floor} in {where}", [], below, FAIL if below else PASS)
    c.add(
        f"min ratio over {where}",
        None,
        None if report.min_ratio is None else str(report.min_ratio),
        INFO,
        detail=report.min_ratio_g6 or "",
    )
    c.check(f"undecided records in {where}", 0, lambda: report.undecided_count)


@_suite("spot-products")
def _spot_products(c: _Checks) -> None:
    # The left factor is the path with three edges, the one with γ = 2
    left = families.path(4)
    cases = (
        ("K3", families.complete(3), 4),
        ("path(3)", families.path(3), 4),
        ("K4", families.complete(4), 4),
        ("path(4)", families.path(4), 6),
    )
    c.check("γ(path(4))", 2, lambda: c.gamma(left))
    for name, h, expected in cases:
        c.check(
            f"γ_t(path(4) □ {name})",
            expected,
            lambda h=h: c.gamma_t(cartesian_product(left, h)),
        )


@_suite("onh-structure")
def _onh_structure(c: _Checks) -> None:
    samples = c.options.count(200, 30)
    mixed = []
    for i in range(samples):
        n = c.rng.randint(2, 10)
        if i % 2:
            mixed.append(corpus.random_connected_bipartite(n, c.rng))
        else:
            mixed.append(corpus.random_connected_graph(n, c.rng))

    def components_law(g: Graph) -> bool:
        expected = 2 if is_bipartite(g) else 1
        return len(hypergraph_components(onh(g))) == expected

    _law_check(
        c,
        f"ONH components on {samples} connected graphs",
        mixed,
        components_law,
    )

    bipartite = _random_bipartite(c, c.options.count(100, 20), 10)
    _law_check(
        c,
        "H_X and H_Y isomorphic under partner",
        bipartite,
        layer_isomorphism_check,
    )

    def projection_law(g: Graph) -> bool:
        p, _, h_x, _ = prism_onh_sides(g)
        tau = transversal_number(Hypergraph(p.n, h_x), c.budget)
        d = transversal_to_dominating(g, tau.witness)
        return (
            is_dominating(g, d)
            and c.gamma(g) <= tau.value
            and c.gamma_t(p) == 2 * tau.value
        )

    _law_check(
        c,
        "H_X transversals project to dominating sets",
        bipartite,
        projection_law,
    )


@_suite("oracle")
def _oracle(c: _Checks) -> None:
    search = c.options.search_budget

    def agrees(g: Graph) -> bool:
        kinds = [DominationKind.PLAIN]
        if not g.isolated_vertices():
            kinds.extend(
                [
                    DominationKind.TOTAL,
                    DominationKind.PAIRED,
                    DominationKind.TOTAL_RESTRAINED,
                ],
            )
        for kind in kinds:
            solved = invariant(g, kind, c.budget, search)
            if not CHECKERS[kind](g, solved.witness):
                return False
            if solved.value != brute_force_minimum(g, kind).value:
                return False
        return True

    samples = c.options.count(300, 30)
    graphs = [corpus.random_graph(c.rng.randint(1, 9), c.rng) for _ in range(samples)]
    _law_check(
        c,
        f"solvers match enumeration on {samples} random graphs",
        graphs,
        agrees,
    )

    top = 6 if c.options.quick else 9
    prisms = [
        prism(corpus.random_graph(c.rng.randint(1, top), c.rng))
        for _ in range(c.options.count(50, 8))
    ]
    _law_check(c, f"solvers match enumeration on {len(prisms)} prisms", prisms, agrees)


@_suite("census-small")
def _census_small(c: _Checks) -> None:
    top = 5 if c.options.quick else 7
    for n in range(1, top + 1):
        c.check(
            f"connected graphs of order {n}",
            CONNECTED_COUNTS[n - 1],
            lambda n=n: len(corpus.connected_graphs(n)),
        )
        c.check(
            f"non-perfect connected graphs of order {n}",
            NON_PERFECT_COUNTS[n - 1],
            lambda n=n: _scan_order(c, n).non_perfect_count,
        )
    c.check(
        "C7 is not prism perfect",
        False,
        lambda: census.evaluate_graph(0, families.cycle(7)).is_prism_perfect,
    )

    report = _scan_input(c)
    if report is None:
        return
    c.check("corpus total", ORDER_8_CONNECTED, lambda: report.total_graphs)
    c.check("corpus non-perfect", ORDER_8_NON_PERFECT, lambda: report.non_perfect_count)
    c.check("corpus undecided", 0, lambda: report.undecided_count)
    c.check("corpus bipartite non-perfect", 0, lambda: report.bipartite_non_perfect)


@_suite("product-pairs")
def _product_pairs(c: _Checks) -> None:
    top = 5 if c.options.quick else 6
    candidates = [
        g
        for n in range(2, top + 1)
        for g in corpus.connected_graphs(n)
        if is_bipartite(g)
    ]
    by_gamma: t.Dict[int, t.List[Graph]] = {}
    for g in candidates:
        by_gamma.setdefault(c.gamma(g), []).append(g)

    factors = (
        ("K3", families.complete(3)),
        ("P3", families.path(3)),
        ("K4", families.complete(4)),
        ("P4", families.path(4)),
    )
    for name, h in factors:

        def find_pair(h: Graph = h) -> t.Union[t.List[str], None]:
            for group in by_gamma.values():
                seen: t.Dict[int, Graph] = {}
                for g in group:
                    value = c.gamma_t(cartesian_product(g, h))
                    if seen and value not in seen:
                        other = next(iter(seen.values()))
                        return [encode_graph6(other), encode_graph6(g)]
                    seen.setdefault(value, g)
            return None

        found = find_pair()
        c.add(
            f"γ(G1) = γ(G2) yet γ_t(G1 □ {name}) != γ_t(G2 □ {name})",
            "a pair",
            found,
            PASS if found else FAIL,
        )
