"""Census of γ_t-prism perfect graphs over a graph6 stream.

A graph G is γ_t-prism perfect when γ_t(G □ K_2) = 2γ(G). Each graph is
evaluated independently, possibly in a worker pool. Aggregation does not
depend on the order records arrive in.
"""
from __future__ import annotations

import bisect
import dataclasses
import fractions
import itertools
import logging
import multiprocessing
import random
import sys
import typing as t

import tqdm

from domprism.corpus import random_graph
from domprism.domination import domination_number, total_domination_number
from domprism.errors import UndecidedError
from domprism.graph import Graph, is_bipartite, is_triangle_free, prism
from domprism.graph6 import encode_graph6, read_graph6

_LOGGER = logging.getLogger(__name__)

RATIO_FLOOR = fractions.Fraction(3, 2)

CSV_COLUMNS = (
    "index",
    "g6",
    "n",
    "gamma",
    "gammat_prism",
    "perfect",
    "deficit",
    "ratio_num",
    "ratio_den",
)

_BATCH = 1024


@dataclasses.dataclass(frozen=True)
class ScanOptions:
    """Knobs for a census run."""

    jobs: int = 1
    node_budget: t.Union[int, None] = None
    bipartite_shortcut: bool = False
    audit_rate: float = 0.01
    progress: bool = False


@dataclasses.dataclass(frozen=True)
class ScanRecord:
    """Census result for one graph.

    gamma and gamma_t_prism are None when a solve ran out of budget.
    """

    index: int
    g6: str
    n: int
    gamma: t.Union[int, None]
    gamma_t_prism: t.Union[int, None]
    bipartite: bool
    triangle_free: bool
    via_shortcut: bool = False
    audited: bool = False
    audit_failed: bool = False

    @property
    def decided(self) -> bool:
        """True if both invariants were solved exactly."""
        return self.gamma is not None and self.gamma_t_prism is not None

    @property
    def is_prism_perfect(self) -> bool:
        """γ_t(prism) == 2γ; False when undecided."""
        return self.decided and self.gamma_t_prism == 2 * self.gamma

    @property
    def deficit(self) -> t.Union[int, None]:
        """2γ - γ_t(prism)."""
        if not self.decided:
            return None
        return 2 * self.gamma - self.gamma_t_prism

    @property
    def ratio(self) -> t.Union[fractions.Fraction, None]:
        """γ_t(prism) / γ as an exact fraction."""
        if not self.decided:
            return None
        return fractions.Fraction(self.gamma_t_prism, self.gamma)

    def csv_row(self) -> t.List[t.Union[int, str]]:
        """Values in CSV_COLUMNS order; undecided cells are empty."""
        ratio = self.ratio
        return [
            self.index,
            self.g6,
            self.n,
            "" if self.gamma is None else self.gamma,
            "" if self.gamma_t_prism is None else self.gamma_t_prism,
            int(self.is_prism_perfect) if self.decided else "",
            "" if self.deficit is None else self.deficit,
            "" if ratio is None else ratio.numerator,
            "" if ratio is None else ratio.denominator,
        ]

    def to_dict(self) -> t.Dict[str, t.Any]:
        """JSON-ready fields plus the derived values."""
        d = dataclasses.asdict(self)
        ratio = self.ratio
        d["decided"] = self.decided
        d["perfect"] = self.is_prism_perfect
        d["deficit"] = self.deficit
        d["ratio"] = None if ratio is None else str(ratio)
        return d


@dataclasses.dataclass
class ScanReport:
    """Aggregate counters of a census.

    total_graphs = perfect_count + non_perfect_count + undecided_count.
    below_floor lists (index, g6, ratio) of every record whose ratio is under
    RATIO_FLOOR, sorted by index.
    """

    total_graphs: int = 0
    perfect_count: int = 0
    non_perfect_count: int = 0
    undecided_count: int = 0
    min_ratio: t.Union[fractions.Fraction, None] = None
    min_ratio_index: t.Union[int, None] = None
    min_ratio_g6: t.Union[str, None] = None
    below_floor: t.List[t.Tuple[int, str, str]] = dataclasses.field(
        default_factory=list,
    )
    deficit_histogram: t.Dict[int, int] = dataclasses.field(default_factory=dict)
    triangle_free_non_perfect: int = 0
    bipartite_non_perfect: int = 0
    audited: int = 0
    audit_failures: int = 0

    def add(self, record: ScanRecord) -> None:
        """Fold one record into the counters."""
        self.total_graphs += 1
        self.audited += record.audited
        self.audit_failures += record.audit_failed
        if not record.decided:
            self.undecided_count += 1
            return
        if record.is_prism_perfect:
            self.perfect_count += 1
        else:
            self.non_perfect_count += 1
            self.triangle_free_non_perfect += record.triangle_free
            self.bipartite_non_perfect += record.bipartite
        deficit = t.cast(int, record.deficit)
        self.deficit_histogram[deficit] = self.deficit_histogram.get(deficit, 0) + 1
        ratio = record.ratio
        self._offer_ratio(ratio, record.index, record.g6)
        if ratio is not None and ratio < RATIO_FLOOR:
            bisect.insort(self.below_floor, (record.index, record.g6, str(ratio)))

    def _offer_ratio(
        self,
        ratio: t.Union[fractions.Fraction, None],
        index: t.Union[int, None],
        g6: t.Union[str, None],
    ) -> None:
        if ratio is None or index is None:
            return
        if (
            self.min_ratio is None
            or ratio < self.min_ratio
            or (ratio == self.min_ratio and index < t.cast(int, self.min_ratio_index))
        ):
            self.min_ratio = ratio
            self.min_ratio_index = index
            self.min_ratio_g6 = g6

    def merge(self, other: ScanReport) -> ScanReport:
        """Combine two partial reports into a new one."""
        histogram = dict(self.deficit_histogram)
        for k, v in other.deficit_histogram.items():
            histogram[k] = histogram.get(k, 0) + v
        merged = ScanReport(
            total_graphs=self.total_graphs + other.total_graphs,
            perfect_count=self.perfect_count + other.perfect_count,
            non_perfect_count=self.non_perfect_count + other.non_perfect_count,
            undecided_count=self.undecided_count + other.undecided_count,
            min_ratio=self.min_ratio,
            min_ratio_index=self.min_ratio_index,
            min_ratio_g6=self.min_ratio_g6,
            below_floor=sorted(self.below_floor + other.below_floor),
            deficit_histogram=histogram,
            triangle_free_non_perfect=self.triangle_free_non_perfect
            + other.triangle_free_non_perfect,
            bipartite_non_perfect=self.bipartite_non_perfect
            + other.bipartite_non_perfect,
            audited=self.audited + other.audited,
            audit_failures=self.audit_failures + other.audit_failures,
        )
        merged._offer_ratio(
            other.min_ratio,
            other.min_ratio_index,
            other.min_ratio_g6,
        )
        return merged

    def to_dict(self) -> t.Dict[str, t.Any]:
        """JSON-ready view; the ratio is written as "p/q"."""
        d = dataclasses.asdict(self)
        d["min_ratio"] = None if self.min_ratio is None else str(self.min_ratio)
        d["below_floor"] = [list(entry) for entry in self.below_floor]
        d["deficit_histogram"] = {
            str(k): v for k, v in sorted(self.deficit_histogram.items())
        }
        return d


def _audit_selected(index: int, rate: float) -> bool:
    """Deterministic per-record sample, independent of worker assignment."""
    return random.Random(index).random() < rate  # noqa: S311


def evaluate_graph(
    index: int,
    g: Graph,
    options: t.Union[ScanOptions, None] = None,
    g6: t.Union[str, None] = None,
) -> ScanRecord:
    """Compute γ(G) and γ_t(prism(G)) for one graph.

    With the bipartite shortcut, γ_t(prism(G)) is taken as 2γ(G) for
    bipartite isolate-free G, and a deterministic sample of those records is
    re-solved in full.
    """
    options = options or ScanOptions()
    budget = options.node_budget
    bipartite = is_bipartite(g)
    fields: t.Dict[str, t.Any] = {
        "index": index,
        "g6": encode_graph6(g) if g6 is None else g6,
        "n": g.n,
        "bipartite": bipartite,
        "triangle_free": is_triangle_free(g),
    }
    try:
        gamma = domination_number(g, budget).value
    except UndecidedError:
        _LOGGER.info("Record %d: γ undecided", index)
        return ScanRecord(gamma=None, gamma_t_prism=None, **fields)

    shortcut = options.bipartite_shortcut and bipartite and not g.isolated_vertices()
    if shortcut:
        fields["via_shortcut"] = True
        gamma_t_prism: t.Union[int, None] = 2 * gamma
        if _audit_selected(index, options.audit_rate):
            fields["audited"] = True
            try:
                full = total_domination_number(prism(g), budget).value
            except UndecidedError:
                full = None
            if full != gamma_t_prism:
                _LOGGER.error(
                    "Audit mismatch at record %d: shortcut %d, full %s",
                    index,
                    gamma_t_prism,
                    full,
                )
                fields["audit_failed"] = True
        return ScanRecord(gamma=gamma, gamma_t_prism=gamma_t_prism, **fields)

    try:
        gamma_t_prism = total_domination_number(prism(g), budget).value
    except UndecidedError:
        _LOGGER.info("Record %d: γ_t of the prism undecided", index)
        gamma_t_prism = None
    return ScanRecord(gamma=gamma, gamma_t_prism=gamma_t_prism, **fields)


def _evaluate_task(task: t.Tuple[int, str, Graph, ScanOptions]) -> ScanRecord:
    index, g6, g, options = task
    return evaluate_graph(index, g, options, g6)


def iter_scan(
    lines: t.Iterable[str],
    options: t.Union[ScanOptions, None] = None,
) -> t.Iterator[ScanRecord]:
    """Evaluate every graph6 line, yielding records in input order.

    Parsing happens in this process; with jobs > 1 batches of parsed graphs
    are evaluated by a process pool.

    Raises:
        Graph6Error on the first malformed line
    """
    options = options or ScanOptions()
    tasks = (
        (i, rec.text, rec.graph, options) for i, rec in enumerate(read_graph6(lines))
    )
    if options.jobs <= 1:
        yield from map(_evaluate_task, tasks)
        return
    with multiprocessing.Pool(options.jobs) as pool:
        while True:
            batch = list(itertools.islice(tasks, _BATCH))
            if not batch:
                break
            yield from pool.imap(_evaluate_task, batch, chunksize=8)


def scan_stream(
    lines: t.Iterable[str],
    options: t.Union[ScanOptions, None] = None,
    emit: t.Union[t.Callable[[ScanRecord], None], None] = None,
) -> ScanReport:
    """Run a census over a graph6 stream.

    Args:
        lines: graph6 lines
        options: Scan options
        emit: Called with every record, in input order

    Returns:
        Aggregate report
    """
    options = options or ScanOptions()
    report = ScanReport()
    records = tqdm.tqdm(
        iter_scan(lines, options),
        desc="scan",
        unit="graph",
        file=sys.stderr,
        disable=not options.progress,
    )
    for record in records:
        report.add(record)
        if emit is not None:
            emit(record)

    _LOGGER.info(
        "Scanned %d graphs: %d perfect, %d not, %d undecided",
        report.total_graphs,
        report.perfect_count,
        report.non_perfect_count,
        report.undecided_count,
    )
    for index, g6, ratio in report.below_floor:
        _LOGGER.warning(
            "Record %d (%s) has γ_t(prism)/γ = %s, below %s",
            index,
            g6,
            ratio,
            RATIO_FLOOR,
        )
    if report.bipartite_non_perfect:
        _LOGGER.error(
            "%d bipartite graphs are not γ_t-prism perfect",
            report.bipartite_non_perfect,
        )
    return report


def sample_perfect_fraction(
    order: int,
    samples: int,
    seed: int = 0,
    options: t.Union[ScanOptions, None] = None,
) -> fractions.Fraction:
    """Fraction of γ_t-prism perfect graphs among G(order, 1/2) samples.

    Undecided samples are left out of both numerator and denominator.
    """
    rng = random.Random(seed)  # noqa: S311
    report = ScanReport()
    for i in range(samples):
        report.add(evaluate_graph(i, random_graph(order, rng), options))
    decided = report.perfect_count + report.non_perfect_count
    if decided == 0:
        return fractions.Fraction(0)
    return fractions.Fraction(report.perfect_count, decided)
