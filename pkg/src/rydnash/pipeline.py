"""End-to-end orchestration: load configs, run the classical and annealing
analyses on the same graph, and compare the two.

Every result type round-trips through a plain-dict report form so runs can
be persisted, reloaded, and compared across processes. Reports contain no
timestamps or absolute paths: identical configuration and seed produce
byte-identical files.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from ._bits import from_bitstring
from .dynamics import (
    DEFAULT_C6,
    RydbergSystem,
    ShotHistogram,
    diagonal_energy,
    evolve,
    sample,
)
from .errors import ConstraintViolation, IncompatibleRuns, InvalidInput
from .fileio import load_graph
from .game import DEFAULT_EXHAUSTIVE_LIMIT, GameParams, enumerate_specialized_nash
from .geometry import (
    EmbeddedGraph,
    HardwareConstraints,
    ValidationReport,
    ambiguity_warnings,
    validate_embedding,
)
from .indsets import enumerate_mis, is_independent, maximum_independent_sets, verify_correspondence
from .schedule import Schedule, default_schedule, validate_schedule

#: Documented default sampling seed; reports quote it so reruns reproduce.
DEFAULT_SEED = 7


@dataclass(frozen=True)
class RunConfig:
    """Everything one pipeline run needs, with conservative defaults."""

    graph_path: str
    game: GameParams = GameParams()
    schedule: Schedule | None = None  # None selects the default ramp
    c6: float = DEFAULT_C6
    shots: int = 1000
    seed: int = DEFAULT_SEED
    outdir: str = "rydnash_out"
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT
    margin: float = 0.15
    plot_data: bool = False
    hw: HardwareConstraints = field(default_factory=HardwareConstraints)

    def __post_init__(self):
        if self.shots < 1:
            raise InvalidInput(f"shots must be >= 1, got {self.shots!r}")


def graph_fingerprint(graph: EmbeddedGraph) -> str:
    """Short digest of the exact layout, used to pair up runs."""
    h = hashlib.sha256()
    h.update(str(graph.n).encode())
    h.update(graph.radius.hex().encode())
    for x, y in graph.positions:
        h.update(x.hex().encode())
        h.update(y.hex().encode())
    return h.hexdigest()[:16]


@dataclass(frozen=True)
class ClassicalResult:
    """Equilibrium and independent-set families plus their match verdict."""

    graph_hash: str
    n: int
    nash: tuple[str, ...]
    maximal_sets: tuple[str, ...]
    maximum_sets: tuple[str, ...]
    nash_equals_mis: bool
    witnesses: tuple[tuple[str, str], ...]

    def to_report(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "n": self.n,
            "nash_supports": list(self.nash),
            "maximal_independent_sets": list(self.maximal_sets),
            "maximum_independent_sets": list(self.maximum_sets),
            "nash_equals_mis": self.nash_equals_mis,
            "witnesses": [list(w) for w in self.witnesses],
        }

    @classmethod
    def from_report(cls, data: dict) -> "ClassicalResult":
        return cls(
            graph_hash=data["graph_hash"],
            n=data["n"],
            nash=tuple(data["nash_supports"]),
            maximal_sets=tuple(data["maximal_independent_sets"]),
            maximum_sets=tuple(data["maximum_independent_sets"]),
            nash_equals_mis=data["nash_equals_mis"],
            witnesses=tuple((w[0], w[1]) for w in data["witnesses"]),
        )


@dataclass(frozen=True)
class BitstringRow:
    """One observed readout, classified against the graph's set families."""

    bitstring: str
    count: int
    probability: float
    energy: float
    independent: bool
    maximal: bool
    mis: bool


@dataclass(frozen=True)
class QuantumResult:
    """Annealing readout statistics plus per-bitstring classification."""

    graph_hash: str
    n: int
    c6: float
    shots: int
    seed: int
    duration: float
    histogram: ShotHistogram
    rows: tuple[BitstringRow, ...]
    maximum_sets: tuple[str, ...]
    top_k: tuple[str, ...]
    mis_aggregate_probability: float
    mis_in_topk: bool

    def to_report(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "n": self.n,
            "c6": self.c6,
            "shots": self.shots,
            "seed": self.seed,
            "duration": self.duration,
            "counts": dict(self.histogram.counts),
            "classification": [_row_dict(r) for r in self.rows],
            "maximum_independent_sets": list(self.maximum_sets),
            "top_k": list(self.top_k),
            "mis_aggregate_probability": self.mis_aggregate_probability,
            "mis_in_topk": self.mis_in_topk,
        }


def _row_dict(row: "BitstringRow") -> dict:
    return {
        "bitstring": row.bitstring,
        "count": row.count,
        "probability": row.probability,
        "energy": row.energy,
        "independent": row.independent,
        "maximal": row.maximal,
        "mis": row.mis,
    }


def _quantum_fragment_from_report(data: dict) -> dict:
    """The fields `compare` needs from a persisted annealing report."""
    return {
        "graph_hash": data["graph_hash"],
        "top_k": tuple(data["top_k"]),
        "maximum_sets": tuple(data["maximum_independent_sets"]),
        "mis_aggregate_probability": data["mis_aggregate_probability"],
        "classification": tuple(
            BitstringRow(
                bitstring=r["bitstring"],
                count=r["count"],
                probability=r["probability"],
                energy=r["energy"],
                independent=r["independent"],
                maximal=r["maximal"],
                mis=r["mis"],
            )
            for r in data["classification"]
        ),
    }


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side verdicts; every verdict is recomputable from the fields."""

    graph_hash: str
    nash: tuple[str, ...]
    maximal_sets: tuple[str, ...]
    maximum_sets: tuple[str, ...]
    top_k: tuple[str, ...]
    classification: tuple[BitstringRow, ...]
    mis_aggregate_probability: float
    nash_equals_mis: bool
    mis_in_topk: bool
    overall_pass: bool

    def to_report(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "nash_supports": list(self.nash),
            "maximal_independent_sets": list(self.maximal_sets),
            "maximum_independent_sets": list(self.maximum_sets),
            "top_k": list(self.top_k),
            "classification": [_row_dict(r) for r in self.classification],
            "mis_aggregate_probability": self.mis_aggregate_probability,
            "verdicts": {
                "nash_equals_mis": self.nash_equals_mis,
                "mis_in_topk": self.mis_in_topk,
                "overall_pass": self.overall_pass,
            },
        }


def run_classical(config: RunConfig) -> ClassicalResult:
    """Enumerate equilibria and independent sets; verdict their agreement."""
    graph = load_graph(config.graph_path)
    nash = tuple(p.bitstring for p in enumerate_specialized_nash(graph, config.game, config.limit))
    maximal = tuple(s.bitstring for s in enumerate_mis(graph, config.limit))
    maximum = tuple(s.bitstring for s in maximum_independent_sets(graph, config.limit))
    ok, witnesses = verify_correspondence(graph, config.game, config.limit)
    return ClassicalResult(
        graph_hash=graph_fingerprint(graph),
        n=graph.n,
        nash=nash,
        maximal_sets=maximal,
        maximum_sets=maximum,
        nash_equals_mis=ok,
        witnesses=witnesses,
    )


def validate_run(config: RunConfig) -> tuple[EmbeddedGraph, Schedule, ValidationReport]:
    """Hardware validation for a run: spacing floor, waveform limits, and
    boundary-ambiguity warnings, merged into one report."""
    graph = load_graph(config.graph_path)
    schedule = config.schedule if config.schedule is not None else default_schedule(hw=config.hw)
    report = validate_embedding(graph, config.hw).merged(validate_schedule(schedule, config.hw))
    report = ValidationReport(report.violations, report.warnings + ambiguity_warnings(graph, config.margin))
    return graph, schedule, report


def run_quantum(config: RunConfig) -> QuantumResult:
    """Anneal, sample, and classify every observed bitstring.

    Refuses (ConstraintViolation carrying the validation report) when the
    layout or schedule breaks hardware limits. Deterministic for a fixed
    (config, seed).
    """
    graph, schedule, report = validate_run(config)
    if not report.ok:
        raise ConstraintViolation(
            f"hardware validation failed with {len(report.violations)} violation(s)", report=report
        )
    system = RydbergSystem(graph, config.c6)
    state = evolve(system, schedule)
    histogram = sample(state, config.shots, config.seed)
    delta_final = schedule.delta_at(schedule.duration)
    maximal = {s.bitstring for s in enumerate_mis(graph, config.limit)}
    maximum = tuple(s.bitstring for s in maximum_independent_sets(graph, config.limit))
    probs = state.probabilities()
    rows = tuple(
        BitstringRow(
            bitstring=bits,
            count=count,
            probability=float(probs[from_bitstring(bits)]),
            energy=diagonal_energy(system, delta_final, bits),
            independent=is_independent(graph, [i for i, ch in enumerate(bits) if ch == "1"]),
            maximal=bits in maximal,
            mis=bits in maximum,
        )
        for bits, count in histogram.ranked()
    )
    top_k = histogram.top(len(maximum))
    aggregate = float(sum(probs[from_bitstring(b)] for b in maximum))
    return QuantumResult(
        graph_hash=graph_fingerprint(graph),
        n=graph.n,
        c6=config.c6,
        shots=config.shots,
        seed=config.seed,
        duration=schedule.duration,
        histogram=histogram,
        rows=rows,
        maximum_sets=maximum,
        top_k=top_k,
        mis_aggregate_probability=aggregate,
        mis_in_topk=set(maximum) <= set(top_k),
    )


def compare(classical: ClassicalResult, quantum) -> ComparisonReport:
    """Cross-check the two analyses of one graph.

    ``quantum`` may be a QuantumResult or a reloaded annealing report dict.
    Raises IncompatibleRuns when the graph fingerprints differ.
    """
    if isinstance(quantum, dict):
        quantum_fields = _quantum_fragment_from_report(quantum)
    else:
        quantum_fields = {
            "graph_hash": quantum.graph_hash,
            "top_k": quantum.top_k,
            "maximum_sets": quantum.maximum_sets,
            "mis_aggregate_probability": quantum.mis_aggregate_probability,
            "classification": quantum.rows,
        }
    if classical.graph_hash != quantum_fields["graph_hash"]:
        raise IncompatibleRuns(
            f"classical run is for graph {classical.graph_hash}, "
            f"annealing run for {quantum_fields['graph_hash']}"
        )
    nash_equals_mis = set(classical.nash) == set(classical.maximal_sets)
    mis_in_topk = set(classical.maximum_sets) <= set(quantum_fields["top_k"])
    return ComparisonReport(
        graph_hash=classical.graph_hash,
        nash=classical.nash,
        maximal_sets=classical.maximal_sets,
        maximum_sets=classical.maximum_sets,
        top_k=tuple(quantum_fields["top_k"]),
        classification=tuple(quantum_fields["classification"]),
        mis_aggregate_probability=float(quantum_fields["mis_aggregate_probability"]),
        nash_equals_mis=nash_equals_mis,
        mis_in_topk=mis_in_topk,
        overall_pass=nash_equals_mis and mis_in_topk,
    )
