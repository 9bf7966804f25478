"""Brute-force ground truth and differential verification.

``simulate_limit`` decides convergence by pure simulation: the power
sequence of a Boolean matrix repeats after finitely many steps, so the
whole infinite sequence of competition graphs is read off one full cycle.
No theory enters; this is the oracle the analytic route is tested against.

``verify`` runs both routes on one digraph and compares verdicts, limits,
and clique structure; on a mismatch it greedily deletes arcs (keeping the
digraph linearly connected) to return a minimal counterexample.

``random_instance`` draws a linearly connected digraph deterministically
from a seed: a Hamiltonian cycle plus random chords per nontrivial
component, and at least one arc across every consecutive interface.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import theory
from .bmat import BoolMatrix, DEFAULT_MEMORY_CAP, gamma, power_trajectory
from .graphs import (
    Digraph,
    InternalCheckError,
    NotLinearlyConnectedError,
    SelfLoopError,
    UndirectedGraph,
    component_chain,
    imprimitivity,
    to_matrix,
)

__all__ = [
    "DEFAULT_SIZE_CAP",
    "SizeCapError",
    "SimulationResult",
    "CheckResult",
    "VerificationReport",
    "GeneratorSpec",
    "simulate_limit",
    "verify",
    "random_instance",
]

DEFAULT_SIZE_CAP = 64


class SizeCapError(ValueError):
    """The matrix is larger than the simulation size cap."""


@dataclass(frozen=True)
class SimulationResult:
    """Exact behavior of the competition graph sequence of one matrix.

    index_mu/period_pi describe the power sequence; gamma_cycle lists the
    distinct competition graphs appearing over one full period of the
    tail, in order of first appearance.  converged iff that list has
    length one; limit is then its single entry.
    """

    index_mu: int
    period_pi: int
    converged: bool
    limit: UndirectedGraph | None
    gamma_cycle: tuple[UndirectedGraph, ...]


def simulate_limit(
    a: BoolMatrix,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> SimulationResult:
    """Evaluate the competition graph of every power of a over one full
    period of the (eventually periodic) power sequence.

    The sequence of competition graphs is eventually constant iff it is
    constant on the periodic tail, so this is an exact decision, and
    raising either cap never changes the answer.
    """
    if a.n > size_cap:
        raise SizeCapError(f"matrix dimension {a.n} exceeds size cap {size_cap}")
    cycle, powers = power_trajectory(a, memory_cap)
    mu, pi = cycle.index_mu, cycle.period_pi
    tail = powers[mu - 1 : mu - 1 + pi]
    graphs = [UndirectedGraph.from_adjacency_matrix(gamma(m)) for m in tail]
    distinct: list[UndirectedGraph] = []
    for g in graphs:
        if g not in distinct:
            distinct.append(g)
    converged = len(distinct) == 1
    return SimulationResult(
        index_mu=mu,
        period_pi=pi,
        converged=converged,
        limit=distinct[0] if converged else None,
        gamma_cycle=tuple(distinct),
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: tuple[CheckResult, ...]
    failed_check: str | None
    counterexample: Digraph | None


def _run_check(
    d: Digraph, name: str, *, size_cap: int, memory_cap: int
) -> CheckResult | None:
    """One named comparison between the analytic and simulated routes, or
    None when the check's precondition does not hold for d."""
    try:
        chain = component_chain(d)
    except (NotLinearlyConnectedError, SelfLoopError) as e:
        return CheckResult(name, True, f"not applicable: {e}")
    imp = imprimitivity(d, chain)
    sim = simulate_limit(to_matrix(d), size_cap=size_cap, memory_cap=memory_cap)
    if name == "verdict":
        verdict = theory.converges(d, chain=chain, imp=imp)
        return CheckResult(
            "verdict",
            verdict.converged == sim.converged,
            f"analytic {verdict.converged} ({verdict.rule}) vs simulated {sim.converged}",
        )
    if any(chain.trivial_flags) or not sim.converged:
        return None
    if name == "limit":
        analytic = theory.limit_graph(d, chain, imp)
        assert sim.limit is not None
        extra = sorted(analytic.edges - sim.limit.edges)
        missing = sorted(sim.limit.edges - analytic.edges)
        return CheckResult(
            "limit",
            analytic == sim.limit,
            f"extra {extra[:3]} missing {missing[:3]}" if analytic != sim.limit else "graphs equal",
        )
    if name == "jbd":
        jbd = theory.jbd_condition(d, chain, imp)
        assert sim.limit is not None
        actual = theory.union_of_cliques(sim.limit)
        return CheckResult(
            "jbd",
            jbd.holds == actual,
            f"analytic {jbd.holds} vs simulated {actual}",
        )
    raise ValueError(f"unknown check {name!r}")


def _check_fails(d: Digraph, name: str, *, size_cap: int, memory_cap: int) -> bool:
    try:
        result = _run_check(d, name, size_cap=size_cap, memory_cap=memory_cap)
    except Exception:
        # a candidate that breaks preconditions is useless as a counterexample
        return False
    return result is not None and not result.passed


def _shrink(
    d: Digraph, name: str, *, size_cap: int, memory_cap: int
) -> Digraph:
    """Greedy arc deletion: remove any single arc whose removal keeps the
    digraph linearly connected and keeps the named check failing, until no
    single deletion survives.  Deterministic (arcs scanned in sorted order)."""
    current = d
    improved = True
    while improved:
        improved = False
        for arc in sorted(current.arcs):
            candidate = Digraph(current.n, current.arcs - {arc})
            try:
                component_chain(candidate)
            except (NotLinearlyConnectedError, SelfLoopError):
                continue
            if _check_fails(candidate, name, size_cap=size_cap, memory_cap=memory_cap):
                current = candidate
                improved = True
                break
    return current


def verify(
    d: Digraph,
    *,
    size_cap: int = DEFAULT_SIZE_CAP,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> VerificationReport:
    """Compare every applicable analytic answer against the simulation.

    Checks: the convergence verdict always; the limit graph and the
    union-of-cliques criterion when every component is nontrivial (the
    analytic constructions exist exactly then).  The first failing check
    is shrunk to a minimal counterexample by greedy arc deletion.
    """
    checks = []
    for name in ("verdict", "limit", "jbd"):
        result = _run_check(d, name, size_cap=size_cap, memory_cap=memory_cap)
        if result is not None:
            checks.append(result)
    failed = next((c.name for c in checks if not c.passed), None)
    counterexample = None
    if failed is not None:
        counterexample = _shrink(d, failed, size_cap=size_cap, memory_cap=memory_cap)
    return VerificationReport(
        passed=failed is None,
        checks=tuple(checks),
        failed_check=failed,
        counterexample=counterexample,
    )


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe for one random linearly connected digraph.

    sizes is either one (lo, hi) range used for every component or a
    per-component tuple of ranges; allow_trivial likewise one flag or a
    per-component tuple.  A component that may not be trivial draws its
    size from max(lo, 2)..hi, so every range needs hi >= 2 unless trivial
    is allowed there.
    """

    eta: int
    sizes: tuple = (1, 5)
    allow_trivial: bool | tuple[bool, ...] = True
    seed: int = 0

    def __post_init__(self):
        if self.eta < 1:
            raise ValueError(f"need at least one component, got eta={self.eta}")
        self.size_ranges  # force validation
        trivs = self.trivial_flags
        for p, ((lo, hi), allow) in enumerate(zip(self.size_ranges, trivs), start=1):
            if not allow and hi < 2:
                raise ValueError(
                    f"component {p}: range ({lo},{hi}) cannot fit a nontrivial component"
                )

    @property
    def size_ranges(self) -> tuple[tuple[int, int], ...]:
        raw = self.sizes
        if raw and isinstance(raw[0], int):
            ranges = (tuple(raw),) * self.eta
        else:
            ranges = tuple(tuple(r) for r in raw)
        if len(ranges) != self.eta:
            raise ValueError(f"expected {self.eta} size ranges, got {len(ranges)}")
        for lo, hi in ranges:
            if not (1 <= lo <= hi):
                raise ValueError(f"bad size range ({lo},{hi})")
        return ranges

    @property
    def trivial_flags(self) -> tuple[bool, ...]:
        if isinstance(self.allow_trivial, bool):
            return (self.allow_trivial,) * self.eta
        flags = tuple(self.allow_trivial)
        if len(flags) != self.eta:
            raise ValueError(f"expected {self.eta} trivial flags, got {len(flags)}")
        return flags


def random_instance(spec: GeneratorSpec) -> Digraph:
    """Draw the digraph described by spec; identical spec, identical digraph.

    Each nontrivial component is a Hamiltonian cycle on its vertices plus
    a random number of chords (biased toward none, so large imprimitivity
    indices stay common); consecutive components are joined by one to
    three random interface arcs.  The result always passes
    component_chain; vertex ids are scattered randomly so component order
    never correlates with id order.
    """
    rng = random.Random(spec.seed)
    sizes = []
    for (lo, hi), allow in zip(spec.size_ranges, spec.trivial_flags):
        effective_lo = lo if allow else max(lo, 2)
        sizes.append(rng.randint(effective_lo, hi))
    total = sum(sizes)
    ids = list(range(1, total + 1))
    rng.shuffle(ids)
    components: list[list[int]] = []
    at = 0
    for s in sizes:
        components.append(sorted(ids[at : at + s]))
        at += s
    arcs: set[tuple[int, int]] = set()
    for comp in components:
        if len(comp) == 1:
            continue
        order = comp[:]
        rng.shuffle(order)
        for a, b in zip(order, order[1:] + order[:1]):
            arcs.add((a, b))
        if rng.random() >= 0.45:
            for _ in range(rng.randint(1, len(comp))):
                u, v = rng.sample(comp, 2)
                arcs.add((u, v))
    for left, right in zip(components, components[1:]):
        for _ in range(rng.randint(1, 3)):
            arcs.add((rng.choice(left), rng.choice(right)))
    d = Digraph(total, frozenset(arcs))
    chain = component_chain(d)  # generator soundness: must always hold
    if chain.eta != spec.eta:
        raise InternalCheckError(
            f"generator produced {chain.eta} components, wanted {spec.eta}"
        )
    return d
