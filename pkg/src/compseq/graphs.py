"""Digraphs on 1-based vertex ids and their competition-graph machinery.

``component_chain`` accepts exactly the linearly connected digraphs: the
strong components, listed in topological order D_1, ..., D_eta, must form a
directed path in the condensation, every arc either staying inside one
component or going from some D_p straight to D_(p+1), with at least one arc
across every consecutive interface.

``imprimitivity`` splits each strong component into its cyclic classes
U_1, ..., U_kappa (kappa = gcd of the component's directed cycle lengths;
every arc advances the class index by one, cyclically).  Classes are
anchored so the smallest vertex id of a nontrivial component lands in U_1;
any other rotation of the labels is equally consistent and yields the same
downstream answers.

``m_step_competition`` joins u and v iff some vertex is reachable from both
by a directed walk of length exactly m.  It always evaluates two
independent routes (matrix power vs direct reachability DP) and refuses to
answer if they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

from .bmat import BoolMatrix, ParseError, bool_pow

__all__ = [
    "Digraph",
    "UndirectedGraph",
    "ComponentChain",
    "ImprimitivityData",
    "SelfLoopError",
    "NotLinearlyConnectedError",
    "InternalCheckError",
    "from_matrix",
    "to_matrix",
    "component_chain",
    "imprimitivity",
    "competition_graph",
    "m_step_competition",
    "parse_edge_list",
    "format_edge_list",
    "parse_digraph",
    "format_digraph",
]


class SelfLoopError(ValueError):
    """A vertex with an arc to itself, outside the class handled here."""

    def __init__(self, vertex: int):
        super().__init__(f"self-loop on vertex {vertex}")
        self.vertex = vertex


class NotLinearlyConnectedError(ValueError):
    """The strong components do not form a single consecutive chain.

    ``witness_arc`` names an offending arc when one exists (an arc that
    skips a level of the chain); it is None when the failure is a missing
    interface or disconnection.
    """

    def __init__(self, message: str, witness_arc: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness_arc = witness_arc


class InternalCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


@dataclass(frozen=True)
class Digraph:
    """Finite digraph on vertices 1..n with arc set ``arcs``."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one vertex, got n={self.n}")
        for u, v in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) outside 1..{self.n}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        return cls(n, frozenset((u, v) for u, v in arcs))

    @cached_property
    def out_sets(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            out[u].add(v)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def in_sets(self) -> dict[int, frozenset[int]]:
        inc: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.arcs:
            inc[v].add(u)
        return {v: frozenset(s) for v, s in inc.items()}

    @cached_property
    def self_loops(self) -> tuple[int, ...]:
        return tuple(sorted(u for u, v in self.arcs if u == v))


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on 1..n; edges stored with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) not normalized within 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @classmethod
    def from_adjacency_matrix(cls, a: BoolMatrix) -> "UndirectedGraph":
        for i in range(a.n):
            if a.entry(i, i):
                raise ValueError(f"adjacency matrix has nonzero diagonal at {i}")
            for j in range(i + 1, a.n):
                if a.entry(i, j) != a.entry(j, i):
                    raise ValueError(f"adjacency matrix not symmetric at ({i},{j})")
        return cls(
            a.n,
            frozenset(
                (i + 1, j + 1)
                for i in range(a.n)
                for j in range(i + 1, a.n)
                if a.entry(i, j)
            ),
        )

    def to_adjacency_matrix(self) -> BoolMatrix:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        return BoolMatrix(self.n, tuple(rows))

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((min(u, v), max(u, v))) in self.edges

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def connected_components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        comps = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                u = frontier.pop()
                for w in self.adjacency[u]:
                    if w not in comp:
                        comp.add(w)
                        frontier.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)


def from_matrix(a: BoolMatrix) -> Digraph:
    """Digraph with arc (i+1, j+1) iff entry (i, j) of a is 1."""
    arcs = set()
    for i, r in enumerate(a.rows):
        while r:
            j = (r & -r).bit_length() - 1
            arcs.add((i + 1, j + 1))
            r &= r - 1
    return Digraph(a.n, frozenset(arcs))


def to_matrix(d: Digraph) -> BoolMatrix:
    """Adjacency matrix: entry (u-1, v-1) = 1 iff (u, v) is an arc."""
    rows = [0] * d.n
    for u, v in d.arcs:
        rows[u - 1] |= 1 << (v - 1)
    return BoolMatrix(d.n, tuple(rows))


def _strong_components(d: Digraph) -> list[frozenset[int]]:
    """Tarjan's algorithm, iterative; components in topological order."""
    succ = {v: sorted(d.out_sets[v]) for v in range(1, d.n + 1)}
    index_of: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0
    for root in range(1, d.n + 1):
        if root in index_of:
            continue
        work = [(root, 0)]
        while work:
            v, pc = work.pop()
            if pc == 0:
                index_of[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            descended = False
            out = succ[v]
            for k in range(pc, len(out)):
                w = out[k]
                if w not in index_of:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    descended = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if descended:
                continue
            if lowlink[v] == index_of[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    components.reverse()  # Tarjan emits sinks first
    return components


@dataclass(frozen=True)
class ComponentChain:
    """Strong components D_1..D_eta of a linearly connected digraph, in
    chain order, with the arc sets of each consecutive interface."""

    components: tuple[frozenset[int], ...]
    trivial_flags: tuple[bool, ...]
    interface_arcs: tuple[frozenset[tuple[int, int]], ...]

    @property
    def eta(self) -> int:
        return len(self.components)

    @cached_property
    def component_index(self) -> dict[int, int]:
        """vertex -> 1-based component position."""
        idx = {}
        for p, comp in enumerate(self.components, start=1):
            for v in comp:
                idx[v] = p
        return idx

    def component(self, p: int) -> frozenset[int]:
        return self.components[p - 1]

    @property
    def all_trivial(self) -> bool:
        return all(self.trivial_flags)

    @property
    def last_nontrivial(self) -> int | None:
        """Largest p with D_p nontrivial, or None."""
        for p in range(self.eta, 0, -1):
            if not self.trivial_flags[p - 1]:
                return p
        return None


def component_chain(d: Digraph) -> ComponentChain:
    """Strong-component chain of d, or NotLinearlyConnectedError.

    Rejects self-loops outright: a loop is a cycle of length one and falls
    outside the loopless class every result here is stated for.
    """
    if d.self_loops:
        raise SelfLoopError(d.self_loops[0])
    comps = _strong_components(d)
    eta = len(comps)
    pos = {}
    for p, comp in enumerate(comps):
        for v in comp:
            pos[v] = p
    interfaces: list[set[tuple[int, int]]] = [set() for _ in range(eta - 1)]
    for u, v in d.arcs:
        pu, pv = pos[u], pos[v]
        if pu == pv:
            continue
        if pv == pu + 1:
            interfaces[pu].add((u, v))
        else:
            raise NotLinearlyConnectedError(
                f"arc ({u},{v}) jumps from component {pu + 1} to component {pv + 1}",
                witness_arc=(u, v),
            )
    for p, arcs in enumerate(interfaces):
        if not arcs:
            raise NotLinearlyConnectedError(
                f"no arcs from component {p + 1} to component {p + 2}"
            )
    return ComponentChain(
        components=tuple(comps),
        trivial_flags=tuple(len(c) == 1 for c in comps),
        interface_arcs=tuple(frozenset(a) for a in interfaces),
    )


@dataclass(frozen=True)
class ImprimitivityData:
    """Cyclic class structure of every component of a chain.

    kappas[p-1] is the gcd of directed cycle lengths of D_p (1 for a
    trivial component); classes[p-1][j-1] is the vertex set U_j of D_p.
    Every intra-component arc goes from U_j to U_(j+1), indices cyclic.
    """

    kappas: tuple[int, ...]
    classes: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self):
        if len(self.kappas) != len(self.classes):
            raise ValueError("kappas and classes disagree on component count")
        for p, (k, cls) in enumerate(zip(self.kappas, self.classes), start=1):
            if k < 1:
                raise ValueError(f"component {p}: kappa must be >= 1, got {k}")
            if len(cls) != k:
                raise ValueError(f"component {p}: expected {k} classes, got {len(cls)}")
            if any(not c for c in cls):
                raise ValueError(f"component {p}: empty imprimitivity class")

    def kappa(self, p: int) -> int:
        return self.kappas[p - 1]

    def class_set(self, p: int, j: int) -> frozenset[int]:
        return self.classes[p - 1][j - 1]

    @cached_property
    def class_index(self) -> dict[int, tuple[int, int]]:
        """vertex -> (component p, class label j), both 1-based."""
        idx = {}
        for p, cls in enumerate(self.classes, start=1):
            for j, members in enumerate(cls, start=1):
                for v in members:
                    idx[v] = (p, j)
        return idx


def _bfs_levels(root: int, vertices: frozenset[int], out_sets) -> dict[int, int]:
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in out_sets[u]:
                if w in vertices and w not in level:
                    level[w] = level[u] + 1
                    nxt.append(w)
        frontier = nxt
    return level


def imprimitivity(d: Digraph, chain: ComponentChain) -> ImprimitivityData:
    """Cyclic classes of every component of d.

    For a nontrivial component, BFS from its smallest vertex gives levels;
    kappa is the gcd of level(u) + 1 - level(v) over intra-component arcs
    (each term is a cycle-length discrepancy, so their gcd is the gcd of
    all directed cycle lengths), and U_j collects the vertices with
    level = j - 1 (mod kappa), putting the BFS root in U_1.
    """
    kappas = []
    all_classes = []
    for comp, trivial in zip(chain.components, chain.trivial_flags):
        if trivial:
            kappas.append(1)
            all_classes.append((comp,))
            continue
        root = min(comp)
        level = _bfs_levels(root, comp, d.out_sets)
        if len(level) != len(comp):
            raise InternalCheckError(
                f"component containing {root} not strongly connected"
            )
        kappa = 0
        for u in comp:
            for w in d.out_sets[u]:
                if w in comp:
                    kappa = gcd(kappa, level[u] + 1 - level[w])
        if kappa < 1:
            raise InternalCheckError(
                f"component containing {root} has no cycle discrepancy"
            )
        classes = [set() for _ in range(kappa)]
        for v in comp:
            classes[level[v] % kappa].add(v)
        for u in comp:
            for w in d.out_sets[u]:
                if w in comp and (level[u] + 1) % kappa != level[w] % kappa:
                    raise InternalCheckError(
                        f"arc ({u},{w}) does not advance its class by one"
                    )
        kappas.append(kappa)
        all_classes.append(tuple(frozenset(c) for c in classes))
    return ImprimitivityData(kappas=tuple(kappas), classes=tuple(all_classes))


def competition_graph(d: Digraph) -> UndirectedGraph:
    """Join u and v iff they have a common out-neighbor (common prey)."""
    out = d.out_sets
    edges = set()
    for u in range(1, d.n + 1):
        ou = out[u]
        if not ou:
            continue
        for v in range(u + 1, d.n + 1):
            if ou & out[v]:
                edges.add((u, v))
    return UndirectedGraph(d.n, frozenset(edges))


def _m_step_reach(d: Digraph, m: int) -> dict[int, frozenset[int]]:
    reach = {v: frozenset((v,)) for v in range(1, d.n + 1)}
    out = d.out_sets
    for _ in range(m):
        nxt = {}
        for v, cur in reach.items():
            acc: set[int] = set()
            for u in cur:
                acc |= out[u]
            nxt[v] = frozenset(acc)
        reach = nxt
    return reach


def m_step_competition(d: Digraph, m: int) -> UndirectedGraph:
    """Join u and v iff some vertex is reachable from both by a directed
    walk of length exactly m.

    Evaluated twice: once as the competition graph of the digraph of A^m,
    once by a direct reachability DP on d.  A mismatch raises
    InternalCheckError instead of returning a wrong answer.
    """
    if m < 1:
        raise ValueError(f"step count must be >= 1, got {m}")
    via_matrix = competition_graph(from_matrix(bool_pow(to_matrix(d), m)))
    reach = _m_step_reach(d, m)
    edges = set()
    for u in range(1, d.n + 1):
        ru = reach[u]
        if not ru:
            continue
        for v in range(u + 1, d.n + 1):
            if ru & reach[v]:
                edges.add((u, v))
    via_walks = UndirectedGraph(d.n, frozenset(edges))
    if via_matrix != via_walks:
        diff = sorted(via_matrix.edges ^ via_walks.edges)
        raise InternalCheckError(
            f"m-step competition routes disagree at m={m}, first difference {diff[0]}"
        )
    return via_walks


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format: line 1 is "n m", then m lines "u v".

    Rejects self-loops and duplicate arcs; ids are 1-based.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(1, "empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(1, f"expected 'n m', got {lines[0].strip()!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(1, f"expected integers, got {lines[0].strip()!r}") from None
    if n < 1:
        raise ParseError(1, f"vertex count must be >= 1, got {n}")
    if m < 0:
        raise ParseError(1, f"arc count must be >= 0, got {m}")
    if len(lines) < m + 1:
        raise ParseError(
            len(lines) + 1, f"expected {m} arcs, input ends after arc {len(lines) - 1}"
        )
    arcs = set()
    for i in range(m):
        lineno = i + 2
        toks = lines[i + 1].split()
        if len(toks) != 2:
            raise ParseError(lineno, f"expected 'u v', got {lines[i + 1].strip()!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(lineno, f"expected integers, got {lines[i + 1].strip()!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"arc ({u},{v}) outside 1..{n}")
        if u == v:
            raise ParseError(lineno, f"self-loop on vertex {u}")
        if (u, v) in arcs:
            raise ParseError(lineno, f"duplicate arc ({u},{v})")
        arcs.add((u, v))
    for extra in range(m + 1, len(lines)):
        if lines[extra].strip():
            raise ParseError(extra + 1, "trailing content after arc list")
    return Digraph(n, frozenset(arcs))


def format_edge_list(d: Digraph) -> str:
    """Inverse of parse_edge_list; arcs sorted, newline-terminated."""
    lines = [f"{d.n} {len(d.arcs)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse either input format, auto-detected by the first line: one
    token means matrix text, two tokens means an edge list.  Self-loops
    are rejected in both."""
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise ParseError(1, "empty input")
    ntoks = len(lines[0].split())
    if ntoks == 1:
        from .bmat import parse_matrix

        a = parse_matrix(text)
        for i in range(a.n):
            if a.entry(i, i):
                raise ParseError(i + 2, f"self-loop on vertex {i + 1}")
        return from_matrix(a)
    if ntoks == 2:
        return parse_edge_list(text)
    raise ParseError(1, f"expected 1 token (matrix) or 2 tokens (edge list), got {ntoks}")


def format_digraph(d: Digraph) -> str:
    """Canonical text for a digraph: the edge-list format."""
    return format_edge_list(d)
