"""Convergence, limits, and clique structure for competition-graph
sequences of linearly connected digraphs.

Everything here is exact modular arithmetic on imprimitivity classes; the
simulation oracle (see ``oracle``) provides the independent ground truth
these computations are tested against.

Conventions used throughout:

* Class labels are 1-based: the classes of a component with index kappa
  are U_1 .. U_kappa.
* Walk-length residues live in Z_kappa = {0 .. kappa-1} with no label
  mapping; ``lambda_set`` stores class label j as residue j - 1 (so its
  ``class_labels`` reports 1-based labels), while the skeleton arithmetic
  of ``b_graph`` identifies label j with residue j mod kappa (label kappa
  is residue 0).
* Skeleton paths are ascending: one partite level per step.  Under that
  reading the three limit adjacency clauses (same class, same component,
  cross component) collapse to the single rule implemented in
  ``limit_graph``: x in U_i of D_p and y in U_j of D_q with p <= q are
  adjacent iff the ascending reach sets of (p, i) and (q, j) meet at some
  level r >= q.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterator

from .bmat import BoolMatrix
from .graphs import (
    ComponentChain,
    Digraph,
    ImprimitivityData,
    InternalCheckError,
    UndirectedGraph,
    component_chain,
    from_matrix,
    imprimitivity,
)

__all__ = [
    "RULE_ALL_TRIVIAL",
    "RULE_NONTRIVIAL_TAIL",
    "RULE_TRAILING_CONDITION",
    "ResidueSet",
    "InterfaceSet",
    "SkeletonGraph",
    "DivergenceWitness",
    "ConvergenceVerdict",
    "JbdVerdict",
    "BlockView",
    "TrivialComponentError",
    "interface_pairs",
    "lambda_set",
    "l_set",
    "shifted_union",
    "converges",
    "b_graph",
    "cs_graph",
    "ascending_reach",
    "limit_graph",
    "jbd_condition",
    "union_of_cliques",
    "matrix_block_view",
]

RULE_ALL_TRIVIAL = "AllTrivial"
RULE_NONTRIVIAL_TAIL = "NontrivialTail"
RULE_TRAILING_CONDITION = "TrailingCondition"


class TrivialComponentError(ValueError):
    """A construction that needs every component nontrivial met a trivial one."""


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_modulus."""

    modulus: int
    members: frozenset[int]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        for r in self.members:
            if not (0 <= r < self.modulus):
                raise ValueError(f"residue {r} outside Z_{self.modulus}")

    def shift(self, i: int) -> "ResidueSet":
        """i + self, elementwise mod modulus."""
        return ResidueSet(
            self.modulus, frozenset((r + i) % self.modulus for r in self.members)
        )

    def intersection(self, other: "ResidueSet") -> "ResidueSet":
        if self.modulus != other.modulus:
            raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
        return ResidueSet(self.modulus, self.members & other.members)

    def union(self, other: "ResidueSet") -> "ResidueSet":
        if self.modulus != other.modulus:
            raise ValueError(f"moduli differ: {self.modulus} vs {other.modulus}")
        return ResidueSet(self.modulus, self.members | other.members)

    @property
    def is_empty(self) -> bool:
        return not self.members

    @property
    def is_full(self) -> bool:
        return len(self.members) == self.modulus

    @classmethod
    def from_class_labels(cls, labels, modulus: int) -> "ResidueSet":
        """Class label j stored as residue j - 1."""
        out = set()
        for j in labels:
            if not (1 <= j <= modulus):
                raise ValueError(f"class label {j} outside 1..{modulus}")
            out.add(j - 1)
        return cls(modulus, frozenset(out))

    def class_labels(self) -> tuple[int, ...]:
        """1-based class labels, for sets built via from_class_labels."""
        return tuple(sorted(r + 1 for r in self.members))


@dataclass(frozen=True)
class InterfaceSet:
    """Class-index pairs (k, l) with an arc from U_k of D_p to U_l of D_(p+1)."""

    p: int
    pairs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class SkeletonGraph:
    """The class skeleton: an eta-partite graph whose level-p part is the
    label set {1 .. kappa_p}, with edges only between consecutive levels.

    A vertex is a (level, label) pair; an edge joins ((p, i), (p+1, j)).
    """

    class_counts: tuple[int, ...]
    edges: frozenset[tuple[tuple[int, int], tuple[int, int]]]

    def __post_init__(self):
        for (p, i), (q, j) in self.edges:
            if q != p + 1:
                raise ValueError(f"skeleton edge ({p},{i})-({q},{j}) not consecutive")
            if not (1 <= p <= len(self.class_counts) - 1):
                raise ValueError(f"skeleton edge at level {p} outside 1..{len(self.class_counts) - 1}")
            if not (1 <= i <= self.class_counts[p - 1] and 1 <= j <= self.class_counts[q - 1]):
                raise ValueError(f"skeleton edge ({p},{i})-({q},{j}) has label out of range")

    @property
    def eta(self) -> int:
        return len(self.class_counts)

    def level_edges(self, p: int) -> frozenset[tuple[int, int]]:
        """Label pairs (i, j) joined between levels p and p+1."""
        if not (1 <= p <= self.eta - 1):
            raise ValueError(f"level {p} outside 1..{self.eta - 1}")
        return frozenset((i, j) for (pp, i), (_, j) in self.edges if pp == p)


@dataclass(frozen=True)
class DivergenceWitness:
    """A class pair whose shifted union is neither empty nor all of Z_kappa;
    excluded_residue is one residue missing from the nonempty union."""

    j1: int
    j2: int
    excluded_residue: int


@dataclass(frozen=True)
class ConvergenceVerdict:
    converged: bool
    rule: str
    witness: DivergenceWitness | None

    def __post_init__(self):
        if (self.witness is not None) == self.converged:
            raise ValueError("witness must be present iff the verdict is divergence")


@dataclass(frozen=True)
class JbdVerdict:
    """Whether the limit is block diagonal with all-ones diagonal blocks
    (a disjoint union of cliques); diagnostics name the first violation."""

    holds: bool
    failing_level: int | None
    detail: str | None
    levels: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.holds


def interface_pairs(
    d: Digraph, chain: ComponentChain, imp: ImprimitivityData, p: int
) -> InterfaceSet:
    """Class-index pairs realized by arcs from D_p to D_(p+1)."""
    if not (1 <= p <= chain.eta - 1):
        raise ValueError(f"interface index {p} outside 1..{chain.eta - 1}")
    pairs = set()
    for u, v in chain.interface_arcs[p - 1]:
        pu, k = imp.class_index[u]
        pv, l = imp.class_index[v]
        if pu != p or pv != p + 1:
            raise InternalCheckError(f"interface arc ({u},{v}) not between {p} and {p + 1}")
        pairs.add((k, l))
    return InterfaceSet(p=p, pairs=frozenset(pairs))


def lambda_set(
    d: Digraph, chain: ComponentChain, imp: ImprimitivityData
) -> ResidueSet:
    """Classes of the last nontrivial component that feed the next (trivial)
    component's vertex; class label j is stored as residue j - 1.

    Requires a trailing trivial part: some component after the last
    nontrivial one.
    """
    p = chain.last_nontrivial
    if p is None:
        raise ValueError("every component is trivial; no reference component exists")
    if p == chain.eta:
        raise ValueError("last component is nontrivial; no trailing trivial part")
    (v,) = chain.component(p + 1)
    kappa = imp.kappa(p)
    labels = set()
    for u in d.in_sets[v]:
        pu, k = imp.class_index[u]
        if pu != p:
            raise InternalCheckError(f"in-neighbor {u} of {v} not in component {p}")
        labels.add(k)
    return ResidueSet.from_class_labels(labels, kappa)


def l_set(lambda_residues: ResidueSet, j: int) -> ResidueSet:
    """Walk-length residues from class j into the trailing vertex:
    {(k - j + 1) mod kappa : k a class label of lambda_residues}."""
    kappa = lambda_residues.modulus
    if not (1 <= j <= kappa):
        raise ValueError(f"class label {j} outside 1..{kappa}")
    return ResidueSet(
        kappa,
        frozenset((k - j + 1) % kappa for k in lambda_residues.class_labels()),
    )


def shifted_union(l1: ResidueSet, l2: ResidueSet, shifts: int) -> ResidueSet:
    """Union over i = 0..shifts-1 of (i + l1) intersect (i + l2)."""
    if l1.modulus != l2.modulus:
        raise ValueError(f"moduli differ: {l1.modulus} vs {l2.modulus}")
    if shifts < 1:
        raise ValueError(f"shift count must be >= 1, got {shifts}")
    acc: frozenset[int] = frozenset()
    for i in range(shifts):
        acc |= l1.shift(i).members & l2.shift(i).members
    return ResidueSet(l1.modulus, acc)


def converges(
    d: Digraph,
    *,
    chain: ComponentChain | None = None,
    imp: ImprimitivityData | None = None,
) -> ConvergenceVerdict:
    """Decide whether the m-step competition graph sequence of d becomes
    constant for large m.

    Rules, in order: every component trivial (the sequence is eventually
    edgeless); last component nontrivial (always converges); otherwise the
    trailing condition: writing p for the last nontrivial component, kappa
    for its index, and L_j for the walk-length residues from class j into
    the next component's vertex, the sequence converges iff for every
    unordered pair j1 != j2 the union over i = 0..eta-p-1 of
    (i + L_j1) intersect (i + L_j2) is empty or all of Z_kappa.
    """
    if chain is None:
        chain = component_chain(d)
    if imp is None:
        imp = imprimitivity(d, chain)
    if chain.all_trivial:
        return ConvergenceVerdict(True, RULE_ALL_TRIVIAL, None)
    if not chain.trivial_flags[-1]:
        return ConvergenceVerdict(True, RULE_NONTRIVIAL_TAIL, None)
    p = chain.last_nontrivial
    assert p is not None
    kappa = imp.kappa(p)
    lam = lambda_set(d, chain, imp)
    shifts = chain.eta - p
    lsets = {j: l_set(lam, j) for j in range(1, kappa + 1)}
    for j1 in range(1, kappa + 1):
        for j2 in range(j1 + 1, kappa + 1):
            union = shifted_union(lsets[j1], lsets[j2], shifts)
            if not union.is_empty and not union.is_full:
                excluded = min(set(range(kappa)) - union.members)
                return ConvergenceVerdict(
                    False,
                    RULE_TRAILING_CONDITION,
                    DivergenceWitness(j1=j1, j2=j2, excluded_residue=excluded),
                )
    return ConvergenceVerdict(True, RULE_TRAILING_CONDITION, None)


def _label(residue: int, kappa: int) -> int:
    """Residue r in Z_kappa as a 1-based class label (0 is label kappa)."""
    return kappa if residue == 0 else residue


def b_graph(
    kappa1: int,
    kappa2: int,
    interface: InterfaceSet,
    d1_trivial: bool,
) -> frozenset[tuple[int, int]]:
    """Bipartite skeleton between the classes of two consecutive components.

    Nontrivial first component: labels (i, j) are joined iff for some
    interface pair (k, l) and some t in 0..lcm(kappa1,kappa2)-1,
    i = k + 1 + t (mod kappa1) and j = l + t (mod kappa2).  Trivial first
    component (kappa1 = 1): (1, j) is joined iff j = l - 1 (mod kappa2)
    for some interface pair (1, l).
    """
    if kappa1 < 1 or kappa2 < 1:
        raise ValueError(f"class counts must be >= 1, got {kappa1}, {kappa2}")
    if d1_trivial and kappa1 != 1:
        raise ValueError(f"trivial first component must have kappa1 = 1, got {kappa1}")
    for k, l in interface.pairs:
        if not (1 <= k <= kappa1 and 1 <= l <= kappa2):
            raise ValueError(
                f"interface pair ({k},{l}) inconsistent with moduli ({kappa1},{kappa2})"
            )
    edges = set()
    if d1_trivial:
        for _, l in interface.pairs:
            edges.add((1, _label((l - 1) % kappa2, kappa2)))
        return frozenset(edges)
    period = lcm(kappa1, kappa2)
    for k, l in interface.pairs:
        for t in range(period):
            i = _label((k + 1 + t) % kappa1, kappa1)
            j = _label((l + t) % kappa2, kappa2)
            edges.add((i, j))
    return frozenset(edges)


def cs_graph(
    d: Digraph, chain: ComponentChain, imp: ImprimitivityData
) -> SkeletonGraph:
    """The class skeleton of the whole chain: the union of the consecutive
    bipartite skeletons.  Defined only when every component is nontrivial."""
    for p, trivial in enumerate(chain.trivial_flags, start=1):
        if trivial:
            raise TrivialComponentError(
                f"component {p} is trivial; the class skeleton needs every component nontrivial"
            )
    edges = set()
    for p in range(1, chain.eta):
        iset = interface_pairs(d, chain, imp, p)
        for i, j in b_graph(imp.kappa(p), imp.kappa(p + 1), iset, d1_trivial=False):
            edges.add(((p, i), (p + 1, j)))
    return SkeletonGraph(class_counts=imp.kappas, edges=frozenset(edges))


def ascending_reach(sk: SkeletonGraph, p: int, i: int) -> dict[int, frozenset[int]]:
    """Labels reachable from (p, i) by skeleton paths that advance exactly
    one level per step; result maps each level r >= p to its label set
    (level p maps to {i})."""
    if not (1 <= p <= sk.eta):
        raise ValueError(f"level {p} outside 1..{sk.eta}")
    if not (1 <= i <= sk.class_counts[p - 1]):
        raise ValueError(f"label {i} outside 1..{sk.class_counts[p - 1]} at level {p}")
    reach: dict[int, frozenset[int]] = {p: frozenset((i,))}
    for r in range(p, sk.eta):
        cur = reach[r]
        reach[r + 1] = frozenset(j for (k, j) in sk.level_edges(r) if k in cur)
    return reach


def limit_graph(
    d: Digraph, chain: ComponentChain, imp: ImprimitivityData
) -> UndirectedGraph:
    """The limit of the m-step competition graph sequence, built from the
    class skeleton.  Defined only when every component is nontrivial (the
    sequence then converges unconditionally).

    x in U_i of D_p and y in U_j of D_q with p <= q are adjacent iff the
    ascending reach sets of (p, i) and (q, j) intersect at some level
    r >= q.  Since reach of (q, j) at level q is {j}, this simultaneously
    says: same class always adjacent; same component, different classes
    adjacent iff their reaches meet strictly above; cross component
    adjacent iff j is reachable from (p, i) or the reaches meet above q.
    """
    sk = cs_graph(d, chain, imp)
    eta = sk.eta
    reach: dict[tuple[int, int], dict[int, frozenset[int]]] = {}
    for p in range(1, eta + 1):
        for i in range(1, sk.class_counts[p - 1] + 1):
            reach[(p, i)] = ascending_reach(sk, p, i)
    edges = set()
    for u in range(1, d.n + 1):
        pu, iu = imp.class_index[u]
        for v in range(u + 1, d.n + 1):
            pv, iv = imp.class_index[v]
            (p, i), (q, j) = ((pu, iu), (pv, iv)) if pu <= pv else ((pv, iv), (pu, iu))
            ru, rv = reach[(p, i)], reach[(q, j)]
            if any(ru[r] & rv[r] for r in range(q, eta + 1)):
                edges.add((u, v))
    return UndirectedGraph(d.n, frozenset(edges))


def jbd_condition(
    d: Digraph, chain: ComponentChain, imp: ImprimitivityData
) -> JbdVerdict:
    """Whether the limit graph is a disjoint union of cliques, decided from
    the interfaces alone: for every p < eta, kappa_eta must divide kappa_p
    and all interface pairs (k, l) of D_p -> D_(p+1) must share one value
    of (k - l) mod kappa_eta.  A single component satisfies this vacuously.

    Defined only when every component is nontrivial.
    """
    for p, trivial in enumerate(chain.trivial_flags, start=1):
        if trivial:
            raise TrivialComponentError(
                f"component {p} is trivial; the clique criterion needs every component nontrivial"
            )
    eta = chain.eta
    kappa_last = imp.kappa(eta)
    lines = []
    holds = True
    failing_level = None
    detail = None
    for p in range(1, eta):
        kappa_p = imp.kappa(p)
        if kappa_p % kappa_last != 0:
            line = (
                f"level {p}: kappa_{eta} = {kappa_last} does not divide "
                f"kappa_{p} = {kappa_p}"
            )
            if holds:
                holds, failing_level, detail = False, p, line
            lines.append("FAIL " + line)
            continue
        pairs = sorted(interface_pairs(d, chain, imp, p).pairs)
        residues: dict[int, tuple[int, int]] = {}
        for k, l in pairs:
            residues.setdefault((k - l) % kappa_last, (k, l))
        if len(residues) > 1:
            (r1, pair1), (r2, pair2) = sorted(residues.items())[:2]
            line = (
                f"level {p}: interface pairs {pair1} and {pair2} have residues "
                f"{r1} != {r2} (mod kappa_{eta} = {kappa_last})"
            )
            if holds:
                holds, failing_level, detail = False, p, line
            lines.append("FAIL " + line)
        else:
            shared = next(iter(residues)) if residues else None
            lines.append(
                f"ok   level {p}: kappa_{eta} = {kappa_last} divides kappa_{p} = {kappa_p}; "
                f"shared residue {shared}"
            )
    return JbdVerdict(
        holds=holds, failing_level=failing_level, detail=detail, levels=tuple(lines)
    )


def union_of_cliques(g: UndirectedGraph) -> bool:
    """True iff every connected component of g induces a complete graph."""
    for comp in g.connected_components():
        k = len(comp)
        inside = sum(1 for u, v in g.edges if u in comp)
        if inside != k * (k - 1) // 2:
            return False
    return True


@dataclass(frozen=True)
class BlockView:
    """Matrix-side window onto the chain/class block structure of a
    linearly connected Boolean matrix.

    ``order`` lists the vertices sorted by (component, class, id): the
    permutation under which the matrix takes its block form.  Each query
    is computed from the matrix entries and checked against the
    digraph-side answer; a disagreement raises InternalCheckError.
    """

    matrix: BoolMatrix
    digraph: Digraph
    chain: ComponentChain
    imp: ImprimitivityData
    order: tuple[int, ...]

    def block_nonzero(self, p: int, q: int, i: int, j: int) -> bool:
        """Whether block (i, j) of the (D_p rows) x (D_q columns) slab has
        any 1: rows U_i of D_p against columns U_j of D_q."""
        rows = self.imp.class_set(p, i)
        cols = self.imp.class_set(q, j)
        via_matrix = any(
            self.matrix.entry(u - 1, v - 1) for u in rows for v in cols
        )
        via_digraph = any((u, v) in self.digraph.arcs for u in rows for v in cols)
        if via_matrix != via_digraph:
            raise InternalCheckError(
                f"block ({p},{q},{i},{j}): matrix and digraph reads disagree"
            )
        return via_matrix

    def nonzero_cross_blocks(self) -> tuple[tuple[int, int, int, int], ...]:
        """All (p, p+1, i, j) with a nonzero off-diagonal block; blocks
        between non-consecutive components are zero by linear connectivity."""
        out = []
        for p in range(1, self.chain.eta):
            for i in range(1, self.imp.kappa(p) + 1):
                for j in range(1, self.imp.kappa(p + 1) + 1):
                    if self.block_nonzero(p, p + 1, i, j):
                        out.append((p, p + 1, i, j))
        return tuple(out)

    def lambda_residues(self) -> ResidueSet:
        """Matrix-side lambda set: classes of the last nontrivial component
        whose rows have a 1 in the trailing vertex's column; verified
        against the digraph-side lambda_set."""
        chain, imp = self.chain, self.imp
        p = chain.last_nontrivial
        if p is None:
            raise ValueError("every component is trivial; no reference component exists")
        if p == chain.eta:
            raise ValueError("last component is nontrivial; no trailing trivial part")
        (v,) = chain.component(p + 1)
        kappa = imp.kappa(p)
        labels = set()
        for i in range(1, kappa + 1):
            if any(self.matrix.entry(u - 1, v - 1) for u in imp.class_set(p, i)):
                labels.add(i)
        via_matrix = ResidueSet.from_class_labels(labels, kappa)
        via_digraph = lambda_set(self.digraph, chain, imp)
        if via_matrix != via_digraph:
            raise InternalCheckError("lambda set: matrix and digraph reads disagree")
        return via_matrix

    def l_residues(self, j: int) -> ResidueSet:
        """Walk-length residues from class j into the trailing vertex."""
        return l_set(self.lambda_residues(), j)


def matrix_block_view(a: BoolMatrix) -> BlockView:
    """Block coordinate map of a linearly connected Boolean matrix; raises
    the same errors as component_chain when the matrix is not in the class
    (self-loop on the diagonal, components not in a chain)."""
    d = from_matrix(a)
    chain = component_chain(d)
    imp = imprimitivity(d, chain)
    order = tuple(
        sorted(range(1, d.n + 1), key=lambda v: (*imp.class_index[v], v))
    )
    return BlockView(matrix=a, digraph=d, chain=chain, imp=imp, order=order)
