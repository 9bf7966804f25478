"""Shared fixtures: named instances, naive oracles, hypothesis strategies.

The naive oracles here are deliberately independent of the package's
kernels: a literal triple loop and numpy's dense boolean product for
matrix multiplication, exhaustive DFS for cycle lengths, and direct walk
sweeps over the power trajectory for reachability semantics.
"""

from __future__ import annotations

import random

import numpy as np
from hypothesis import strategies as st

from compseq import (
    BoolMatrix,
    Digraph,
    ImprimitivityData,
    bool_mul,
)

# ---------------------------------------------------------------- instances


def period3_matrix() -> BoolMatrix:
    """4x4 matrix whose powers cycle with period 3 (A^4 = A) while the
    row-intersection graph stays fixed at the single edge {2,4}."""
    return BoolMatrix.from_entries(
        [
            [0, 1, 0, 1],
            [0, 0, 1, 0],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
        ]
    )


def period3_digraph() -> Digraph:
    return Digraph.from_arcs(4, [(1, 2), (1, 4), (2, 3), (3, 1), (4, 3)])


def two_chain() -> Digraph:
    """Two 2-cycles {1,2} -> {3,4} joined by the single arc 2->3."""
    return Digraph.from_arcs(4, [(1, 2), (2, 1), (3, 4), (4, 3), (2, 3)])


def cycle4_feeders(k: int) -> Digraph:
    """Directed 4-cycle on 1..4 with arcs from the first k cycle vertices
    into the trailing vertex 5.  k=2 diverges; k=4 converges."""
    arcs = [(1, 2), (2, 3), (3, 4), (4, 1)] + [(i, 5) for i in range(1, k + 1)]
    return Digraph.from_arcs(5, arcs)


def three_chain_parallel() -> Digraph:
    """Three 2-cycles chained by single arcs 2->3 and 4->5; every level of
    the skeleton is {(1,1),(2,2)}."""
    return Digraph.from_arcs(
        6, [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5), (2, 3), (4, 5)]
    )


def three_chain_complete() -> Digraph:
    """Three 2-cycles with both classes feeding each interface; every level
    of the skeleton is complete bipartite."""
    return Digraph.from_arcs(
        6,
        [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5), (1, 3), (2, 3), (3, 5), (4, 5)],
    )


def mixed_residue_chain() -> Digraph:
    """Two 2-cycles with interface pairs (1,1) and (2,1): residues 0 and 1
    differ mod kappa_2 = 2, so the limit is not a union of cliques."""
    return Digraph.from_arcs(4, [(1, 2), (2, 1), (3, 4), (4, 3), (1, 3), (2, 3)])


# ------------------------------------------------------------ naive oracles


def naive_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Literal triple-loop Boolean product."""
    ea, eb = a.to_entries(), b.to_entries()
    n = a.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if ea[i][k] and eb[k][j]:
                    out[i][j] = 1
                    break
    return BoolMatrix.from_entries(out)


def numpy_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Dense boolean product via numpy (OR-AND semiring on bool dtype)."""
    na = np.array(a.to_entries(), dtype=bool)
    nb = np.array(b.to_entries(), dtype=bool)
    return BoolMatrix.from_entries(np.dot(na, nb).astype(int).tolist())


def random_matrix(rng: random.Random, n: int, density: float) -> BoolMatrix:
    rows = tuple(
        sum(1 << j for j in range(n) if rng.random() < density) for _ in range(n)
    )
    return BoolMatrix(n, rows)


def random_digraph(
    rng: random.Random, n: int, density: float, allow_loops: bool = True
) -> Digraph:
    arcs = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if (u != v or allow_loops) and rng.random() < density:
                arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def simple_cycle_lengths(d: Digraph, vertices: frozenset[int]) -> set[int]:
    """Lengths of all simple directed cycles inside the given vertex set,
    by exhaustive DFS (small instances only)."""
    lengths: set[int] = set()
    for start in sorted(vertices):
        work = [(start, frozenset((start,)), 0)]
        while work:
            u, visited, length = work.pop()
            for w in d.out_sets[u]:
                if w == start:
                    lengths.add(length + 1)
                elif w in vertices and w > start and w not in visited:
                    work.append((w, visited | {w}, length + 1))
    return lengths


def rotate_classes(imp: ImprimitivityData, shifts: tuple[int, ...]) -> ImprimitivityData:
    """Relabel every component's classes by a rotation; the arc invariant
    is preserved, only the anchoring of U_1 changes."""
    new_classes = []
    for cls, s in zip(imp.classes, shifts):
        k = len(cls)
        new_classes.append(tuple(cls[(j + s) % k] for j in range(k)))
    return ImprimitivityData(kappas=imp.kappas, classes=tuple(new_classes))


# --------------------------------------------------------------- strategies


@st.composite
def bool_matrices(draw, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    rows = tuple(draw(st.integers(0, (1 << n) - 1)) for _ in range(n))
    return BoolMatrix(n, rows)


@st.composite
def digraphs(draw, max_n: int = 7, allow_loops: bool = True):
    n = draw(st.integers(1, max_n))
    pairs = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if allow_loops or u != v
    ]
    arcs = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    return Digraph(n, frozenset(arcs))
