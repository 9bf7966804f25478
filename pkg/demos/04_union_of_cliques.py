"""When is the limit a disjoint union of cliques?

A graph is a disjoint union of cliques exactly when its adjacency matrix
is block diagonal with all-ones off-diagonal blocks — the tidiest
possible limit.  For an all-nontrivial chain this happens iff two
conditions hold at every interface p -> p+1:

* kappa_eta divides kappa_p (indices stay compatible down the chain), and
* all interface class pairs (k, l) agree on (k - l) mod kappa_eta
  (every crossing shifts phase by the same amount).

The per-level report of jbd_condition shows exactly where an instance
fails.  The demo also peeks at the block structure of the adjacency
matrix through matrix_block_view: sorting vertices by (component, class)
reveals the block pattern the criterion talks about.
"""

from compseq import (
    Digraph,
    component_chain,
    imprimitivity,
    jbd_condition,
    limit_graph,
    matrix_block_view,
    simulate_limit,
    to_matrix,
    union_of_cliques,
)

ALIGNED = Digraph.from_arcs(
    6, [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5), (2, 3), (4, 5)]
)
MISALIGNED = Digraph.from_arcs(4, [(1, 2), (2, 1), (3, 4), (4, 3), (1, 3), (2, 3)])


def report(name: str, d: Digraph) -> None:
    chain = component_chain(d)
    imp = imprimitivity(d, chain)
    verdict = jbd_condition(d, chain, imp)
    print(f"=== {name} ===")
    for line in verdict.levels:
        print(f"  {line}")
    print(f"  union of cliques: {verdict.holds}")

    limit = limit_graph(d, chain, imp)
    sim = simulate_limit(to_matrix(d))
    print(f"  limit edges {sorted(limit.edges)}")
    print(f"  shape check against simulation: "
          f"{union_of_cliques(sim.limit) == verdict.holds}")
    print()


def main() -> None:
    report("aligned interfaces (single lane-preserving arcs)", ALIGNED)
    report("misaligned interfaces (two residues at one interface)", MISALIGNED)

    view = matrix_block_view(to_matrix(MISALIGNED))
    print("block structure of the misaligned instance:")
    print("  vertex order by (component, class):", view.order)
    print("  nonzero cross blocks (p, p+1, i, j):", view.nonzero_cross_blocks())
    print()
    print("the two cross blocks land at different phase shifts, which is")
    print("exactly the FAIL line above: the limit glues the two 2-cycles")
    print("into one component but leaves one pair unjoined, so it is")
    print("connected without being complete — not a union of cliques.")


if __name__ == "__main__":
    main()
