"""Building the limit graph from the class skeleton.

When every strong component of a linearly connected digraph is
nontrivial, the sequence always converges, and its limit has a clean
recipe.  Each component D_p splits into kappa_p cyclic classes
U_1, ..., U_kappa (every arc advances the class by one).  For large
enough m, two vertices of the same class always share m-step prey, so
each class becomes a clique.  Whether two different classes are joined
is decided by the class skeleton: an eta-partite graph on class labels
whose level-p edges say which class pairs of D_p and D_(p+1) admit
arbitrarily long walks of matching length.

The limit rule is a reachability test on that skeleton: x in U_i of D_p
and y in U_j of D_q (p <= q) are adjacent iff walking the skeleton one
level per step from (p, i) and from (q, j) lands on a common class at
some level r >= q.  The demo builds two three-component chains — one
where the skeleton keeps two parallel lanes, one where it mixes
completely — and checks both limits against the brute-force simulation.
"""

from compseq import (
    Digraph,
    ascending_reach,
    component_chain,
    cs_graph,
    imprimitivity,
    interface_pairs,
    limit_graph,
    simulate_limit,
    to_matrix,
)

PARALLEL = Digraph.from_arcs(
    6, [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5), (2, 3), (4, 5)]
)
MIXING = Digraph.from_arcs(
    6,
    [(1, 2), (2, 1), (3, 4), (4, 3), (5, 6), (6, 5), (1, 3), (2, 3), (3, 5), (4, 5)],
)


def walk_through(name: str, d: Digraph) -> None:
    chain = component_chain(d)
    imp = imprimitivity(d, chain)
    print(f"=== {name} ===")
    for p, comp in enumerate(chain.components, start=1):
        classes = [sorted(imp.class_set(p, j)) for j in range(1, imp.kappa(p) + 1)]
        print(f"  D_{p}: vertices {sorted(comp)}, kappa {imp.kappa(p)}, classes {classes}")
    for p in range(1, chain.eta):
        pairs = sorted(interface_pairs(d, chain, imp, p).pairs)
        print(f"  interface {p}->{p + 1}: class pairs {pairs}")

    sk = cs_graph(d, chain, imp)
    print("  skeleton edges:", sorted(sk.edges))
    reach = ascending_reach(sk, 1, 1)
    print("  ascending reach of class (1,1):",
          {r: sorted(s) for r, s in reach.items()})

    limit = limit_graph(d, chain, imp)
    sim = simulate_limit(to_matrix(d))
    print("  limit edges:", sorted(limit.edges))
    print("  matches simulation:", limit == sim.limit)
    print()


def main() -> None:
    walk_through("parallel lanes (single-arc interfaces)", PARALLEL)
    walk_through("complete mixing (both classes feed each interface)", MIXING)
    print("in the first chain the two lanes never meet, so each lane forms")
    print("its own clique chain; in the second, every cross-component pair")
    print("is joined — but classes inside the last component still are not,")
    print("because no level above them exists where their reaches could meet.")


if __name__ == "__main__":
    main()
