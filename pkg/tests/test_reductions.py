import itertools

import pytest

from cfconn.coloring import EdgeColoring, PairSet
from cfconn.families import complete_graph, cycle_graph, path_graph, star_graph
from cfconn.graph import GraphError, is_connected
from cfconn.reductions import (
    CnfFormula,
    PartialEdgeColoring,
    brute_force_k_colorable,
    chain_length,
    clause_pairs,
    extract_sat_assignment,
    extract_vertex_coloring,
    forward_color_subset_star,
    is_bipartite,
    is_proper_coloring,
    parse_dimacs_cnf,
    reduce_kcolor_to_subset,
    reduce_partial2_to_subset,
    reduce_subset_star_to_scfc,
    reduce_3sat_to_partial2,
    solve_3sat_bruteforce,
)
from cfconn.solve import decide_subset_scfc, solve_scfc
from cfconn.verify import verify_scfc, verify_scfc_subset

TWO_CLAUSE = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)))


def test_cnf_validation():
    with pytest.raises(GraphError):
        CnfFormula(3, ((1, 2),))
    with pytest.raises(GraphError):
        CnfFormula(2, ((1, 2, 3),))
    with pytest.raises(GraphError):
        CnfFormula(3, ((1, -1, 2),))
    with pytest.raises(GraphError):
        CnfFormula(3, ((1, 2, 3),)).check_polarity_assumption()
    TWO_CLAUSE.check_polarity_assumption()


def test_parse_dimacs():
    f = parse_dimacs_cnf("c comment\np cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    assert f == TWO_CLAUSE
    for bad in [
        "1 2 3 0\n",  # clause before header
        "p cnf 3 1\n1 2 0\n",  # arity
        "p cnf 3 1\n1 -1 2 0\n",  # tautology
        "p cnf 3 2\n1 2 3 0\n",  # count mismatch
        "p cnf 3 1\n1 2 3\n",  # unterminated
    ]:
        with pytest.raises(GraphError):
            parse_dimacs_cnf(bad)


def test_solve_3sat_bruteforce():
    assert solve_3sat_bruteforce(TWO_CLAUSE) == (False, False, True)
    unsat = CnfFormula(3, tuple(
        tuple(v if bits >> i & 1 else -v for i, v in enumerate((1, 2, 3)))
        for bits in range(8)
    ))
    assert solve_3sat_bruteforce(unsat) is None
    with pytest.raises(GraphError):
        solve_3sat_bruteforce(CnfFormula(25, ()), max_vars=20)


def test_partial_coloring_extension():
    g = path_graph(4)
    partial = PartialEdgeColoring(host=g, assigned={0: 1})
    assert partial.extended_by(EdgeColoring((2, 1, 1), 2))
    assert not partial.extended_by(EdgeColoring((1, 1, 1), 2))
    with pytest.raises(GraphError):
        PartialEdgeColoring(host=g, assigned={0: 2})
    with pytest.raises(GraphError):
        PartialEdgeColoring(host=g, assigned={9: 0})


def test_reduce_3sat_sizes():
    inst = reduce_3sat_to_partial2(TWO_CLAUSE)
    g = inst.graph
    assert g.n == 6 and g.m == 13
    assert g.m - len(inst.partial.assigned) == 3
    assert is_connected(g)
    assert len(clause_pairs(inst)) == 2


def test_reduce_3sat_equivalence_and_extraction():
    inst = reduce_3sat_to_partial2(TWO_CLAUSE)
    g = inst.graph
    cp = clause_pairs(inst)
    free = sorted(set(range(g.m)) - set(inst.partial.assigned))
    sat_models = set()
    for bits in itertools.product((0, 1), repeat=len(free)):
        assigned = dict(inst.partial.assigned)
        assigned.update(zip(free, bits))
        full = EdgeColoring(tuple(assigned[e] + 1 for e in range(g.m)), 2)
        ok = verify_scfc_subset(g, full, cp).ok
        # non-clause pairs never change the verdict
        assert ok == verify_scfc(g, full).ok
        if ok:
            assign = extract_sat_assignment(inst, full)
            assert all(
                any(assign[abs(lit) - 1] == (lit > 0) for lit in cl)
                for cl in TWO_CLAUSE.clauses
            )
            sat_models.add(assign)
    # 2^3 minus the two all-equal assignments
    assert len(sat_models) == 6


def test_extract_sat_requires_extension():
    inst = reduce_3sat_to_partial2(TWO_CLAUSE)
    with pytest.raises(GraphError):
        extract_sat_assignment(inst, EdgeColoring((1,) * inst.graph.m, 2))


def test_chain_length_is_odd():
    for n in range(2, 12):
        r = chain_length(n)
        assert r % 2 == 1 and r >= n / 2


def test_reduce_partial2_to_subset_shapes():
    g = cycle_graph(4)
    partial = PartialEdgeColoring(host=g, assigned={0: 0, 2: 1})
    inst = reduce_partial2_to_subset(g, partial)
    r = chain_length(g.n)
    # host + b1/c/b2 + one connector and one chain per colored edge
    assert inst.graph.n == g.n + 3 + 2 * (1 + r)
    assert len(inst.pairs) == 1 + len(g.vertex_pairs()) + 2 * (r + 3)


def test_reduce_partial2_equivalence_sample():
    g = cycle_graph(4)
    for assigned in [{}, {0: 0}, {0: 0, 1: 1}, {0: 0, 2: 0}, {1: 1, 3: 1}]:
        partial = PartialEdgeColoring(host=g, assigned=assigned)
        free = sorted(set(range(g.m)) - set(assigned))
        src = any(
            verify_scfc(
                g,
                EdgeColoring(
                    tuple(
                        ({**assigned, **dict(zip(free, bits))})[e] + 1
                        for e in range(g.m)
                    ),
                    2,
                ),
            ).ok
            for bits in itertools.product((0, 1), repeat=len(free))
        )
        inst = reduce_partial2_to_subset(g, partial)
        tgt = decide_subset_scfc(inst.graph, inst.pairs, 2) is not None
        assert src == tgt, f"assigned={assigned}"


def test_reduce_kcolor_shapes_and_equivalence():
    k3 = complete_graph(3)
    inst = reduce_kcolor_to_subset(k3, 3)
    assert inst.graph.n == 4 and inst.graph.m == 3
    assert len(inst.pairs) == 3
    w = decide_subset_scfc(inst.graph, inst.pairs, 3)
    assert w is not None
    vc = extract_vertex_coloring(inst, w)
    assert is_proper_coloring(k3, vc)
    # K4 is not 3-colorable
    inst4 = reduce_kcolor_to_subset(complete_graph(4), 3)
    assert decide_subset_scfc(inst4.graph, inst4.pairs, 3) is None
    assert brute_force_k_colorable(complete_graph(4), 3) is None
    with pytest.raises(GraphError):
        reduce_kcolor_to_subset(k3, 2)


def test_reduce_star_to_scfc_shapes():
    star = star_graph(3)
    inst = reduce_subset_star_to_scfc(star, PairSet([(1, 2)], star.n))
    assert inst.graph.n == 14 and inst.graph.m == 40
    assert is_bipartite(inst.graph)
    assert is_connected(inst.graph)
    with pytest.raises(GraphError):
        reduce_subset_star_to_scfc(star, PairSet([(0, 1)], star.n))  # center in a pair
    with pytest.raises(GraphError):
        reduce_subset_star_to_scfc(cycle_graph(4), PairSet([(1, 2)], 4))


def test_reduce_star_equivalence_small():
    star = star_graph(3)
    leaf_pairs = [(1, 2), (1, 3), (2, 3)]
    for r in range(4):
        for sub in itertools.combinations(leaf_pairs, r):
            p = PairSet(list(sub), star.n)
            inst = reduce_subset_star_to_scfc(star, p)
            star_side = decide_subset_scfc(star, p, 3) is not None
            assert star_side == (solve_scfc(inst.graph).value <= 3)


def test_forward_color_subset_star():
    star = star_graph(3)
    p = PairSet([(1, 2)], star.n)
    inst = reduce_subset_star_to_scfc(star, p)
    c = EdgeColoring((1, 2, 1), 3)
    full = forward_color_subset_star(inst, c)
    assert verify_scfc(inst.graph, full).ok
    assert full.colors[: star.m] == c.colors
    # a star coloring failing the pair is rejected
    with pytest.raises(GraphError):
        forward_color_subset_star(inst, EdgeColoring((1, 1, 1), 3))
