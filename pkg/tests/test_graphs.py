import json

import pytest

from k4graph import (
    ElementClass,
    FlipTriple,
    IRR_ID,
    LatticeError,
    basic_cycles_regular,
    classify_element,
    construct_witness,
    discriminant_quadratic,
    exists_class,
    find_flip_triple,
    flip,
    graph_dot,
    graph_json_dict,
    inner,
    k4_equals_k3_after_swap,
    lattices_equivalent,
    make_standard,
    norm,
    parity,
    regular_subgraphs_and_F,
    rescale,
    signature,
    structural_checks,
    synthesize_k4_plus,
    verify_flip_cycle,
)
from k4graph.lattice import direct_sum, from_summands


# ---------------------------------------------------------------------------
# K3 graph
# ---------------------------------------------------------------------------

def test_k3_vertex_and_edge_counts(k3_graph):
    assert len(k3_graph.vertex_ids) == 75
    assert len(k3_graph.edges) == 126


def test_k3_terminal_vertices(k3_graph):
    terminals = sorted(v for v in k3_graph.vertex_ids if not k3_graph.out_edges(v))
    assert terminals == ["[10S]", "[8S]_I"]


def test_k3_edge_deltas(k3_graph, catalog):
    for e in k3_graph.edges:
        o, t = catalog.by_id(e.src), catalog.by_id(e.dst)
        assert t.r == o.r + 1
        if e.label.cls is ElementClass.ODD:
            assert t.d == o.d + 1 and t.vtype == "II"
        elif e.label.cls is ElementClass.WU:
            assert t.d == o.d - 1 and t.vtype == "I"
        else:
            assert t.d == o.d - 1 and t.vtype == "II"


def test_k3_wu_edge_into_8s1(k3_graph):
    e = k3_graph.edge("[7S]", ElementClass.WU)
    assert e is not None and e.dst == "[8S]_I"
    incoming = [(e.src, e.label.cls) for e in k3_graph.in_edges("[8S]_I")]
    assert incoming == [("[7S]", ElementClass.WU)]


def test_k3_out_degree_bound(k3_graph):
    for v in k3_graph.vertex_ids:
        assert len(k3_graph.out_edges(v)) <= 3


def test_k3_edge_class_census(k3_graph):
    by_cls = {}
    for e in k3_graph.edges:
        by_cls[e.label.cls] = by_cls.get(e.label.cls, 0) + 1
    assert by_cls[ElementClass.ODD] == 64
    assert by_cls[ElementClass.WU] == 14
    assert by_cls[ElementClass.EVEN_NON_WU] == 48


def test_k4_edge_class_census(k4_graph):
    g, _ = k4_graph
    wu_sources = sorted(e.src for e in g.edges if e.label.cls is ElementClass.WU)
    assert len(wu_sources) == 14
    assert "[3S]" in wu_sources and "[7S]" not in wu_sources


def test_k3_connected_no_loops(k3_graph):
    assert k3_graph.is_connected()
    assert all(e.src != e.dst for e in k3_graph.edges)


def test_k3_no_multiple_edges(k3_graph):
    seen = set()
    for e in k3_graph.edges:
        pair = frozenset((e.src, e.dst))
        assert pair not in seen
        seen.add(pair)


def test_k3_empty_to_sphere_edge(k3_graph):
    e = k3_graph.edge("[empty]", ElementClass.ODD)
    assert e is not None and e.dst == "[1S]"


def test_k3_edges_realized_by_orthogonal_complements(k3_graph, catalog):
    # dual route: the endpoint of every edge is re-derived from an explicit
    # witness vector by computing its orthogonal complement in L-(origin)
    from k4graph import discriminant_group, orthogonal_sublattice

    for e in k3_graph.edges:
        o, t = catalog.by_id(e.src), catalog.by_id(e.dst)
        v = construct_witness(o, 0, e.label.cls)
        sub = orthogonal_sublattice(o.lminus, v)
        dg = discriminant_group(sub)
        assert dg.rank == t.d and dg.is_two_periodic, (e.src, e.label.cls)
        assert parity(discriminant_quadratic(sub)) == (
            "even" if t.vtype == "I" else "odd"
        ), (e.src, e.label.cls)
        assert lattices_equivalent(sub, t.lminus) != "no", (e.src, e.label.cls)


# ---------------------------------------------------------------------------
# K4 graph
# ---------------------------------------------------------------------------

def test_k4_vertex_count(k4_graph):
    g, _ = k4_graph
    assert len(g.vertex_ids) == 75
    assert IRR_ID in g.vertex_ids
    assert "[8S]_I" not in g.vertex_ids


def test_k4_unique_irregular_edge(k4_graph):
    g, _ = k4_graph
    incoming = [(e.src, e.label.cls) for e in g.in_edges(IRR_ID)]
    assert incoming == [("[3S]", ElementClass.WU)]
    assert not g.out_edges(IRR_ID)


def test_k4_irregular_lattice(k4_graph, catalog):
    _, data = k4_graph
    neg = rescale(data[IRR_ID].mminus, -1)
    assert signature(neg) == (1, 13)
    f = discriminant_quadratic(neg)
    assert f.d == 8 and parity(f) == "even"
    assert lattices_equivalent(neg, from_summands(("U(2)", "D4", "D4", "D4"))) == "yes"
    for v in catalog:
        assert lattices_equivalent(neg, v.lplus) == "no"


def test_k4_regular_vertex_lattices(k4_graph, catalog):
    _, data = k4_graph
    for vid, entry in data.items():
        if vid == IRR_ID:
            continue
        v = catalog.by_id(vid)
        assert entry.mminus.gram == rescale(v.lplus, -1).gram


def test_k4_irregular_edge_drops_d_by_one(k4_graph, catalog):
    g, _ = k4_graph
    e = g.edge("[3S]", ElementClass.WU)
    assert e is not None and e.dst == IRR_ID
    # d drops by one along the Wu edge: d([3S]) = 9 gives d = 8 at irr
    assert catalog.by_id("[3S]").d == 9


# ---------------------------------------------------------------------------
# the isomorphism F and the one-edge swap
# ---------------------------------------------------------------------------

def test_f_is_a_bijection(k3_graph, k4_graph):
    g4, _ = k4_graph
    rep = regular_subgraphs_and_F(k3_graph, g4)
    assert rep.ok
    assert rep.vertices == 74
    assert rep.edges == 125


def test_k4_is_k3_after_swap(k3_graph, k4_graph):
    g4, _ = k4_graph
    assert k4_equals_k3_after_swap(k3_graph, g4)


# ---------------------------------------------------------------------------
# flips
# ---------------------------------------------------------------------------

def test_flip_algebra(catalog):
    v = catalog.by_id("[7S]")
    t = find_flip_triple(v, bound=2, limit=20)
    assert t is not None
    f = flip(t)
    assert norm(f.h) == 6 and norm(f.v) == -2 and inner(f.h, f.v) == 0
    f2 = flip(f)
    assert f2.h.coords == t.h.coords and f2.v.coords == t.v.coords


def test_flip_class_correspondence(catalog):
    v = catalog.by_id("[S1+8S]")
    t = find_flip_triple(v, bound=3, limit=40)
    f = flip(t)
    assert classify_element(v.lminus, f.h) is classify_element(v.lminus, t.v)
    assert classify_element(v.lminus, f.v) is classify_element(v.lminus, t.h)


def test_flip_pair_census(catalog):
    # the positive-definite and 4-divisible eigenlattices admit no pairs in
    # the bound-3 window; short rank-3 ones miss them too
    missing = [v.vid for v in catalog if find_flip_triple(v, bound=3, limit=40) is None]
    assert missing == ["[10S]", "[9S]", "[S1+9S]", "[8S]_I"]


def test_flip_triple_validation(catalog):
    v = catalog.by_id("[7S]")
    h = v.lminus.vector([2, 0, 0, 1, 0])
    bad_v = v.lminus.vector([1, 1, 1, 1, 1])  # not orthogonal to h
    assert norm(h) == 6
    with pytest.raises(LatticeError):
        FlipTriple(h, bad_v)


def test_flip_cycles_verify(catalog, k4_graph):
    g4, _ = k4_graph
    found = verified = 0
    for v in catalog:
        t = find_flip_triple(v, bound=3, limit=40)
        if t is None:
            continue
        found += 1
        rep = verify_flip_cycle(v, t, g4, catalog)
        assert rep.ok, (v.vid, rep.identities, rep.detail)
        verified += 1
    assert found == verified > 0


def test_flip_vacuous_on_positive_definite(catalog):
    assert find_flip_triple(catalog.by_id("[10S]"), bound=3, limit=10) is None


def test_flipped_triple_verifies_same_cycle(catalog, k4_graph):
    # the flip reverses the orientation of the quadrilateral, which therefore
    # verifies from the flipped triple as well
    g4, _ = k4_graph
    for vid in ("[7S]", "[S1+8S]", "[S2+5S]_I"):
        v = catalog.by_id(vid)
        t = find_flip_triple(v, bound=3, limit=40)
        assert t is not None
        assert verify_flip_cycle(v, t, g4, catalog).ok
        assert verify_flip_cycle(v, flip(t), g4, catalog).ok


# ---------------------------------------------------------------------------
# basic cycles
# ---------------------------------------------------------------------------

def test_basic_cycles(k3_graph, catalog):
    rep = basic_cycles_regular(k3_graph, catalog)
    assert rep.all_regular
    assert len(rep.cycles) == rep.cycle_rank == 52
    assert rep.incidence_rank == 52
    assert set(rep.incidence_divisors) == {1}


def test_basic_cycle_membership(k3_graph, catalog):
    rep = basic_cycles_regular(k3_graph, catalog)
    origins = {c.origin for c in rep.cycles}
    # a vertex without odd edges contributes no basic cycle
    assert "[7S]" not in origins
    assert "[10S]" not in origins
    # a vertex with odd and both kinds of even edges contributes two
    both = [c for c in rep.cycles if c.origin == "[S1+3S]"]
    assert len(both) == 2


# ---------------------------------------------------------------------------
# synthesis
# ---------------------------------------------------------------------------

def test_synthesize_all_square6_classes(catalog):
    count = 0
    for v in catalog:
        for cls in ElementClass:
            if exists_class(v, 1, cls):
                h = construct_witness(v, 1, cls)
                m = synthesize_k4_plus(v, h)
                assert signature(m) == (v.lminus.rank, 1)
                count += 1
    assert count == 126


def test_synthesize_rejects_wrong_square(catalog):
    v = catalog.by_id("[S1+9S]")
    bad = construct_witness(v, 0, ElementClass.ODD)  # square -2
    with pytest.raises(LatticeError):
        synthesize_k4_plus(v, bad)


def test_synthesize_optional_brown_check(catalog):
    # van der Blij congruence for the odd lattice M_+, opt-in only
    for vid in ("[S1+9S]", "[3S]", "[empty]"):
        v = catalog.by_id(vid)
        for cls in ElementClass:
            if exists_class(v, 1, cls):
                h = construct_witness(v, 1, cls)
                synthesize_k4_plus(v, h, check_brown=True)


def test_synthesize_w_and_h_arithmetic(catalog):
    # w = h + 2e and H = h + 3e in (-L_-) + <1>: w^2 = -2, H^2 = 3, w _|_ H
    v = catalog.by_id("[S1+9S]")
    h = construct_witness(v, 1, ElementClass.ODD)
    amb = direct_sum(rescale(v.lminus, -1), make_standard("<1>"))
    w = amb.vector(tuple(h.coords) + (2,))
    big_h = amb.vector(tuple(h.coords) + (3,))
    assert norm(w) == -6 + 4 == -2
    assert norm(big_h) == -6 + 9 == 3
    assert inner(w, big_h) == 0


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

def test_structural_checks_all_pass(k3_graph, k4_graph, catalog):
    g4, _ = k4_graph
    rep = structural_checks(k3_graph, g4, catalog)
    assert rep.ok
    assert rep.verified == 126
    assert not rep.undecidable


def test_structural_wu_edge_lattices(catalog):
    # along [7S] -> [8S]_I: L-([8S]_I) + <-2> matches L-([7S])
    a = direct_sum(catalog.by_id("[8S]_I").lminus, make_standard("<-2>"))
    assert lattices_equivalent(a, catalog.by_id("[7S]").lminus) == "yes"


def test_structural_odd_edge_lattices(catalog, k3_graph):
    e = k3_graph.edge("[S1+9S]", ElementClass.ODD)
    o, t = catalog.by_id(e.src), catalog.by_id(e.dst)
    assert lattices_equivalent(direct_sum(o.lplus, make_standard("<-2>")), t.lplus) == "yes"


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def test_json_export_schema(k3_graph, k4_graph, catalog):
    g4, _ = k4_graph
    for g in (k3_graph, g4):
        payload = graph_json_dict(g, catalog)
        assert payload["schema"] == "k4graph/1"
        assert payload["kind"] == g.kind
        assert len(payload["vertices"]) == 75
        assert len(payload["edges"]) == len(g.edges)
        assert json.loads(json.dumps(payload)) == payload
    ids = {v["id"] for v in graph_json_dict(g4, catalog)["vertices"]}
    assert IRR_ID in ids


def test_json_export_stable(k4_graph, catalog):
    g4, _ = k4_graph
    a = json.dumps(graph_json_dict(g4, catalog))
    b = json.dumps(graph_json_dict(g4, catalog))
    assert a == b


def test_dot_export(k3_graph, k4_graph, catalog):
    g4, _ = k4_graph
    dot = graph_dot(k3_graph, catalog)
    assert dot.startswith("digraph k3 {")
    assert dot.rstrip().endswith("}")
    assert '"[7S]" -> "[8S]_I" [style=bold];' in dot
    assert 'label="S4+2S"' in dot
    dot4 = graph_dot(g4, catalog)
    assert 'label="K4-irr"' in dot4
    assert "shape=box, style=filled" in dot4
    # type II circles, type I filled boxes
    assert '"[7S]" [label="7S", shape=circle];' in dot
    assert '"[8S]_I" [label="8S_I", shape=box, style=filled];' in dot
