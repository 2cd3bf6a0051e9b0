from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kronthick.errors import PreconditionError
from kronthick.graphs import (
    Family,
    Graph,
    VertexLabel,
    bipartition,
    components,
    edge,
    graph_union,
    identify_complete_bipartite,
    induced_subgraph,
    is_triangle_free,
    make_complete,
    make_complete_bipartite,
    make_complete_tripartite,
    make_cycle,
    make_path,
    remove_edges,
    sort_edges,
)
from kronthick.planarity import is_planar
from kronthick.products import kronecker_product, times_k2

# ============================================================
# Generators
# ============================================================


def test_complete_sizes():
    assert make_complete(5).num_edges == 10
    assert make_complete(1).num_edges == 0
    assert make_complete(1).num_vertices == 1


def test_complete_k4_planar():
    assert is_planar(make_complete(4)).planar


def test_complete_bipartite_sizes():
    assert make_complete_bipartite(4, 4).num_edges == 16
    k11 = make_complete_bipartite(1, 1)
    assert k11.num_edges == 1 and k11.num_vertices == 2


def test_complete_bipartite_k33_nonplanar():
    assert not is_planar(make_complete_bipartite(3, 3)).planar


def test_complete_tripartite_sizes():
    triangle = make_complete_tripartite(1, 1, 1)
    assert triangle.num_vertices == 3 and triangle.num_edges == 3
    assert make_complete_tripartite(3, 3, 3).num_edges == 27
    assert make_complete_tripartite(2, 3, 4).num_edges == 26


def test_path_cycle_shapes():
    p = make_path(3)
    assert p.num_vertices == 3 and p.num_edges == 2
    c = make_cycle(6)
    assert c.num_vertices == 6 and c.num_edges == 6
    assert all(c.degree(v) == 2 for v in c.vertices)


def test_generators_reject_bad_sizes():
    with pytest.raises(Exception):
        make_complete(0)
    with pytest.raises(Exception):
        make_cycle(2)


# ============================================================
# Graph structure
# ============================================================


def test_edge_is_unordered():
    a = VertexLabel(Family.PLAIN, 1)
    b = VertexLabel(Family.PLAIN, 2)
    assert edge(a, b) == edge(b, a)


def test_edge_rejects_loops():
    a = VertexLabel(Family.PLAIN, 1)
    with pytest.raises(Exception):
        edge(a, a)


def test_graph_rejects_dangling_edges():
    a = VertexLabel(Family.PLAIN, 1)
    b = VertexLabel(Family.PLAIN, 2)
    with pytest.raises(PreconditionError):
        Graph([a], [(a, b)])


def test_graph_equality_is_by_content():
    g1 = make_complete(4)
    g2 = Graph(g1.vertices, [tuple(e) for e in reversed(g1.edges)])
    assert g1 == g2
    assert hash(g1) == hash(g2)


def test_vertex_and_edge_order_deterministic():
    g = make_complete_bipartite(3, 4)
    again = Graph(list(reversed(g.vertices)), list(reversed(g.edges)))
    assert g.vertices == again.vertices
    assert g.edges == again.edges
    assert g.edges == tuple(sort_edges(g.edges))


# ============================================================
# Union, removal, induced subgraphs
# ============================================================


def test_union_identity_and_idempotence():
    a = make_complete(4)
    empty = Graph(a.vertices, [])
    assert graph_union(a, empty) == a
    assert graph_union(a, a) == a


def test_union_is_commutative():
    a = make_path(4)
    b = make_cycle(5)
    assert graph_union(a, b) == graph_union(b, a)


def test_remove_all_edges():
    g = make_complete(5)
    assert remove_edges(g, g.edges).num_edges == 0


def test_remove_missing_edge_raises():
    g = make_path(3)
    k5 = make_complete(5)
    missing = [e for e in k5.edges if e not in g.edge_set][0]
    with pytest.raises(Exception):
        remove_edges(g, [missing])


def test_crown_graph_from_k44():
    k44 = make_complete_bipartite(4, 4)
    left = sorted(v for v in k44.vertices if v.family == Family.U)
    right = sorted(v for v in k44.vertices if v.family == Family.V)
    matching = [edge(a, b) for a, b in zip(left, right)]
    crown = remove_edges(k44, matching)
    assert crown.num_edges == 12
    assert all(crown.degree(v) == 3 for v in crown.vertices)
    assert is_planar(crown).planar


def test_induced_subgraph():
    g = make_complete(6)
    keep = set(g.vertices[:4])
    sub = induced_subgraph(g, keep)
    assert sub == make_complete(4)


# ============================================================
# Predicates and decompositions of the vertex set
# ============================================================


def test_triangle_free_predicate():
    assert is_triangle_free(make_complete_bipartite(3, 5))
    assert not is_triangle_free(make_complete(3))
    assert is_triangle_free(kronecker_product(make_complete(5), make_complete(2)))


def test_components_connected_graph():
    g = make_cycle(7)
    assert components(g) == [g]


def test_components_k2_times_k2():
    comps = components(times_k2(make_complete(2)))
    assert len(comps) == 2
    assert all(c.num_edges == 1 for c in comps)


def test_components_of_bipartite_product():
    prod = kronecker_product(
        make_complete_bipartite(2, 3), make_complete_bipartite(1, 2)
    )
    assert len(components(prod)) == 2


def test_bipartition():
    g = make_complete_bipartite(2, 5)
    parts = bipartition(g)
    assert parts is not None
    assert sorted(map(len, parts)) == [2, 5]
    assert bipartition(make_complete(3)) is None


def test_identify_complete_bipartite():
    assert identify_complete_bipartite(make_complete_bipartite(2, 6)) == (2, 6)
    assert identify_complete_bipartite(make_cycle(6)) is None
    prod = kronecker_product(
        make_complete_bipartite(2, 3), make_complete_bipartite(1, 2)
    )
    found = sorted(
        tuple(sorted(identify_complete_bipartite(c))) for c in components(prod)
    )
    assert found == [(2, 6), (3, 4)]


# ============================================================
# Properties
# ============================================================


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=7))
    verts = [VertexLabel(Family.PLAIN, i) for i in range(1, n + 1)]
    pairs = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1 :]]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(verts, picked)


@given(small_graphs(), small_graphs())
def test_union_covers_both(a: Graph, b: Graph):
    u = graph_union(a, b)
    assert a.edge_set <= u.edge_set
    assert b.edge_set <= u.edge_set
    assert u.edge_set == a.edge_set | b.edge_set


@given(small_graphs())
def test_components_partition_vertices(g: Graph):
    comps = components(g)
    seen: list = []
    for c in comps:
        seen.extend(c.vertices)
    assert sorted(seen, key=lambda v: v.sort_key) == list(g.vertices)
    assert sum(c.num_edges for c in comps) == g.num_edges


@given(small_graphs())
def test_remove_then_union_roundtrip(g: Graph):
    half = list(g.edges)[: g.num_edges // 2]
    rest = remove_edges(g, half)
    again = graph_union(rest, Graph(g.vertices, half))
    assert again == g
