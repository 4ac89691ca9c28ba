import networkx as nx
import numpy as np
import pytest

from crc_lab.code_model import from_parity_check
from crc_lab.coset_graph import (
    MULTIGRAPH_WARNING,
    Graph,
    all_pairs_distances,
    antipodal_classes,
    antipodality_check,
    bfs_distances,
    build_coset_graph,
    check_automorphism,
    code_vertex_action,
    diameter,
    distance_regular_check,
    distance_transitive_check,
    fold,
    fold_isomorphism_check,
    halved_cube_isomorphism_check,
    is_translation_graph,
    layer_distances,
    layer_orbit_counts,
    pair_orbit_counts,
    primitivity_check,
    translation_antipodal_classes,
    translation_distance_transitive_check,
    translation_generators,
    translation_primitivity_check,
    write_dot,
    write_edge_list,
)
from crc_lab.errors import (
    DisconnectedGraphError,
    EnumerationGuardError,
    InvalidParameterError,
    LabelMismatchError,
    NonAutomorphismError,
    NotAntipodalError,
)
from crc_lab.gf2_core import BitMatrix
from crc_lab.transitivity import symmetric_coset_generators


def complete_graph(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n):
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def vertex_stabilizer(suite, family, m):
    code = suite.cm(m) if family == 'Cm' else suite.cm_union(m)
    return code_vertex_action(code, suite.table(family, m), symmetric_coset_generators(code, m))


def automorphism_generators(suite, family, m):
    return vertex_stabilizer(suite, family, m) + translation_generators(suite.graph(family, m).vertex_count.bit_length() - 1)


ALL_GRAPHS = [('Cm', m) for m in range(3, 13)] + [('Cm-union', m) for m in (6, 8, 10, 12)]


@pytest.mark.parametrize('family, m, vertices, valency, edges', [
    ('Cm', 4, 8, 6, 24),
    ('Cm-union', 6, 16, 15, 120),
    ('Cm-union', 8, 64, 28, 896),
])
def test_graph_shape(suite, family, m, vertices, valency, edges):
    g = suite.graph(family, m)
    assert g.vertex_count == vertices
    assert g.valency == valency
    assert g.edge_count == edges
    assert g.warnings == []


def test_neighbors_differ_by_a_column(suite):
    code = suite.cm(5)
    g = build_coset_graph(code)
    columns = set(code.column_syndromes)
    for v in range(g.vertex_count):
        assert {v ^ w for w in g.neighbors(v)} == columns


def test_repeated_columns_collapse_with_a_warning():
    code = from_parity_check(BitMatrix.from_lists([[1, 1, 0], [0, 0, 1]]))
    g = build_coset_graph(code)
    assert MULTIGRAPH_WARNING in g.warnings
    assert g.valency == 2
    assert g.edge_count == 4


def test_graph_guard(suite):
    with pytest.raises(EnumerationGuardError):
        build_coset_graph(suite.cm(9), max_redundancy=6)


@pytest.mark.parametrize('family, m, b, c', [
    ('Cm', 6, [15, 6, 1], [1, 6, 15]),
    ('Cm-union', 8, [28, 15], [1, 12]),
    ('Cm-union', 6, [15], [1]),
])
def test_distance_regular_arrays(suite, family, m, b, c):
    report = distance_regular_check(suite.graph(family, m))
    assert report.is_distance_regular
    assert (report.array.b, report.array.c) == (b, c)


@pytest.mark.parametrize('family, m', ALL_GRAPHS)
def test_graph_array_equals_code_profile(suite, family, m):
    report = distance_regular_check(suite.graph(family, m))
    profile = suite.profile(family, m)
    assert report.is_distance_regular
    assert (report.array.b, report.array.c) == (profile.array.b, profile.array.c)


def test_path_is_not_distance_regular():
    report = distance_regular_check(path_graph(4))
    assert not report.is_distance_regular
    assert report.violations[0].reason is not None
    assert report.to_json_dict()['drg'] is False


def test_cycle_is_distance_regular():
    cycle = Graph.from_edges(6, [(v, (v + 1) % 6) for v in range(6)])
    report = distance_regular_check(cycle)
    assert report.is_distance_regular
    assert (report.array.b, report.array.c) == ([2, 1, 1], [1, 1, 2])


@pytest.mark.parametrize('m', range(3, 13))
def test_diameters(suite, m):
    assert diameter(suite.graph('Cm', m), suite.distances('Cm', m)) == m // 2
    if m % 2 == 0 and m >= 6:
        assert diameter(suite.graph('Cm-union', m), suite.distances('Cm-union', m)) == m // 4


def test_disconnected_graph():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert bfs_distances(g, 0).tolist() == [0, 1, -1, -1]
    with pytest.raises(DisconnectedGraphError):
        diameter(g)
    with pytest.raises(DisconnectedGraphError):
        distance_regular_check(g)


def test_distance_matrix_guard():
    with pytest.raises(EnumerationGuardError):
        all_pairs_distances(path_graph(10), max_vertices=8)


@pytest.mark.parametrize('family, m', [('Cm', m) for m in range(4, 11)] + [('Cm-union', m) for m in (6, 8, 10)])
def test_distance_transitive(suite, family, m):
    g = suite.graph(family, m)
    assert distance_transitive_check(g, automorphism_generators(suite, family, m), suite.distances(family, m))


@pytest.mark.parametrize('family, m', ALL_GRAPHS)
def test_stabilizer_is_transitive_on_every_layer(suite, family, m):
    g = suite.graph(family, m)
    layers = layer_distances(g)
    counts = layer_orbit_counts(g, vertex_stabilizer(suite, family, m), layers)
    assert sorted(counts) == list(range(int(layers.max()) + 1))
    assert set(counts.values()) == {1}
    assert translation_distance_transitive_check(g, vertex_stabilizer(suite, family, m), layers)


@pytest.mark.parametrize('family, m', [('Cm', 5), ('Cm', 6), ('Cm-union', 8)])
def test_layer_orbits_agree_with_pair_orbits(suite, family, m):
    g = suite.graph(family, m)
    stabilizer = vertex_stabilizer(suite, family, m)
    layer_counts = layer_orbit_counts(g, stabilizer)
    pair_counts = pair_orbit_counts(g, automorphism_generators(suite, family, m), suite.distances(family, m))
    assert layer_counts == pair_counts

    # Without S_m the stabilizer is trivial and every layer vertex is its own orbit.
    sizes = np.bincount(layer_distances(g))
    assert layer_orbit_counts(g, []) == {i: int(size) for i, size in enumerate(sizes)}
    assert not translation_distance_transitive_check(g, [])


def test_layers_are_the_first_distance_row(suite):
    g = suite.graph('Cm', 7)
    assert np.array_equal(layer_distances(g), suite.distances('Cm', 7)[0])
    d = suite.distances('Cm', 7)
    u, v = 5, 41
    assert d[u, v] == layer_distances(g)[u ^ v]


def test_translation_graph_recognition(suite):
    assert is_translation_graph(suite.graph('Cm', 6))
    assert is_translation_graph(suite.graph('Cm-union', 8))
    assert is_translation_graph(complete_graph(16))
    assert not is_translation_graph(path_graph(4))
    cycle = Graph.from_edges(6, [(v, (v + 1) % 6) for v in range(6)])
    assert not is_translation_graph(cycle)
    octagon = Graph.from_edges(8, [(v, (v + 1) % 8) for v in range(8)])
    assert not is_translation_graph(octagon)
    with pytest.raises(InvalidParameterError):
        layer_distances(path_graph(4))
    with pytest.raises(DisconnectedGraphError):
        layer_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_translations_do_not_fix_vertex_zero(suite):
    g = suite.graph('Cm', 6)
    with pytest.raises(NonAutomorphismError, match="moves vertex 0"):
        layer_orbit_counts(g, translation_generators(5))


def test_single_source_distance_regular_check(suite):
    for family, m in [('Cm', 9), ('Cm-union', 10)]:
        g = suite.graph(family, m)
        full = distance_regular_check(g)
        rooted = distance_regular_check(g, sources=[0])
        assert rooted.is_distance_regular
        assert (rooted.array.b, rooted.array.c) == (full.array.b, full.array.c)


def test_identity_group_is_not_distance_transitive():
    g = path_graph(3)
    counts = pair_orbit_counts(g, [np.arange(3)])
    assert counts == {0: 3, 1: 4, 2: 2}
    assert not distance_transitive_check(g, [np.arange(3)])


def test_pair_orbit_guard(suite):
    g = suite.graph('Cm', 8)
    with pytest.raises(EnumerationGuardError):
        pair_orbit_counts(g, translation_generators(7), max_vertices=64)


def test_translations_are_automorphisms(suite):
    g = suite.graph('Cm-union', 8)
    for images in translation_generators(6):
        check_automorphism(g, images)


def test_non_automorphism_is_rejected():
    g = path_graph(3)
    with pytest.raises(NonAutomorphismError):
        check_automorphism(g, np.array([1, 0, 2]))
    with pytest.raises(NonAutomorphismError):
        check_automorphism(g, np.array([0, 0, 2]))


def test_primitivity(suite):
    report = primitivity_check(suite.graph('Cm', 6), suite.distances('Cm', 6))
    assert not report.primitive
    assert report.distance_graph_connected == [True, True, False]
    for m in (8, 10):
        assert primitivity_check(suite.graph('Cm-union', m), suite.distances('Cm-union', m)).primitive


@pytest.mark.parametrize('family, m', ALL_GRAPHS)
def test_translation_primitivity(suite, family, m):
    report = translation_primitivity_check(suite.graph(family, m))
    if family == 'Cm':
        # Only the antipodal matching Γ_{m/2} of an even m falls apart.
        rho = m // 2
        assert report.distance_graph_connected == [True] * (rho - 1) + [m % 2 == 1]
    else:
        assert report.primitive


@pytest.mark.parametrize('family, m', [('Cm', 6), ('Cm', 8), ('Cm-union', 8), ('Cm-union', 10)])
def test_translation_primitivity_agrees_with_distance_graphs(suite, family, m):
    g = suite.graph(family, m)
    assert translation_primitivity_check(g) == primitivity_check(g, suite.distances(family, m))


def test_antipodality(suite):
    classes = antipodal_classes(suite.graph('Cm', 8), suite.distances('Cm', 8))
    assert classes is not None
    assert len(classes) == 64
    assert all(len(members) == 2 for members in classes)
    assert not antipodality_check(suite.graph('Cm-union', 8), suite.distances('Cm-union', 8))
    assert antipodal_classes(complete_graph(16)) == [tuple(range(16))]


@pytest.mark.parametrize('m', range(4, 13, 2))
def test_even_cm_graphs_are_antipodal_double_covers(suite, m):
    g = suite.graph('Cm', m)
    assert not translation_primitivity_check(g).primitive
    classes = translation_antipodal_classes(g)
    assert classes is not None
    assert len(classes) == g.vertex_count // 2
    ones = suite.cm(m).all_ones_syndrome()
    assert all(len(members) == 2 and members[0] ^ members[1] == ones for members in classes)


@pytest.mark.parametrize('family, m', [('Cm', 5), ('Cm', 7), ('Cm-union', 8), ('Cm-union', 10), ('Cm-union', 12)])
def test_graphs_without_antipodal_classes(suite, family, m):
    assert translation_antipodal_classes(suite.graph(family, m)) is None


@pytest.mark.parametrize('family, m', [('Cm', 6), ('Cm', 8), ('Cm-union', 8), ('Cm-union', 10)])
def test_translation_antipodal_classes_agree(suite, family, m):
    g = suite.graph(family, m)
    assert translation_antipodal_classes(g) == antipodal_classes(g, suite.distances(family, m))
    assert translation_antipodal_classes(complete_graph(16)) == antipodal_classes(complete_graph(16))


@pytest.mark.parametrize('m', range(3, 13))
def test_halved_cube(suite, m):
    assert halved_cube_isomorphism_check(m, suite.graph('Cm', m))


def test_halved_cube_rejects_wrong_edges(suite):
    g = suite.graph('Cm', 6)
    # Same labels and valency, but one column is swapped for the antipode of 0.
    connection = list(g.neighbors(0)[1:]) + [int(layer_distances(g).argmax())]
    edges = {tuple(sorted((v, v ^ c))) for v in range(g.vertex_count) for c in connection}
    rewired = Graph.from_edges(g.vertex_count, sorted(edges), labels=g.labels, label_bits=g.label_bits)
    assert not halved_cube_isomorphism_check(6, rewired)


def test_halved_cube_needs_vector_labels(suite):
    with pytest.raises(LabelMismatchError):
        halved_cube_isomorphism_check(6, suite.graph('Cm-union', 6))
    with pytest.raises(LabelMismatchError):
        halved_cube_isomorphism_check(4, build_coset_graph(suite.cm(4)))


@pytest.mark.parametrize('m', [6, 8])
def test_fold_is_the_union_graph(suite, m):
    folded = fold(suite.graph('Cm', m), suite.distances('Cm', m))
    assert folded.vertex_count == 1 << (m - 2)
    assert fold_isomorphism_check(folded, suite.cm(m), suite.table('Cm', m),
                                  suite.cm_union(m), suite.graph('Cm-union', m))


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_fold_on_translation_classes(suite, m):
    g = suite.graph('Cm', m)
    folded = fold(g, classes=translation_antipodal_classes(g))
    assert folded.vertex_count == 1 << (m - 2)
    assert fold_isomorphism_check(folded, suite.cm(m), suite.table('Cm', m),
                                  suite.cm_union(m), suite.graph('Cm-union', m))


def test_fold_edge_cases(suite):
    single = fold(complete_graph(2))
    assert single.vertex_count == 1
    assert single.edge_count == 0
    with pytest.raises(NotAntipodalError):
        fold(complete_graph(16))
    with pytest.raises(NotAntipodalError):
        fold(suite.graph('Cm-union', 8), suite.distances('Cm-union', 8))


def test_edge_list_export(suite):
    text = write_edge_list(suite.graph('Cm', 4))
    lines = text.splitlines()
    assert len(lines) == 24
    assert all(int(u) < int(v) for u, v in (line.split() for line in lines))


def test_dot_export(suite):
    text = write_dot(suite.graph('Cm', 4))
    assert text.startswith('graph coset_graph {')
    assert text.count('[label=') == 8
    assert text.count(' -- ') == 24
    assert write_dot(path_graph(2)).count('label="') == 2


def test_networkx_view(suite):
    nx_graph = suite.graph('Cm-union', 6).to_networkx()
    assert nx_graph.number_of_nodes() == 16
    assert nx_graph.number_of_edges() == 120


@pytest.mark.parametrize('family, m', [('Cm', 6), ('Cm-union', 8), ('Cm', 7)])
def test_intersection_array_matches_networkx(suite, family, m):
    g = suite.graph(family, m)
    report = distance_regular_check(g)
    b, c = nx.intersection_array(g.to_networkx())
    assert (list(b), list(c)) == (report.array.b, report.array.c)


def test_networkx_agrees_on_small_graphs():
    cycle = Graph.from_edges(6, [(v, (v + 1) % 6) for v in range(6)])
    b, c = nx.intersection_array(cycle.to_networkx())
    report = distance_regular_check(cycle)
    assert (list(b), list(c)) == (report.array.b, report.array.c)
    assert not nx.is_distance_regular(path_graph(4).to_networkx())
    assert not distance_regular_check(path_graph(4)).is_distance_regular
