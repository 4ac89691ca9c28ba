import numpy as np
import pytest

from crc_lab.constructions import PairIndex, build_Hm
from crc_lab.errors import EnumerationGuardError, InvalidParameterError, NonAutomorphismError
from crc_lab.transitivity import (
    CosetAction,
    Permutation,
    coset_orbit_count,
    dual_low_weight_census,
    induced_pair_permutation,
    is_completely_transitive,
    preserves_code,
    symmetric_coset_generators,
    symmetric_group_generators,
    translate_preserved,
)


def test_permutation_basics():
    cycle = Permutation.from_cycles(4, (0, 1, 2, 3))
    assert cycle.order() == 4
    assert cycle.compose(cycle.inverse()) == Permutation.identity(4)
    with pytest.raises(InvalidParameterError):
        Permutation([0, 0, 1])


def test_induced_transposition():
    index = PairIndex(4)
    tau = induced_pair_permutation(4, Permutation.from_cycles(4, (0, 1)))
    assert tau(index.position(0, 1)) == index.position(0, 1)
    assert tau(index.position(2, 3)) == index.position(2, 3)
    assert tau(index.position(0, 2)) == index.position(1, 2)
    assert tau(index.position(0, 3)) == index.position(1, 3)


def test_induced_identity_and_cycle():
    assert induced_pair_permutation(6, Permutation.identity(6)) == Permutation.identity(15)
    index = PairIndex(4)
    tau = induced_pair_permutation(4, Permutation.from_cycles(4, (0, 1, 2, 3)))
    walk = [index.position(0, 1)]
    for _ in range(4):
        walk.append(tau(walk[-1]))
    assert walk == [index.position(*p) for p in [(0, 1), (1, 2), (2, 3), (0, 3), (0, 1)]]
    assert 4 % tau.order() == 0


@pytest.mark.parametrize('m', [4, 7, 10])
def test_induction_is_a_homomorphism(m):
    rng = np.random.default_rng(m)
    for _ in range(10):
        sigma = Permutation(rng.permutation(m).tolist())
        tau = Permutation(rng.permutation(m).tolist())
        assert induced_pair_permutation(m, sigma.compose(tau)) == \
            induced_pair_permutation(m, sigma).compose(induced_pair_permutation(m, tau))


def test_preserves_code(suite):
    for m in (4, 6, 8):
        for tau in symmetric_coset_generators(suite.cm(m), m):
            assert preserves_code(suite.cm(m), tau)
            assert translate_preserved(suite.cm(m), tau)
    for m in (6, 8, 10):
        assert all(preserves_code(suite.cm_union(m), tau) for tau in symmetric_coset_generators(suite.cm_union(m), m))
    index = PairIndex(4)
    swap = Permutation.from_cycles(6, (index.position(0, 1), index.position(0, 2)))
    assert not preserves_code(suite.cm(4), swap)


def test_coset_action_rejects_non_automorphisms(suite):
    index = PairIndex(4)
    swap = Permutation.from_cycles(6, (index.position(0, 1), index.position(0, 2)))
    with pytest.raises(NonAutomorphismError):
        CosetAction(suite.cm(4), suite.table('Cm', 4), [swap])


@pytest.mark.parametrize('m', [6, 9])
def test_coset_action_preserves_weight(suite, m):
    code, table = suite.cm(m), suite.table('Cm', m)
    action = CosetAction(code, table, symmetric_coset_generators(code, m))
    for index in range(2):
        images = action.syndrome_map(index)
        assert (table.weights[images] == table.weights).all()
        assert sorted(images.tolist()) == list(range(table.size))


def test_coset_action_is_an_action(suite):
    code, table = suite.cm(6), suite.table('Cm', 6)
    sigma, tau = symmetric_coset_generators(code, 6)
    action = CosetAction(code, table, [sigma, tau, sigma.compose(tau), Permutation.identity(15)])
    for s in range(table.size):
        assert action.apply(Permutation.identity(15), s) == s
        assert action.apply(sigma.compose(tau), s) == action.apply(sigma, action.apply(tau, s))


@pytest.mark.parametrize('m', range(3, 13))
def test_cm_is_completely_transitive(suite, m):
    code, table = suite.cm(m), suite.table('Cm', m)
    report = coset_orbit_count(code, table, symmetric_coset_generators(code, m))
    assert report.orbits == report.rho_plus_1 == m // 2 + 1
    assert report.ct
    assert all(len(weights) == 1 for weights in report.orbit_weights)


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_union_is_completely_transitive(suite, m):
    code, table = suite.cm_union(m), suite.table('Cm-union', m)
    assert is_completely_transitive(code, table, symmetric_coset_generators(code, m))
    assert coset_orbit_count(code, table, symmetric_coset_generators(code, m)).orbits == m // 4 + 1


def test_orbit_examples(suite):
    assert coset_orbit_count(suite.cm(6), suite.table('Cm', 6), symmetric_coset_generators(suite.cm(6), 6)).orbits == 4
    assert coset_orbit_count(suite.cm(4), suite.table('Cm', 4), symmetric_coset_generators(suite.cm(4), 4)).orbits == 3
    union8 = suite.cm_union(8)
    assert coset_orbit_count(union8, suite.table('Cm-union', 8), symmetric_coset_generators(union8, 8)).orbits == 3


def test_identity_group_is_not_transitive(suite):
    report = coset_orbit_count(suite.cm(4), suite.table('Cm', 4), [Permutation.identity(6)])
    assert report.orbits == 8
    assert not report.ct


def test_orbit_labels_do_not_depend_on_generator_order(suite):
    code, table = suite.cm(7), suite.table('Cm', 7)
    gens = symmetric_coset_generators(code, 7)
    forward = coset_orbit_count(code, table, gens)
    backward = coset_orbit_count(code, table, list(reversed(gens)))
    assert forward.labels == backward.labels
    assert forward.labels[0] == 0


def test_orbit_report_json(suite):
    payload = coset_orbit_count(suite.cm(4), suite.table('Cm', 4), symmetric_coset_generators(suite.cm(4), 4)).to_json_dict()
    assert {k: payload[k] for k in ('orbits', 'rho_plus_1', 'ct')} == {'orbits': 3, 'rho_plus_1': 3, 'ct': True}
    assert sorted(payload['orbit_sizes']) == [1, 1, 6]


@pytest.mark.parametrize('m', range(4, 11))
def test_dual_census_is_the_rows_of_hm(suite, m):
    words = dual_low_weight_census(suite.cm(m), m - 1)
    assert len(words) == m
    assert set(words) == set(build_Hm(m).row_vectors())


def test_dual_census_examples(suite):
    assert len(dual_low_weight_census(suite.cm(5), 4)) == 5
    assert dual_low_weight_census(suite.cm(6), 1) == []
    with pytest.raises(EnumerationGuardError):
        dual_low_weight_census(suite.cm(8), 7, max_redundancy=4)


def test_generators_need_matching_length(suite):
    assert len(symmetric_group_generators(5)) == 2
    with pytest.raises(InvalidParameterError):
        symmetric_coset_generators(suite.cm(5), 6)
