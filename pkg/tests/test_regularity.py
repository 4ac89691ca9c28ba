import pytest

from crc_lab.code_model import build_coset_table, extend_with_parity
from crc_lab.constructions import closed_form_Cm, closed_form_Cm_union
from crc_lab.errors import InvalidParameterError, UnionNotRegularError
from crc_lab.regularity import (
    IntersectionArray,
    compare_levels,
    intersection_profile,
    inverse_array,
    union_array,
    union_array_levels,
    verify_inverse_array,
)


def array(b, c):
    return IntersectionArray(rho=len(b), b=list(b), c=list(c), n=b[0])


@pytest.mark.parametrize('m', range(3, 13))
def test_cm_arrays_match_closed_form(suite, m):
    report = suite.profile('Cm', m)
    assert report.is_completely_regular
    assert report.violations == []
    assert report.array == closed_form_Cm(m).array
    assert report.array.b[0] == suite.cm(m).n
    assert report.array.c[0] == 1
    assert report.array.is_valid


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_union_arrays_match_both_predictions(suite, m):
    report = suite.profile('Cm-union', m)
    assert report.is_completely_regular
    assert report.array == closed_form_Cm_union(m).array
    assert report.array == union_array(closed_form_Cm(m).array)


def test_profile_examples(suite):
    assert suite.profile('Cm', 6).array == array([15, 6, 1], [1, 6, 15])
    assert suite.profile('Cm-union', 8).array == array([28, 15], [1, 12])


def test_as_printed_odd_line_is_detected(suite):
    # C^(6) and C^(10) have odd covering radius; the printed top-level rule keeps b != 0.
    for m in (6, 10):
        measured = suite.profile('Cm-union', m).array
        levels = union_array_levels(closed_form_Cm(m).array, 'as_printed')
        assert compare_levels(measured, levels)
        with pytest.raises(UnionNotRegularError):
            union_array(closed_form_Cm(m).array, 'as_printed')
    # Even covering radius never reaches that line.
    measured = suite.profile('Cm-union', 8).array
    assert compare_levels(measured, union_array_levels(closed_form_Cm(8).array, 'as_printed')) == []


def test_union_array_examples():
    assert union_array(array([28, 15, 6, 1], [1, 6, 15, 28])) == array([28, 15], [1, 12])
    assert union_array(array([45, 28, 15, 6, 1], [1, 6, 15, 28, 45])) == array([45, 28], [1, 6])
    assert union_array(array([15, 6, 1], [1, 6, 15])) == array([15], [1])


def test_union_array_rejects_incompatible_arrays():
    with pytest.raises(UnionNotRegularError, match="union not completely regular"):
        union_array(array([10, 3], [1, 6]))


def test_inverse_array_examples():
    c6 = array([15, 6, 1], [1, 6, 15])
    assert inverse_array(c6) == c6
    odd = IntersectionArray(rho=2, b=[10, 3], c=[1, 6], n=10)
    inverse = inverse_array(odd)
    assert (inverse.b, inverse.c) == ([6, 1], [3, 10])
    assert inverse_array(inverse) == odd


@pytest.mark.parametrize('m', [6, 8, 10, 12])
def test_verify_inverse_array(suite, m):
    assert verify_inverse_array(suite.cm(m), suite.table('Cm', m))


def test_verify_inverse_array_needs_nonantipodal(suite):
    with pytest.raises(InvalidParameterError):
        verify_inverse_array(suite.cm(5), suite.table('Cm', 5))


@pytest.mark.parametrize('m', [8, 10])
def test_extension_is_not_completely_regular(suite, m):
    extended = extend_with_parity(suite.cm_union(m))
    report = intersection_profile(extended, build_coset_table(extended))
    assert not report.is_completely_regular
    assert report.violations
    assert report.violation_count >= len(report.violations)


def test_extension_of_hamming_code_is_completely_regular(suite):
    extended = extend_with_parity(suite.cm_union(6))
    report = intersection_profile(extended, build_coset_table(extended))
    assert report.is_completely_regular
    assert report.array == IntersectionArray(rho=2, b=[16, 15], c=[1, 16], n=16)


def test_violation_cap(suite):
    extended = extend_with_parity(suite.cm_union(8))
    report = intersection_profile(extended, build_coset_table(extended), violation_cap=1)
    assert len(report.violations) == 1
    assert report.violation_count > 1


def test_array_invariants():
    bad = IntersectionArray(rho=2, b=[3, 0], c=[1, 4], n=3)
    problems = bad.violations()
    assert any('b_1' in p for p in problems)
    assert any('a_2' in p for p in problems)
    assert not bad.is_valid
    assert str(array([28, 15], [1, 12])) == '(28,15; 1,12)'


def test_report_json_shape(suite):
    payload = suite.profile('Cm', 4).to_json_dict()
    assert list(payload) == ['cr', 'rho', 'b', 'c', 'violations']
    assert payload['b'] == [6, 1] and payload['c'] == [1, 6]
