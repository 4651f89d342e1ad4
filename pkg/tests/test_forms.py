import json
from itertools import combinations_with_replacement

import pytest

from mgonal import MGonalForm, check_coverage, first_gap, represents

from oracles import naive_attainable, naive_represents


def test_form_construction():
    f = MGonalForm(12, [4, 1, 2, 1])
    assert f.coeffs == (1, 1, 2, 4)
    assert str(f) == "<1,1,2,4>_12"
    with pytest.raises(ValueError):
        MGonalForm(12, [])
    with pytest.raises(ValueError):
        MGonalForm(12, [0, 1])


def test_represents_examples():
    assert represents(MGonalForm(12, [1]), 9) == (-1,)
    assert represents(MGonalForm(12, [1, 1, 2]), 7) is None
    assert represents(MGonalForm(12, [1, 1, 1, 1]), 11) == (-1, 1, 1, 0)


def test_coverage_examples():
    assert check_coverage(MGonalForm(12, [1, 1, 2, 4]), 8).missing == ()
    assert check_coverage(MGonalForm(12, [1, 1, 2]), 8).missing == (5, 6, 7, 8)
    # generalized triangular numbers are 0, 1, 3, 6, 10, ...
    assert check_coverage(MGonalForm(3, [1]), 10).missing == (2, 4, 5, 7, 8, 9)


def test_first_gap_examples():
    assert first_gap(MGonalForm(12, [1]), 100) == 2
    assert first_gap(MGonalForm(12, [1, 1, 2, 3, 4]), 100_000) is None
    assert first_gap(MGonalForm(12, [1, 1, 2]), 100) == 5


def test_report_json():
    rep = check_coverage(MGonalForm(12, [2, 1, 1]), 8)
    assert json.dumps(rep.to_dict()) == '{"m": 12, "coeffs": [1, 1, 2], "checked_up_to": 8, "missing": [5, 6, 7, 8]}'


@pytest.mark.parametrize("m", range(12, 17))
def test_represents_agrees_with_nested_loops(m):
    for n_vars in (1, 2, 3):
        for coeffs in combinations_with_replacement(range(1, 5), n_vars):
            form = MGonalForm(m, coeffs)
            reach = naive_attainable(m, coeffs, 200)
            for n in range(1, 201):
                w = represents(form, n)
                assert (w is not None) == (n in reach), (coeffs, n)
                if w is not None:
                    assert form(w) == n


def test_represents_matches_brute_witness_existence_small():
    form = MGonalForm(13, (1, 2, 3))
    for n in range(1, 60):
        assert (represents(form, n) is None) == (naive_represents(13, form.coeffs, n) is None)


def test_small_targets_use_only_zero_one():
    for m in (12, 15, 20):
        for coeffs in combinations_with_replacement(range(1, 6), 4):
            form = MGonalForm(m, coeffs)
            for n in range(1, m - 3):
                w = represents(form, n)
                if w is not None:
                    assert set(w) <= {0, 1}


def test_coverage_is_consistent_with_represents():
    form = MGonalForm(14, (1, 1, 3))
    rep = check_coverage(form, 300)
    for n in range(1, 301):
        assert (n in rep.missing) == (represents(form, n) is None)
