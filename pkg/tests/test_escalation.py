import random
from itertools import combinations_with_replacement

import pytest

from mgonal import (
    EscalationSequence,
    MGonalForm,
    check_coverage,
    classify_prefix,
    coverage_equivalence,
    enumerate_escalations,
    propagate_run,
    satisfies_escalation,
    window_coverage,
)
from mgonal.forms import attainable_bits
from mgonal.escalation import PREFIX_TRIPLES

from oracles import naive_attainable, subset_sums


def test_satisfies_examples():
    assert satisfies_escalation(12, (1, 1, 2, 4))
    assert not satisfies_escalation(12, (1, 1, 2))
    assert not satisfies_escalation(12, (1, 3, 4, 4))
    assert not satisfies_escalation(12, (2, 2, 2, 2))


def test_coverage_equivalence_examples():
    assert coverage_equivalence(12, (1, 1, 2, 4))
    assert coverage_equivalence(12, (1, 2, 2, 4))
    assert not coverage_equivalence(12, (1, 1, 1, 1))
    with pytest.raises(ValueError):
        coverage_equivalence(7, (1, 1))


@pytest.mark.parametrize("m", [12, 17, 24])
def test_equivalence_against_subset_sums(m):
    for n in range(1, 5):
        for coeffs in combinations_with_replacement(range(1, 17), n):
            by_sums = set(range(1, m - 3)) <= subset_sums(coeffs)
            assert satisfies_escalation(m, coeffs) == by_sums
            assert check_coverage(MGonalForm(m, coeffs), m - 4).complete == by_sums


def test_enumeration_examples():
    seqs = [s.coeffs for s in enumerate_escalations(12, 4)]
    assert (1, 1, 2, 4) in seqs and (1, 2, 4, 8) in seqs
    assert (1, 1, 1, 1) not in seqs
    assert list(enumerate_escalations(12, 3)) == []


def test_enumeration_matches_brute_filter():
    got = [s.coeffs for s in enumerate_escalations(12, 4)]
    brute = [c for c in combinations_with_replacement(range(1, 9), 4) if satisfies_escalation(12, c)]
    assert got == sorted(got) and len(set(got)) == len(got)
    assert set(got) == set(brute) and len(got) == len(brute)


def test_enumeration_brute_filter_all_lengths():
    m, rank = 14, 5
    got = [s.coeffs for s in enumerate_escalations(m, rank)]
    brute = [
        c for n in range(1, rank + 1)
        for c in combinations_with_replacement(range(1, 2 ** (rank - 1) + 1), n)
        if satisfies_escalation(m, c)
    ]
    assert sorted(got) == sorted(brute) == got


def test_minimal_enumeration():
    seqs = list(enumerate_escalations(20, 6, minimal=True))
    assert seqs and all(s.minimal for s in seqs)
    full = {s.coeffs for s in enumerate_escalations(20, 6) if s.minimal}
    assert {s.coeffs for s in seqs} == full


@pytest.mark.parametrize("m", range(12, 25))
def test_triples_are_exhaustive(m):
    for s in enumerate_escalations(m, 6, minimal=True):
        assert classify_prefix(s.coeffs) in PREFIX_TRIPLES


def test_classify_examples():
    assert classify_prefix((1, 1, 2, 4)) == (1, 1, 2)
    assert classify_prefix((1, 2, 4, 8)) == (1, 2, 4)
    with pytest.raises(ValueError):
        classify_prefix((1, 3, 4))
    with pytest.raises(ValueError):
        classify_prefix((1, 1))


def test_sequence_validation():
    with pytest.raises(ValueError):
        EscalationSequence(12, (1, 1, 2))
    with pytest.raises(ValueError):
        EscalationSequence(12, (4, 2, 1, 1))


def _values(m, coeffs, top):
    bits = attainable_bits(MGonalForm(m, coeffs), top)
    return {i for i in range(top + 1) if bits >> i & 1}


def test_propagate_examples():
    assert propagate_run(_values(12, (1, 1, 2), 60), (4,), 12, 20)
    assert propagate_run(set(range(40, 60)), (), 12, 40)
    assert propagate_run(_values(13, (1, 1, 2), 80), (4, 4), 13, 30)


def test_propagate_detects_failure():
    assert not propagate_run({20}, (1,), 12, 20)


def test_propagate_randomized():
    rng = random.Random(2024)
    done = 0
    while done < 200:
        m = rng.randint(12, 20)
        seqs = list(enumerate_escalations(m, 5, minimal=True))
        coeffs = rng.choice(seqs).coeffs
        i = rng.randint(1, len(coeffs))
        n = rng.randint(1, 500)
        head = sum(coeffs[:i])
        g = set(range(n, n + head + 1)) | {rng.randint(0, 600) for _ in range(5)}
        assert propagate_run(g, coeffs[i:], m, n), (m, coeffs, i, n)
        done += 1


def test_window_examples():
    assert window_coverage((1, 1, 1), 2, 12, 1, 4, (0, 50)) == []
    assert window_coverage((1, 1, 2), 3, 12, 1, 6, (0, 50)) == []
    assert window_coverage((1, 1, 1), 2, 12, 1, 4, (0, 0)) == []


def test_window_cells_are_real_representations():
    # a covered cell is a genuine representation of A(m-2)+B0+offset
    m = 12
    reach = naive_attainable(m, (1, 1, 2, 3), 6 * (m - 2) + 7)
    for a in range(6):
        for off in range(6):
            assert a * (m - 2) + 1 + off in reach
