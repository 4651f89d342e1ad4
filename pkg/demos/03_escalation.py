# Which coefficient lists cover 1..m-4?
#
# Below m-3 only P = 0 or 1 are available, so coverage of 1..m-4 is a
# subset-sum statement about the coefficients.

from collections import Counter

from mgonal import (
    MGonalForm,
    check_coverage,
    classify_prefix,
    enumerate_escalations,
    min_rank_escalation,
    satisfies_escalation,
    window_coverage,
)

m = 12
print(satisfies_escalation(m, (1, 1, 2, 4)), check_coverage(MGonalForm(m, (1, 1, 2, 4)), m - 4).missing)
print(satisfies_escalation(m, (1, 1, 2)), check_coverage(MGonalForm(m, (1, 1, 2)), m - 4).missing)

# Minimal sequences: no proper prefix already reaches m-4.
seqs = list(enumerate_escalations(m, min_rank_escalation(m) + 1, minimal=True))
print(len(seqs), "minimal sequences of rank <=", min_rank_escalation(m) + 1)

# For m >= 12 the leading triple is always one of six.
print(Counter(classify_prefix(s.coeffs) for s in seqs))

# Windows: <1,1,2> plus a weight-3 term solves the coupled system for
# A(m-2)+1, ..., A(m-2)+6 at every A tested.
print(window_coverage((1, 1, 2), 3, m, 1, 6, (0, 100)))
