# One more term makes it universal
#
# Start from any form covering 1..m-4, m >= 12, append the tabled weight,
# and audit the result over a long range.

from mgonal import (
    EscalationSequence,
    audit_completion,
    complete_form,
    completion_coefficient,
    explore_smaller,
    find_gamma_witness,
    first_gap,
)

for coeffs in [(1, 1, 1, 1, 4), (1, 1, 2, 4), (1, 2, 2, 4), (1, 2, 3, 7), (1, 2, 4, 8)]:
    seq = EscalationSequence(12, coeffs)
    out = completion_coefficient(seq)
    rep = audit_completion(seq, depth=50)
    print(coeffs, "+", out.appended, out.label, "->", complete_form(seq),
          f"verified up to {rep.checked_up_to}, missing {list(rep.missing)}")

# Covering 1..m-4 is not enough on its own.
form, gap = find_gamma_witness(12, 4, 1000)
print(form, "covers 1..8 but misses", gap)

# The tabled weights are not claimed minimal. An empirical look:
seq = EscalationSequence(12, (1, 1, 2, 5))
print(first_gap(seq.form, 2000), explore_smaller(seq, depth=100))
