# Rank bounds
#
# Covering 1..m-4 needs ceil(log2(m-3)) terms; one-term completion gives a
# universal form with at most one more.

from mgonal import check_rank_lower_bound, ell, min_rank_escalation, min_rank_universal

print("m  ell  escalation  universal")
for m in range(12, 36):
    b = min_rank_universal(m)
    rng = str(b.lower) if b.exact else f"{b.lower}..{b.upper}"
    print(f"{m:<3}{ell(m):<5}{min_rank_escalation(m):<12}{rng}")

# The escalation bound is tight from below: no form of smaller rank covers 1..m-4.
print(all(check_rank_lower_bound(m, min_rank_escalation(m) - 1) for m in range(12, 40)))
