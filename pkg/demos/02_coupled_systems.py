# From m-gonal forms to a pair of Diophantine equations
#
# If  sum a_k x_k = B  and  sum a_k x_k^2 = 2A + B,  then
# A(m-2) + B = sum a_k P_m(x_k)  for every m at once.

from mgonal import CoupledInstance, CriterionId, band, connect_to_form, criterion_holds, solve_coupled
from mgonal.criteria import excluded_cells, verify_criterion_report

inst = CoupledInstance((1, 1, 1, 1), (1, 1))
w = solve_coupled(inst)
print("witness", w)
for m in (12, 13, 50):
    print(f"m={m}: A(m-2)+B = {connect_to_form(m, inst, w)}")

# Cauchy-Schwarz kills some targets outright: B^2 > (sum a_k)(2A+B).
print(solve_coupled(CoupledInstance((1, 1, 1, 1), (0, 5))))

# Each quaternary form has an explicit sufficient condition. At fixed A the
# admissible B form a finite band.
for cid in CriterionId:
    print(cid.name, cid.coeffs, "band at A=10:", band(cid, 10))

print(criterion_holds(CriterionId.C1124, 1, 4), criterion_holds(CriterionId.C1124, 2, 4))

# Sweep: every predicate-true cell must be solvable.
rep = verify_criterion_report(CriterionId.C1124, 100)
print(rep["cells_checked"], "cells,", len(rep["counterexamples"]), "counterexamples")

# The conditions are one-sided. Plenty of excluded cells are solvable anyway.
obs = excluded_cells(CriterionId.C1124, 30)
print(len(obs["solvable"]), "excluded but solvable;", len(obs["unsolvable"]), "excluded and unsolvable")
