# Generalized polygonal numbers
#
# P_m(x) = ((m-2)x^2 - (m-4)x) / 2, with x allowed to be zero or negative.

from mgonal import eval_polygonal, is_generalized_polygonal
from mgonal.polygonal import values_up_to

# Classical pentagonal numbers come from positive x; negative x fills in the
# "generalized" ones (1, 2, 5, 7, 12, 15, ...).
print([eval_polygonal(5, x) for x in range(-4, 5)])

# Apart from 0 and 1 the smallest 12-gonal number is m-3 = 9, at x = -1.
# Every integer below m-3 therefore needs only P(0) = 0 and P(1) = 1.
print(values_up_to(12, 40))

# The inverse solves the quadratic with an integer square root.
for n in (1, 5, 9, 12, 28, 33):
    print(n, "->", is_generalized_polygonal(12, n))

# Ties (m = 4: x and -x) resolve to the positive index.
print(is_generalized_polygonal(4, 49))
