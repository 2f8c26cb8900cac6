# Weighted Stirling numbers and their integer specializations.

from fractions import Fraction

from hypersums import format_rational, r_stirling2, stirling2, weighted_stirling, whitney
from hypersums.special import weighted_stirling_explicit

# weight x = 1/2: recurrence table next to the alternating-sum formula
x = Fraction(1, 2)
for n in range(6):
    row = [weighted_stirling(n, i, x) for i in range(n + 1)]
    assert row == [weighted_stirling_explicit(n, i, x) for i in range(n + 1)]
    print(" ".join(format_rational(v).rjust(7) for v in row))

# weight 0 gives the classical Stirling numbers of the second kind
print([stirling2(6, k) for k in range(7)])

# integer weight r gives r-Stirling numbers {n+r over k+r}_r
print([r_stirling2(4, k, 2) for k in range(5)])

# r-Whitney numbers W_{m,r}(n, i) = m^{n-i} * W(n, i; r/m)
for n in range(5):
    print([whitney(2, 1, n, i) for i in range(n + 1)])

# they expand (mx + r)^n over falling factorials x(x-1)...(x-i+1)
m, r, n, x = 2, 1, 4, 5
falling = lambda x, i: 1 if i == 0 else falling(x, i - 1) * (x - i + 1)
print((m * x + r) ** n, sum(m**i * whitney(m, r, n, i) * falling(x, i) for i in range(n + 1)))
