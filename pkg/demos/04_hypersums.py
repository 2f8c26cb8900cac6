# Hyper-sums: r-fold cumulative sums of power sums.

from fractions import Fraction

from hypersums import SumQuery, hypersum_binomial, hypersum_genbernoulli, hypersum_recursive

print("r-fold sums of 0, 1, 2, 3 (p = 1):")
for r in range(4):
    print(r, [str(hypersum_recursive(SumQuery(1, 0, 1, n, r))) for n in range(6)])

q = SumQuery(p=3, a=Fraction(1, 2), d=Fraction(1, 3), n=7, r=3)
print(hypersum_recursive(q), hypersum_binomial(q), hypersum_genbernoulli(q))

# the Bernoulli closed form at r = 0 is the usual power-sum formula
for p in range(5):
    q = SumQuery(p, 0, 1, 10, 0)
    print(p, hypersum_genbernoulli(q))
