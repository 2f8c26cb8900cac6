# Bernoulli polynomials from truncated series division, checked against the
# weighted-Stirling representation.

from fractions import Fraction

from hypersums import bernoulli_poly, bernoulli_via_stirling, evaluate, gen_bernoulli, generalized_bernoulli_poly

for n in range(6):
    print(f"B_{n}(x) =", bernoulli_poly(n))

print("B_1(0) =", evaluate(bernoulli_poly(1), 0))

for x in (Fraction(0), Fraction(1, 2), Fraction(-2, 3)):
    series_values = [evaluate(bernoulli_poly(n), x) for n in range(9)]
    stirling_values = [bernoulli_via_stirling(n, x) for n in range(9)]
    print(x, series_values == stirling_values)

# higher order: (z/(e^z-1))^alpha e^{xz}
for alpha in range(4):
    print(f"alpha={alpha}:", generalized_bernoulli_poly(alpha, 3))
print(gen_bernoulli(2, 2, 0))
