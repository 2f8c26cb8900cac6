# Power sums of an arithmetic progression, six ways.
#
# S_p(n) = a^p + (a+d)^p + ... + (a+nd)^p, computed by brute force and by
# every closed formula in the library.  All arithmetic is exact.

from fractions import Fraction

from hypersums import SumQuery, format_rational
from hypersums.powersum import METHODS, evaluate_all

# 1^2 + 3^2 + 5^2 + 7^2
q = SumQuery(p=2, a=1, d=2, n=3)
for name, value in evaluate_all(q).items():
    print(f"{name:15s}", "n/a" if value is None else format_rational(value))

# a rational progression: only the Stirling and Bernoulli routes apply
q = SumQuery(p=4, a=Fraction(1, 2), d=Fraction(1, 3), n=6)
print()
print("p=4, a=1/2, d=1/3, n=6")
for name, value in evaluate_all(q).items():
    print(f"{name:15s}", "n/a" if value is None else format_rational(value))

# the classical case a=0, d=1: Faulhaber sums 1^p + ... + 10^p
print()
for p in range(6):
    print(p, METHODS["bernoulli-sum"](SumQuery(p, 0, 1, 10)))
