# Three exponential generating functions of the same hyper-sums, plus the
# ordinary and double generating function identities.

from hypersums import (
    bivariate_expand, hypersum_doublegf_check, hypersum_egf_direct,
    hypersum_egf_hypergeom, hypersum_egf_laurent, hypersum_ogf_check,
)
from hypersums.hypersum import hypersum_egf_laurent_parts

a, d, n, r, N = 1, 2, 3, 2, 8

direct = hypersum_egf_direct(a, d, n, r, N)
via_2f1 = hypersum_egf_hypergeom(a, d, n, r, N)
via_laurent = hypersum_egf_laurent(a, d, n, r, N)
print([str(v) for v in direct.egf_values()])
print(direct == via_2f1 == via_laurent)

# each Laurent term is singular at z = 0; the principal parts cancel exactly
combo = hypersum_egf_laurent_parts(a, d, n, r, N)
print("principal part:", [str(c) for c in combo.principal_part()])

print(hypersum_ogf_check(2, a, d, n, 10))
print(hypersum_doublegf_check(a, d, n, 6, 6).passed)

# the double generating function, expanded by division in z then t
b = bivariate_expand(n, a, d, 3, 4)
for row in b.rows:
    print([str(v) for v in row.egf_values()])
