# Minimal (e,r)-partitions: fewest parts possible. Their counts come from
# the weight enumerator R_n of mu-vectors, available in closed form or by
# a recursion.

from erpart import Params, canonical_minimal, count_minimal, count_minimal_brute, min_parts, mu_transform
from erpart import EnumConfig, enumerate_all
from erpart.count_min import F_series, G_series, R_series, R_series_recursive, min_bundle
from erpart.partition_core import max_sum

params = Params(1, 2)

# m = 9 needs three parts; here they are with their mu-vectors
for p in enumerate_all(EnumConfig(9, params, minimal_only=True)):
    print(p, mu_transform(p, params).mus)

# weight of each mu-vector is max_sum(2) - 9 = 17, so read R_2 at x^17
print("max_sum(2) =", max_sum(2, params))
print("F_2[17] =", F_series(2, 2, 18)[17], " G_2[4] =", G_series(2, 2, 5)[4], "(x^13 G_2 puts it at x^17)")
print("R_2[17] =", R_series(2, params, 18)[17])

# one bundle holds every series at the validity order
b = min_bundle(2, params)
print(b.R)

# closed form vs recursion vs search over a range
for m in (40, 53, 80, 100):
    print(m, min_parts(m, params), count_minimal(m, params), count_minimal(m, params, "recursive"),
          count_minimal_brute(m, params), canonical_minimal(m, params))

# for e > 2r the closed form drifts; auto dispatch uses the recursion there
wide = Params(5, 2)
print(R_series(2, wide) == R_series_recursive(2, wide))
