# Counting (e,r)-partitions three ways, then watching the counts grow.

from erpart import Params, count_all, count_all_via_series, enumerate_all, EnumConfig, phi_series
from erpart.count_all import build_table

params = Params(1, 2)

# direct listing, the DP table and the generating function agree
for m in range(1, 13):
    listed = len(enumerate_all(EnumConfig(m, params)))
    print(m, listed, count_all(m, params), count_all_via_series(m, params))

# E_k(m): how many have largest part k
table = build_table(params, 10)
for k in range(1, 7):
    print(f"k={k}", [table.E(k, m) for m in range(11)])

# the same row read off phi_k
print(phi_series(4, params, 11))

# exact big integers come for free
print(count_all(600, Params(0, 2)))
