# Which splits of a 9-unit load still let a balance read every weight,
# give or take one? (e=1: gaps of length 1 are tolerated, r=2: each part
# may be used up to twice.)

from erpart import Params, Partition, cover_gap, integer_partitions, is_er_partition, r_cover

params = Params(e=1, r=2)

every = [Partition(p) for p in integer_partitions(9)]
good = [p for p in every if is_er_partition(p, params)]
print(f"{len(good)} of {len(every)} partitions of 9 pass")

for p in every:
    if p not in good:
        rep = cover_gap(p, params)
        print(f"  {str(p):>6}  fails, first uncovered run starts at {rep.gap_start}")

# the cover itself, for one that passes and one that does not
for text in ("2+3+4", "3+3+3"):
    p = Partition.parse(text)
    reach = sorted(r_cover(p, params))
    missing = [t for t in range(2 * p.m + 1) if t not in reach]
    print(text, "misses", missing)

# Bachet: four weights reach every integer up to 40 exactly
bachet = Partition.parse("1+3+9+27")
print("1+3+9+27 under (0,2):", is_er_partition(bachet, Params(0, 2)))
