"""How many 2-extension bundles are there up to line-bundle twist?"""
import itertools

from glacm import Weights
from glacm.orbits import burnside_count

for p in [(2, 2, 2, 2), (3, 3, 3, 3), (2, 3, 4, 5), (4, 4, 4, 4), (6, 6, 6, 6)]:
    rep = burnside_count(Weights(p))
    fixed = {k: v for k, v in rep.fixed_counts.items() if v}
    print(p, "orbits:", rep.orbit_count, " burnside:", rep.burnside,
          " closed formula:", rep.closed_formula, " nonzero fixed counts:", fixed)

# orbits of (3,3,3,3): the even-weight-free case, only the identity fixes anything
for orb in burnside_count(Weights((3, 3, 3, 3))).orbits:
    print("  ", [".".join(map(str, v.lam)) for v in orb])

# a single orbit happens only for a handful of tuples
single = sorted({
    tuple(sorted(p)) for p in itertools.product(range(2, 8), repeat=4)
    if burnside_count(Weights(p), with_orbits=False).burnside == 1
})
print("single orbit (up to order, p_i <= 7):", single)
