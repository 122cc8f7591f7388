"""Category transforms of point sets along a partial action.

For each point set A and each nonempty part V of the group, the wide
transform keeps the points whose V-translates land in A non-meagerly,
the tight transform those whose translates land in A comeagerly,
measured inside V cut down to the elements defined at the point.  Where
the cut is empty the tight transform holds vacuously; the bundled
instance shows that on its basepoint.
"""

from pactop import (
    delta_transform,
    example_k3,
    star_transform,
    transform_identities_report,
)
from pactop.topology import iter_bits

pa = example_k3()
names = ("x0", "v")
full_g = (1 << pa.group.order) - 1


def show(mask):
    return "{" + ",".join(names[x] for x in iter_bits(mask)) + "}"


print("A".ljust(8), "V".ljust(10), "wide".ljust(8), "tight")
for a in range(pa.space.full + 1):
    for v in (0b010, full_g):
        wide = delta_transform(pa, a, v)
        tight = star_transform(pa, a, v)
        velems = sorted(iter_bits(v))
        print(show(a).ljust(8), str(velems).ljust(10),
              show(wide).ljust(8), show(tight))

print("\nthe tight transform of the empty set is not empty: only the")
print("identity is defined at x0, so the part {1} misses its acting set")
print(f"and x0 sits in the transform vacuously: "
      f"{show(star_transform(pa, 0, 0b010))}")

rep = transform_identities_report(pa)
print(f"\nidentities (duality, union/intersection splitting, sub-part "
      f"decomposition): {'all hold' if rep.ok else rep.failures()}")
