"""Presentations of the pure and quasitoric braid groups, verified, and
their abelianizations computed by exact integer Smith normal form.

The quasitoric braid group QB_n (braids whose permutation is a power of the
n-cycle) is presented by the cyclic braid d0 and the full twists t<i>,<j>.
Every relator is machine-checked against the Garside oracle, and the Smith
normal form of the relator matrix gives

    H1(QB_n) = Z^((n-1)/2) + Z_n        (n odd)
    H1(QB_n) = Z^(n/2)     + Z_(n/2)    (n even)

so QB_n needs at least (n+1)/2 resp. (n+2)/2 generators.
"""

import math

from qtbraid import format_generator_word
from qtbraid.presentations import h1, min_generators, presentation, verify

# ------------------------------------------------------------- the relators
p = presentation("qb", 4)
print(f"QB_4: {len(p.generators)} generators, {len(p.relators)} relators, e.g.")
for rel in p.relators[-4:]:
    print("   ", format_generator_word(rel))
print()

# ----------------------------------------------------- oracle verification
for n in range(3, 8):
    for group in ("pb", "qb"):
        report = verify(presentation(group, n))
        print(
            f"verify {group} n={n}: {report.checked} relators, "
            f"{len(report.failures)} failures"
        )
print()

# ------------------------------------------------------------ abelianization
print("H1 of the quasitoric braid groups:")
for n in range(3, 13):
    a = h1(presentation("qb", n))
    torsion = " + ".join(f"Z_{d}" for d in a.torsion) or "0"
    print(
        f"  n={n:2d}: Z^{a.free_rank} + {torsion:5s}  "
        f"=> at least {min_generators(a)} generators"
    )
print()

print("H1 of the pure braid group is free of rank C(n,2):")
for n in (4, 7, 10):
    a = h1(presentation("pb", n))
    print(f"  n={n:2d}: rank {a.free_rank} = C({n},2) = {math.comb(n, 2)}")
