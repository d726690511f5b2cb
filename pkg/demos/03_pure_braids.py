"""Pure braids: linking numbers, combing, and full-twist coordinates.

A pure braid returns every strand to its starting position.  Its linking
matrix counts (half) the signed crossings of each strand pair and gives the
abelianized coordinates.  Combing rewrites the braid over the looping atoms
a<i>,<j>, and a change of basis converts those to full twists t<i>,<j>.
"""

import random

from qtbraid import (
    Atom,
    equal,
    expand,
    format_generator_word,
    inverse,
    is_pure,
    parse_word,
    toric,
)
from qtbraid.purebraid import a_to_t, comb, linking, t_decompose

# ---------------------------------------------------------- linking numbers
p = expand(((Atom.t(2, 4), 1),), 5)
print("linking matrix of the full twist t2,4 in B_5 (indicator block):")
print(linking(p))
print()

# ------------------------------------------------------------------ combing
d0 = toric(3, 1)
q = inverse(d0) * parse_word(3, "1 1") * d0
print("conjugated generator: ", q)
print("combed:               ", format_generator_word(comb(q)))
print("round trip equal:     ", equal(expand(comb(q), 3), q))
print()

# --------------------------------------------- full twists also generate
gw = t_decompose(q)
print("over full twists:     ", format_generator_word(gw))
print("round trip equal:     ", equal(expand(gw, 3), q))
print()
print("the change of basis for a2,5 in B_5:", format_generator_word(a_to_t(5, 2, 5)))
print()

# ------------------------------------------------------- a random pure braid
rng = random.Random(1)
while True:
    w = parse_word(
        5, " ".join(str(rng.choice([1, -1]) * rng.randint(1, 4)) for _ in range(8))
    )
    if is_pure(w):
        break
print("random pure braid:    ", w)
print("combed:               ", format_generator_word(comb(w)))
print("linking matrix rows:  ", str(linking(w)).replace("\n", " / "))
print("round trip equal:     ", equal(expand(comb(w), 5), w))
