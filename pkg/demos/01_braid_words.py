"""Braid words, permutations, and elementary invariants.

A braid word is a sequence of signed Artin generators; "1 2 -3" means
sigma_1 sigma_2 sigma_3^{-1}.  This script walks through the basic currency
of the package: words, the permutation homomorphism, exponent sums, and the
toric braids whose closures are torus links.
"""

from qtbraid import (
    Atom,
    closure_components,
    concat,
    expand,
    exponent_sum,
    free_reduce,
    inverse,
    parse_word,
    perm,
    toric,
)

# ---------------------------------------------------------------- words
w = parse_word(4, "1 2 -3 3 1")
print("word:          ", w)
print("free reduced:  ", free_reduce(w))
print("inverse:       ", inverse(w))
print("concat w.w^-1: ", free_reduce(concat(w, inverse(w))), "(empty = identity)")
print()

# ---------------------------------------------------- the permutation map
# perm sends a braid to where its strands end up; the cyclic braid
# delta_0 = sigma_1 ... sigma_{n-1} realizes the n-cycle 1 -> 2 -> ... -> 1.
for n in (3, 5):
    d0 = toric(n, 1)
    print(f"perm(delta_0) on {n} strands:", perm(d0))
print()

# --------------------------------------------------------- toric braids
# beta(n, m) = (sigma_1 ... sigma_{n-1})^m; its closure is the (n, m) torus
# link, with gcd(n, m) components.
for n, m in ((4, 3), (4, 2), (6, 4)):
    b = toric(n, m)
    print(
        f"beta({n},{m}): length {len(b)}, exponent sum {exponent_sum(b)}, "
        f"closure has {closure_components(b)} component(s)"
    )
print()

# ------------------------------------------------------ generator words
# Symbolic atoms expand to braid words: t<i>,<j> is the full twist of
# strands i..j, a<i>,<j> loops strand j once around strand i.
full = expand(((Atom.t(2, 4), 1),), 5)
print("t2,4 in B_5 expands to:", full)
print("it is pure:            ", perm(full).is_identity())
print("exponent sum (j-i+1)(j-i) =", exponent_sum(full))
loop = expand(((Atom.a(1, 3), 1),), 3)
print("a1,3 in B_3 expands to:", loop)
