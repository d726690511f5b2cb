"""Left-greedy (Garside) normal form: the word-problem oracle.

Every element of the braid group has a unique factorization

    Delta^inf * f_1 * f_2 * ... * f_k

where Delta is the positive half twist, each f_i is a permutation braid
(a positive braid in which any two strands cross at most once, determined
by its permutation) that is neither trivial nor Delta, and each adjacent
pair is left-weighted: the starting set of f_{i+1} is contained in the
finishing set of f_i.  Two words are equal in the group iff their normal
forms coincide, which makes this module the equality oracle certifying
all the relator and rewriting machinery elsewhere in the package.

Negative letters are handled by sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1})
with Delta sigma_i^{-1} a permutation braid; the Delta powers are then pushed
to the front through the order-2 flip automorphism x -> Delta^{-1} x Delta.

Permutation braids are stored internally as 0-based one-line arrays under the
same convention as words.perm (the array entry at position q is the start of
the strand ending at q).  For a factor array B, sigma_{s+1} is a prefix of the
factor iff value s+1 occurs before value s in B, and a suffix iff B[s] > B[s+1].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .words import BraidWord, WordError

Factor = tuple[int, ...]

_MISS = object()


@dataclass(frozen=True)
class GarsideNormalForm:
    """Canonical form (Delta power, left-weighted permutation-braid factors).

    Factors are stored as tuples of 1-based permutation images.
    """

    strands: int
    inf: int
    factors: tuple[tuple[int, ...], ...]

    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        head = f"D^{self.inf}"
        if not self.factors:
            return head
        return " | ".join([head] + [" ".join(map(str, f)) for f in self.factors])

    def to_json(self) -> str:
        return json.dumps(
            {
                "strands": self.strands,
                "inf": self.inf,
                "factors": [list(f) for f in self.factors],
            }
        )


class _Ctx:
    """Per-strand-count tables and the pair-normalization memo."""

    def __init__(self, n: int):
        self.n = n
        self.identity: Factor = tuple(range(n))
        self.w0: Factor = tuple(range(n - 1, -1, -1))
        # positive letter sigma_{i+1} as a factor
        self.pos: list[Factor] = []
        # factor c with sigma_{i+1}^{-1} = Delta^{-1} c
        self.neg: list[Factor] = []
        for i in range(n - 1):
            t = list(range(n))
            t[i], t[i + 1] = t[i + 1], t[i]
            self.pos.append(tuple(t))
            c = list(self.w0)
            c[i], c[i + 1] = c[i + 1], c[i]
            self.neg.append(tuple(c))
        self._renorm_memo: dict[
            tuple[Factor, Factor], tuple[Factor, Factor] | None
        ] = {}

    def tau(self, x: Factor) -> Factor:
        """The flip automorphism Delta^{-1} x Delta on factor arrays."""
        n1 = self.n - 1
        return tuple(n1 - x[n1 - q] for q in range(self.n))

    def renorm_memoized(self, a: Factor, b: Factor) -> tuple[Factor, Factor] | None:
        """Left-weight the pair (a, b); None means it already was left-weighted.

        The memo stores None for unchanged pairs so the hot path in _fix_from
        is a single dict probe.
        """
        n = self.n
        A = list(a)
        B = list(b)
        pos = [0] * n
        for q, v in enumerate(B):
            pos[v] = q
        changed = False
        moving = True
        while moving:
            moving = False
            for s in range(n - 1):
                # s in starting set of B and not in finishing set of A
                if pos[s + 1] < pos[s] and A[s] < A[s + 1]:
                    A[s], A[s + 1] = A[s + 1], A[s]
                    p1, p2 = pos[s], pos[s + 1]
                    B[p1], B[p2] = B[p2], B[p1]
                    pos[s], pos[s + 1] = p2, p1
                    changed = moving = True
        result = (tuple(A), tuple(B)) if changed else None
        self._renorm_memo[(a, b)] = result
        return result

    def renorm(self, a: Factor, b: Factor) -> tuple[Factor, Factor]:
        """Left-weight the pair (a, b), transferring prefix letters of b to a."""
        key = (a, b)
        hit = self._renorm_memo.get(key, _MISS)
        if hit is _MISS:
            hit = self.renorm_memoized(a, b)
        return key if hit is None else hit

    def is_left_weighted_pair(self, a: Factor, b: Factor) -> bool:
        return self.renorm(a, b) == (a, b)


@lru_cache(maxsize=None)
def _ctx(n: int) -> _Ctx:
    return _Ctx(n)


def _fix_from(ctx: _Ctx, fs: list[Factor], j0: int) -> None:
    """Restore pairwise left-weightedness after fs[j0] was appended or changed.

    Worklist of pair positions; each effective renorm moves letters strictly
    leftward, so this terminates.  Unlike the classical single backward sweep
    it re-checks the pair to the right of every change, so correctness does
    not lean on the sweep-order lemma.
    """
    memo = ctx._renorm_memo
    identity = ctx.identity
    stack = [j0]
    while stack:
        j = stack.pop()
        if j <= 0 or j >= len(fs):
            continue
        key = (fs[j - 1], fs[j])
        res = memo.get(key, _MISS)
        if res is _MISS:
            res = ctx.renorm_memoized(*key)
        if res is None:
            continue
        a2, b2 = res
        fs[j - 1] = a2
        if b2 == identity:
            fs.pop(j)
            stack.append(j)
        else:
            fs[j] = b2
            stack.append(j + 1)
        stack.append(j - 1)


def _append(ctx: _Ctx, fs: list[Factor], c: Factor) -> None:
    if c == ctx.identity:
        return
    fs.append(c)
    _fix_from(ctx, fs, len(fs) - 1)


def _normal_factors(w: BraidWord) -> tuple[int, list[Factor]]:
    ctx = _ctx(w.strands)
    m = len(w.letters)
    dpows = [0] * m
    raw: list[Factor] = [ctx.identity] * m
    for t, x in enumerate(w.letters):
        i = abs(x) - 1
        if x > 0:
            raw[t] = ctx.pos[i]
        else:
            raw[t] = ctx.neg[i]
            dpows[t] = -1
    # push the Delta powers to the front, conjugating factors they pass over
    shift = 0
    for t in range(m - 1, -1, -1):
        if shift % 2:
            raw[t] = ctx.tau(raw[t])
        shift += dpows[t]
    fs: list[Factor] = []
    for f in raw:
        _append(ctx, fs, f)
    # absorbed half twists sit as a prefix once the list is left-weighted
    lead = 0
    while lead < len(fs) and fs[lead] == ctx.w0:
        lead += 1
    return shift + lead, fs[lead:]


def normal_form(w: BraidWord) -> GarsideNormalForm:
    """The left-greedy normal form of the braid represented by w."""
    inf, fs = _normal_factors(w)
    return GarsideNormalForm(
        w.strands, inf, tuple(tuple(v + 1 for v in f) for f in fs)
    )


def equal(u: BraidWord, v: BraidWord) -> bool:
    """True iff u and v represent the same element of the braid group."""
    if u.strands != v.strands:
        raise WordError(f"strand mismatch: {u.strands} vs {v.strands}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_trivial()


def _perm_word(x: Factor) -> list[int]:
    """A reduced positive word (1-based letters) for the permutation braid x."""
    n = len(x)
    pos = [0] * n
    for q, v in enumerate(x):
        pos[v] = q
    cur = list(x)
    out: list[int] = []
    done = False
    while not done:
        done = True
        for s in range(n - 1):
            if pos[s + 1] < pos[s]:
                out.append(s + 1)
                p1, p2 = pos[s], pos[s + 1]
                cur[p1], cur[p2] = cur[p2], cur[p1]
                pos[s], pos[s + 1] = p2, p1
                done = False
                break
    return out


def nf_word(nf: GarsideNormalForm) -> BraidWord:
    """A braid word spelling the normal form back out."""
    n = nf.strands
    ctx = _ctx(n)
    delta = _perm_word(ctx.w0)
    letters: list[int] = []
    if nf.inf >= 0:
        letters.extend(delta * nf.inf)
    else:
        letters.extend([-x for x in reversed(delta)] * (-nf.inf))
    for f in nf.factors:
        letters.extend(_perm_word(tuple(v - 1 for v in f)))
    return BraidWord(n, tuple(letters))
