"""Finite presentations, relator verification, and abelianization.

Three presented groups are built over the full-twist generators t<i>,<j>:

* pb:   the pure braid group, generators all t<i>,<j> for 1 <= i < j <= n;
* qb:   the quasitoric braid group, generators d0 and all t<i>,<j>;
* pmod: the pure mapping class group of the (n+1)-punctured sphere,
        generators all t<i>,<j> except t1,<n>.

Shared relator families:

1. commutation  t(i,j) t(k,l) = t(k,l) t(i,j) whenever the index spans are
   disjoint or nested (touching spans are excluded); each unordered pair is
   emitted once, in lexicographic order;
2. pentagonal   t(j,m-1)^-1 t(k,m-1) t(j,l-1) t(i,k-1) t(i,l-1)^-1 =
                t(i,l-1)^-1 t(i,k-1) t(j,l-1) t(k,m-1) t(j,m-1)^-1
   for every 5-subset i < j < k < l < m of 1..n.

qb adds the cyclic generator d0 with

3. d0^n = t(1,n);
4. d0 t(i,j) d0^{-1} = t(i+1,j+1)                     for j < n,
                     = t(1,n)                          for (i,j) = (1,n),
                     = t(2,n)^-1 t(1,i)^-1 t(2,i) t(i+1,n) t(1,n)
                                                      for j = n and i > 1,
   with one-strand twists t(k,k) dropped as trivial.

Every relator is stored as LHS * RHS^{-1}.  The pb and qb relators expand to
braid words and are checked against the Garside oracle; the pmod relators live
in a quotient that braid words do not represent faithfully, so only their
exponent matrix is consumed (by h1).

h1 computes the Smith normal form of the relator exponent matrix, giving the
invariant-factor decomposition of the abelianization together with the
coordinate transform, so homology classes of concrete braids are computable
(qt_class), not just the group shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .garside import is_trivial
from .purebraid import linking
from .quasitoric import factor
from .snf import SmithNormalForm, smith_normal_form
from .words import (
    Atom,
    BraidWord,
    GenWord,
    WordError,
    expand,
    gen_concat,
    gen_inverse,
)

GROUPS = ("pb", "qb", "pmod")


@dataclass(frozen=True)
class Presentation:
    group: str
    strands: int
    generators: tuple[Atom, ...]
    relators: tuple[GenWord, ...]

    def __post_init__(self):
        gens = set(self.generators)
        for rel in self.relators:
            for atom, _ in rel:
                if atom not in gens:
                    raise WordError(f"relator uses non-generator {atom}")


def _t_atom(i: int, j: int, e: int) -> GenWord:
    # one-strand twists are the trivial element
    return ((Atom.t(i, j), e),) if i < j else ()


def _span_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def _commutation_relators(pairs: list[tuple[int, int]]) -> list[GenWord]:
    out = []
    for (i, j), (k, l) in combinations(sorted(pairs), 2):
        disjoint = j < k or l < i
        nested = (k <= i and j <= l) or (i <= k and l <= j)
        if disjoint or nested:
            out.append(
                gen_concat(
                    _t_atom(i, j, 1),
                    _t_atom(k, l, 1),
                    _t_atom(i, j, -1),
                    _t_atom(k, l, -1),
                )
            )
    return out


def _pentagonal_relators(n: int) -> list[GenWord]:
    out = []
    for i, j, k, l, m in combinations(range(1, n + 1), 5):
        lhs = gen_concat(
            _t_atom(j, m - 1, -1),
            _t_atom(k, m - 1, 1),
            _t_atom(j, l - 1, 1),
            _t_atom(i, k - 1, 1),
            _t_atom(i, l - 1, -1),
        )
        rhs = gen_concat(
            _t_atom(i, l - 1, -1),
            _t_atom(i, k - 1, 1),
            _t_atom(j, l - 1, 1),
            _t_atom(k, m - 1, 1),
            _t_atom(j, m - 1, -1),
        )
        out.append(gen_concat(lhs, gen_inverse(rhs)))
    return out


def _require_n(n: int) -> None:
    if n < 3:
        raise WordError(f"presentations need n >= 3, got {n}")


def pb_relators(n: int) -> Presentation:
    """Presentation of the pure braid group on the full-twist generators."""
    _require_n(n)
    pairs = _span_pairs(n)
    relators = _commutation_relators(pairs) + _pentagonal_relators(n)
    return Presentation(
        "pb", n, tuple(Atom.t(i, j) for i, j in pairs), tuple(relators)
    )


def pmod_relators(n: int) -> Presentation:
    """Pure mapping class group of the (n+1)-punctured sphere: drop t1,<n>."""
    _require_n(n)
    pairs = [p for p in _span_pairs(n) if p != (1, n)]
    relators = _commutation_relators(pairs) + _pentagonal_relators(n)
    return Presentation(
        "pmod", n, tuple(Atom.t(i, j) for i, j in pairs), tuple(relators)
    )


def qb_relators(n: int) -> Presentation:
    """Presentation of the quasitoric braid group over d0 and the full twists."""
    _require_n(n)
    pairs = _span_pairs(n)
    d0 = ((Atom.d(0), 1),)
    d0_inv = ((Atom.d(0), -1),)
    relators = _commutation_relators(pairs) + _pentagonal_relators(n)
    relators.append(gen_concat(((Atom.d(0), n),), _t_atom(1, n, -1)))
    for i, j in pairs:
        conj = gen_concat(d0, _t_atom(i, j, 1), d0_inv)
        if j < n:
            rhs: GenWord = _t_atom(i + 1, j + 1, 1)
        elif (i, j) == (1, n):
            rhs = _t_atom(1, n, 1)
        else:
            rhs = gen_concat(
                _t_atom(2, n, -1),
                _t_atom(1, i, -1),
                _t_atom(2, i, 1),
                _t_atom(i + 1, n, 1),
                _t_atom(1, n, 1),
            )
        relators.append(gen_concat(conj, gen_inverse(rhs)))
    gens = (Atom.d(0),) + tuple(Atom.t(i, j) for i, j in pairs)
    return Presentation("qb", n, gens, tuple(relators))


def presentation(group: str, n: int) -> Presentation:
    if group == "pb":
        return pb_relators(n)
    if group == "qb":
        return qb_relators(n)
    if group == "pmod":
        return pmod_relators(n)
    raise WordError(f"unknown group {group!r}; expected one of {GROUPS}")


@dataclass(frozen=True)
class VerifyReport:
    group: str
    strands: int
    checked: int
    failures: tuple[int, ...]  # indices into Presentation.relators

    @property
    def ok(self) -> bool:
        return not self.failures


def verify(p: Presentation) -> VerifyReport:
    """Expand every relator to a braid word and test triviality with the oracle."""
    if p.group == "pmod":
        raise WordError(
            "pmod relators live in a quotient of the braid group; "
            "only their abelianized matrix is meaningful"
        )
    failures = []
    for idx, rel in enumerate(p.relators):
        if not is_trivial(expand(rel, p.strands)):
            failures.append(idx)
    return VerifyReport(p.group, p.strands, len(p.relators), tuple(failures))


# ---------------------------------------------------------------------------
# abelianization


@dataclass(frozen=True)
class ClassVector:
    """Coordinates of a homology class: free part and reduced torsion part."""

    free: tuple[int, ...]
    torsion: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.torsion) != len(self.moduli):
            raise WordError("torsion coordinates and moduli disagree")
        for v, d in zip(self.torsion, self.moduli):
            if not 0 <= v < d:
                raise WordError(f"torsion coordinate {v} not reduced mod {d}")

    def __add__(self, other: "ClassVector") -> "ClassVector":
        if self.moduli != other.moduli or len(self.free) != len(other.free):
            raise WordError("class vectors from different groups")
        return ClassVector(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple((a + b) % d for a, b, d in zip(self.torsion, other.torsion, self.moduli)),
            self.moduli,
        )

    def __neg__(self) -> "ClassVector":
        return ClassVector(
            tuple(-a for a in self.free),
            tuple((-a) % d for a, d in zip(self.torsion, self.moduli)),
            self.moduli,
        )

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


@dataclass(frozen=True)
class AbelianStructure:
    """Invariant-factor shape of H_1 plus the generator-to-coordinate transform."""

    group: str
    strands: int
    generators: tuple[Atom, ...]
    free_rank: int
    torsion: tuple[int, ...]  # invariant factors > 1, ascending
    snf: SmithNormalForm

    def class_of_exponents(self, exponents: dict[Atom, int]) -> ClassVector:
        """Canonical coordinates of a generator-exponent vector."""
        index = {atom: c for c, atom in enumerate(self.generators)}
        vec = [0] * len(self.generators)
        for atom, e in exponents.items():
            if atom not in index:
                raise WordError(f"{atom} is not a generator of this presentation")
            vec[index[atom]] += e
        y = self.snf.coordinates(vec)
        rank = self.snf.rank
        free = tuple(y[rank:])
        torsion = tuple(
            y[c] % d for c, d in enumerate(self.snf.diag[:rank]) if d > 1
        )
        return ClassVector(free, torsion, self.torsion)

    def zero(self) -> ClassVector:
        return ClassVector((0,) * self.free_rank, (0,) * len(self.torsion), self.torsion)


def h1(p: Presentation) -> AbelianStructure:
    """Abelianization of the presented group by exact Smith normal form."""
    index = {atom: c for c, atom in enumerate(p.generators)}
    matrix = []
    for rel in p.relators:
        row = [0] * len(p.generators)
        for atom, e in rel:
            row[index[atom]] += e
        matrix.append(row)
    s = smith_normal_form(matrix, cols=len(p.generators))
    torsion = tuple(d for d in s.invariant_factors if d > 1)
    free_rank = len(p.generators) - s.rank
    return AbelianStructure(p.group, p.strands, p.generators, free_rank, torsion, s)


def min_generators(a: AbelianStructure) -> int:
    """Free rank plus the number of nontrivial invariant factors."""
    return a.free_rank + len(a.torsion)


@lru_cache(maxsize=None)
def _qb_h1(n: int) -> AbelianStructure:
    return h1(qb_relators(n))


def qt_class(w: BraidWord) -> ClassVector:
    """Homology class of a quasitoric braid in canonical H_1(QB_n) coordinates.

    Factors the braid as d0^k * p, reads the linking matrix of p (its a-atom
    coordinates in the abelianized pure braid group), converts to full-twist
    coordinates by the inclusion-exclusion change of basis, and pushes the
    exponent vector through the Smith transform.
    """
    structure = _qb_h1(w.strands)
    k, p = factor(w)
    lk = linking(p)
    exponents: dict[Atom, int] = {Atom.d(0): k}

    def bump(i: int, j: int, c: int) -> None:
        if i < j and c:
            atom = Atom.t(i, j)
            exponents[atom] = exponents.get(atom, 0) + c

    n = w.strands
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            c = lk.lk(i, j)
            bump(i, j, c)
            bump(i, j - 1, -c)
            bump(i + 1, j, -c)
            bump(i + 1, j - 1, c)
    return structure.class_of_exponents(exponents)
