"""Quasitoric forms, membership, and the cyclic/pure factorization.

An (n, m)-quasitoric word is m rows, each row running through
sigma_1 ... sigma_{n-1} in ascending index order with arbitrary signs;
the sign matrix is the defining datum.  A braid lies in the quasitoric
subgroup QB_n exactly when its permutation is a power of the n-cycle
rho, and every member factors as delta_0^k times a pure braid.

File format for sign matrices: one row per line, characters '+'/'-',
exactly n-1 per line.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    BraidWord,
    Permutation,
    WordError,
    concat,
    delta_word,
    inverse,
    perm,
)


@dataclass(frozen=True)
class QuasitoricForm:
    """Sign matrix of an (n, m)-quasitoric word: m rows of n-1 entries in {+1, -1}."""

    strands: int
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise WordError(f"need at least 2 strands, got {self.strands}")
        for row in self.rows:
            if len(row) != self.strands - 1:
                raise WordError(
                    f"row length {len(row)} != {self.strands - 1} for {self.strands} strands"
                )
            if any(e not in (1, -1) for e in row):
                raise WordError("sign matrix entries must be +1 or -1")

    @property
    def turns(self) -> int:
        return len(self.rows)


def qt_to_word(form: QuasitoricForm) -> BraidWord:
    """Concatenate the rows: row j contributes sigma_1^{e_1} ... sigma_{n-1}^{e_{n-1}}."""
    letters: list[int] = []
    for row in form.rows:
        letters.extend(e * i for i, e in enumerate(row, start=1))
    return BraidWord(form.strands, tuple(letters))


def parse_qt_form(w: BraidWord) -> QuasitoricForm | None:
    """Recognize a literally quasitoric letter sequence; None if it is not one.

    This is a syntactic check on the word, not a membership test for QB_n.
    """
    n = w.strands
    if len(w.letters) % (n - 1) != 0:
        return None
    rows = []
    for start in range(0, len(w.letters), n - 1):
        row = w.letters[start : start + n - 1]
        if any(abs(x) != i for i, x in enumerate(row, start=1)):
            return None
        rows.append(tuple(1 if x > 0 else -1 for x in row))
    return QuasitoricForm(n, tuple(rows))


def is_quasitoric(w: BraidWord) -> int | None:
    """Least k in [0, n-1] with perm(w) == rho^k, or None if w is not in QB_n."""
    target = perm(w)
    rho = Permutation.rotation(w.strands)
    cur = Permutation.identity(w.strands)
    for k in range(w.strands):
        if cur == target:
            return k
        cur = rho.compose(cur)
    return None


def factor(w: BraidWord) -> tuple[int, BraidWord]:
    """Factor a member of QB_n as delta_0^k * p with p pure; returns (k, p)."""
    k = is_quasitoric(w)
    if k is None:
        raise WordError("braid is not quasitoric: permutation is not a power of the n-cycle")
    p = concat(inverse(delta_word(w.strands, 0) ** k), w)
    return k, p


def parse_form_text(text: str, strands: int | None = None) -> QuasitoricForm:
    """Parse the '+'/'-' row file format; strands may be inferred from row width."""
    rows = []
    width = None if strands is None else strands - 1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if width is None:
            width = len(line)
        if len(line) != width:
            raise WordError(f"line {lineno}: expected {width} signs, got {len(line)}")
        row = []
        for ch in line:
            if ch == "+":
                row.append(1)
            elif ch == "-":
                row.append(-1)
            else:
                raise WordError(f"line {lineno}: bad character {ch!r}")
        rows.append(tuple(row))
    if width is None:
        if strands is None:
            raise WordError("empty form needs an explicit strand count")
        width = strands - 1
    return QuasitoricForm(width + 1, tuple(rows))


def format_form_text(form: QuasitoricForm) -> str:
    return "\n".join(
        "".join("+" if e > 0 else "-" for e in row) for row in form.rows
    )
