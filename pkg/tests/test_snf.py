import random

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors

from qtbraid.snf import smith_normal_form


def brute_invariant_factors(matrix):
    if not matrix:
        return []
    return [int(x) for x in invariant_factors(sympy.Matrix(matrix)) if x != 0]


class TestSmithNormalForm:
    def test_pinned_examples(self):
        s = smith_normal_form([[2, 0], [0, 3]])
        assert s.diag == (1, 6)
        s = smith_normal_form([[2, 4], [4, 8]])
        assert s.diag == (2, 0)
        s = smith_normal_form([[0, 0], [0, 0]])
        assert s.diag == (0, 0)
        s = smith_normal_form([], cols=3)
        assert s.diag == () and s.rank == 0

    def test_divisibility_and_sign(self):
        rng = random.Random(30)
        for _ in range(200):
            r, g = rng.randint(1, 6), rng.randint(1, 6)
            m = [[rng.randint(-9, 9) for _ in range(g)] for _ in range(r)]
            s = smith_normal_form(m)
            facs = s.invariant_factors
            assert all(d > 0 for d in facs)
            for a, b in zip(facs, facs[1:]):
                assert b % a == 0
            # zeros only trail
            nonzero = [d for d in s.diag if d]
            assert s.diag[: len(nonzero)] == tuple(nonzero)

    def test_against_sympy(self):
        rng = random.Random(31)
        for _ in range(150):
            r, g = rng.randint(0, 6), rng.randint(1, 6)
            m = [[rng.randint(-20, 20) for _ in range(g)] for _ in range(r)]
            s = smith_normal_form(m, cols=g)
            assert list(s.invariant_factors) == brute_invariant_factors(m)

    def test_transform_is_unimodular_and_consistent(self):
        rng = random.Random(32)
        for _ in range(100):
            r, g = rng.randint(1, 5), rng.randint(1, 5)
            m = [[rng.randint(-9, 9) for _ in range(g)] for _ in range(r)]
            s = smith_normal_form(m)
            det = sympy.Matrix([list(row) for row in s.right]).det()
            assert det in (1, -1)
            # every relator row must land in the lattice spanned by d_i e_i
            for row in m:
                y = s.coordinates(row)
                for c, val in enumerate(y):
                    if c < len(s.diag) and s.diag[c]:
                        assert val % s.diag[c] == 0
                    else:
                        assert val == 0

    def test_determinism(self):
        m = [[3, 1, -4], [2, -7, 1], [0, 5, 5]]
        assert smith_normal_form(m) == smith_normal_form([row[:] for row in m])

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            smith_normal_form([[1, 2], [3]])

    def test_empty_needs_cols(self):
        with pytest.raises(ValueError):
            smith_normal_form([])

    def test_big_integers_exact(self):
        big = 10**30
        s = smith_normal_form([[big, big], [0, big]])
        assert s.diag == (big, big)
