import pytest

from weaktri.gf import FieldCtx
from weaktri.linalg import (
    Mat,
    Vec,
    char_poly,
    det,
    invert,
    kernel_basis,
    rref,
    rref_solve,
    span_rows,
)

from conftest import random_invertible, random_matrix, seeded
from oracles import cofactor_char_poly


class TestRref:
    def test_identity_solve(self, gf3):
        assert rref_solve([(1, 0, 0), (0, 1, 0), (0, 0, 1)], (1, 2, 0), gf3) == (1, 2, 0)

    def test_inconsistent(self, gf3):
        assert rref_solve([(0, 0), (0, 0)], (1, 0), gf3) is None

    def test_kernel_line(self, gf3):
        kern = kernel_basis([(1, 1), (2, 2)], gf3)
        assert span_rows(kern, gf3) == span_rows([(1, 2)], gf3)

    def test_rref_canonical_under_respan(self, gf5):
        # appending random combinations keeps the span, so the RREF must not move
        rng = seeded(11)
        rows = [tuple(rng.randrange(5) for _ in range(6)) for _ in range(3)]
        base = span_rows(rows, gf5)
        for _ in range(10):
            mixed = list(rows)
            rng.shuffle(mixed)
            for _ in range(4):
                coeffs = [rng.randrange(5) for _ in range(len(rows))]
                mixed.append(
                    tuple(
                        sum(c * r[i] for c, r in zip(coeffs, rows)) % 5
                        for i in range(6)
                    )
                )
            assert span_rows(mixed, gf5) == base

    def test_pivots_strictly_increase(self, gf3):
        rows, pivots = rref([(0, 1, 2), (1, 1, 1), (2, 0, 1)], gf3)
        assert pivots == sorted(pivots)
        for row, pc in zip(rows, pivots):
            assert row[pc] == 1
            assert all(other[pc] == 0 for other in rows if other is not row)


class TestMat:
    def test_mul_identity(self, gf3):
        rng = seeded(3)
        m = random_matrix(gf3, 3, rng)
        assert m * Mat.identity(gf3, 3) == m

    def test_apply(self, gf3):
        m = Mat.from_rows(gf3, [(1, 2), (0, 1)])
        assert m.apply(Vec(gf3, (1, 1))).entries == (0, 1)

    def test_invert_round_trip(self, gf5):
        rng = seeded(5)
        for _ in range(20):
            m = random_invertible(gf5, 3, rng)
            assert m * invert(m) == Mat.identity(gf5, 3)

    def test_singular_returns_none(self, gf3):
        assert invert(Mat.zeros(gf3, 2)) is None


class TestCharPoly:
    def test_identity_2x2(self, gf3):
        # (t-1)^2 = t^2 + t + 1 over GF(3)
        assert char_poly(Mat.identity(gf3, 2)).coeffs == (1, 1, 1)

    def test_companion(self, gf3):
        companion = Mat.from_rows(gf3, [(0, 2), (1, 0)])
        assert char_poly(companion).coeffs == (1, 0, 1)

    def test_matches_cofactor_oracle(self, gf3, gf5, gf9):
        rng = seeded(17)
        fields = (gf3, gf5, gf9)
        for trial in range(150):
            field = fields[trial % 3]
            n = 2 + trial % 3
            m = random_matrix(field, n, rng)
            assert char_poly(m) == cofactor_char_poly(m)

    def test_conjugation_and_transpose_invariance(self, gf3, gf5):
        rng = seeded(23)
        for trial in range(60):
            field = (gf3, gf5)[trial % 2]
            n = 2 + trial % 3
            m = random_matrix(field, n, rng)
            p = random_invertible(field, n, rng)
            expected = char_poly(m)
            assert char_poly(p * m * invert(p)) == expected
            assert char_poly(m.transpose()) == expected

    def test_det_via_char_poly(self, gf5):
        rng = seeded(29)
        for _ in range(20):
            m = random_matrix(gf5, 3, rng)
            assert det(m) == _det_by_elimination(m)


def _det_by_elimination(m):
    F, n = m.field, m.n
    rows = [list(m.row(i)) for i in range(n)]
    acc = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            acc = F.neg(acc)
        acc = F.mul(acc, rows[c][c])
        inv = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = F.mul(rows[i][c], inv)
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[c])]
    return acc
