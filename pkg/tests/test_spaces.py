import itertools

import pytest

from weaktri.errors import BudgetExceededError, SpaceFileError
from weaktri.linalg import Mat, invert
from weaktri.spaces import MatSpace, format_spacefile, parse_spacefile

from conftest import full_space, random_invertible, random_matrix, seeded, triangular_space


def unit(field, n, i, j):
    return Mat.unit(field, n, i, j)


class TestFromSpan:
    def test_canonicalizes_dependencies(self, gf3):
        e11 = unit(gf3, 2, 0, 0)
        mixed = e11 + unit(gf3, 2, 0, 1)
        space = MatSpace.from_span([e11, mixed])
        assert space.dim == 2
        assert space.basis == (e11, unit(gf3, 2, 0, 1))

    def test_empty_span(self, gf3):
        space = MatSpace.from_span([], field=gf3, n=2)
        assert space.dim == 0

    def test_noisy_respan_of_triangulars(self, gf3):
        rng = seeded(7)
        t2 = triangular_space(gf3, 2)
        mats = []
        for _ in range(6):
            coeffs = [rng.randrange(3) for _ in range(3)]
            mats.append(t2.combination(coeffs))
        mats.extend(t2.basis)
        assert MatSpace.from_span(mats) == t2

    def test_mixed_fields_rejected(self, gf3, gf5):
        with pytest.raises(ValueError):
            MatSpace.from_span([unit(gf3, 2, 0, 0), unit(gf5, 2, 0, 0)])

    def test_canonical_independent_of_spanning_set(self, gf5):
        rng = seeded(13)
        for _ in range(15):
            mats = [random_matrix(gf5, 2, rng) for _ in range(3)]
            space = MatSpace.from_span(mats, field=gf5, n=2)
            respan = [
                space.combination([rng.randrange(5) for _ in range(space.dim)])
                for _ in range(6)
            ] + list(space.basis)
            assert MatSpace.from_span(respan, field=gf5, n=2) == space


class TestMembership:
    def test_triangular_contains(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert t2.contains(unit(gf3, 2, 0, 1))
        assert not t2.contains(unit(gf3, 2, 1, 0))

    def test_scalar_line(self, gf3):
        line = MatSpace.from_span([Mat.identity(gf3, 2)])
        assert line.contains(Mat.identity(gf3, 2).scale(2))

    def test_coords_round_trip(self, gf5):
        rng = seeded(19)
        space = MatSpace.from_span([random_matrix(gf5, 3, rng) for _ in range(4)])
        for _ in range(10):
            coeffs = tuple(rng.randrange(5) for _ in range(space.dim))
            assert space.coords_of(space.combination(coeffs)) == coeffs


class TestEnumeration:
    def test_counts_and_distinctness(self, gf3):
        space = MatSpace.from_span([unit(gf3, 2, 0, 0), unit(gf3, 2, 1, 1)])
        elements = list(space.enumerate_elements())
        assert len(elements) == 9
        assert len(set(elements)) == 9

    def test_zero_space_yields_zero(self, gf3):
        space = MatSpace.from_span([], field=gf3, n=2)
        assert list(space.enumerate_elements()) == [Mat.zeros(gf3, 2)]

    def test_triangulars_all_triangular(self, gf3):
        t2 = triangular_space(gf3, 2)
        elements = list(t2.enumerate_elements())
        assert len(elements) == 27
        assert all(m.is_upper_triangular() for m in elements)

    def test_lexicographic_order(self, gf3):
        space = MatSpace.from_span([unit(gf3, 2, 0, 0), unit(gf3, 2, 1, 1)])
        seen = [space.coords_of(m) for m in space.enumerate_elements()]
        assert seen == sorted(seen)

    def test_budget_guard(self, gf3):
        space = full_space(gf3, 2)
        with pytest.raises(BudgetExceededError):
            list(space.enumerate_elements(budget=10))


class TestConjugation:
    def test_identity_fixes(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert t2.conjugate(Mat.identity(gf3, 2)) == t2

    def test_swap_gives_lower_triangular(self, gf3):
        t2 = triangular_space(gf3, 2)
        swap = Mat.from_rows(gf3, [(0, 1), (1, 0)])
        lower = MatSpace.from_span(
            [unit(gf3, 2, 0, 0), unit(gf3, 2, 1, 0), unit(gf3, 2, 1, 1)]
        )
        assert t2.conjugate(swap) == lower

    def test_round_trip_random(self, gf5):
        rng = seeded(31)
        for _ in range(25):
            space = MatSpace.from_span([random_matrix(gf5, 3, rng) for _ in range(3)])
            p = random_invertible(gf5, 3, rng)
            assert space.conjugate(p).conjugate(invert(p)) == space
            assert space.conjugate(p).dim == space.dim

    def test_singular_rejected(self, gf3):
        with pytest.raises(ValueError):
            triangular_space(gf3, 2).conjugate(Mat.zeros(gf3, 2))


class TestTransposeDual:
    def test_triangulars_self_dual(self, gf3):
        for n in (2, 3, 4):
            t = triangular_space(gf3, n)
            assert t.transpose_dual() == t

    def test_single_unit(self, gf3):
        span = MatSpace.from_span([unit(gf3, 2, 0, 1)])
        assert span.transpose_dual() == span

    def test_involution_random(self, gf3):
        rng = seeded(37)
        for _ in range(30):
            space = MatSpace.from_span(
                [random_matrix(gf3, 3, rng) for _ in range(rng.randrange(1, 5))],
                field=gf3,
                n=3,
            )
            assert space.transpose_dual().transpose_dual() == space

    def test_matches_reversal_conjugation(self, gf5):
        rng = seeded(41)
        n = 3
        rev = Mat(gf5, n, tuple(int(i + j == n - 1) for i in range(n) for j in range(n)))
        for _ in range(10):
            space = MatSpace.from_span([random_matrix(gf5, n, rng) for _ in range(3)])
            transposed = MatSpace.from_span(
                [b.transpose() for b in space.basis], field=gf5, n=n
            )
            assert space.transpose_dual() == transposed.conjugate(rev)


class TestTraceOrthogonal:
    def test_triangular_complement(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert t2.trace_orthogonal() == MatSpace.from_span([unit(gf3, 2, 0, 1)])

    def test_full_space_complement_trivial(self, gf3):
        assert full_space(gf3, 2).trace_orthogonal().dim == 0

    def test_double_complement_and_dimension_law(self, gf5):
        rng = seeded(43)
        for _ in range(25):
            space = MatSpace.from_span(
                [random_matrix(gf5, 2, rng) for _ in range(rng.randrange(5))],
                field=gf5,
                n=2,
            )
            perp = space.trace_orthogonal()
            assert space.dim + perp.dim == 4
            assert perp.trace_orthogonal() == space


class TestSpaceFiles:
    def test_round_trip(self, gf9):
        rng = seeded(47)
        space = MatSpace.from_span([random_matrix(gf9, 3, rng) for _ in range(4)])
        again = parse_spacefile(format_spacefile(space))
        assert again == space
        assert format_spacefile(again) == format_spacefile(space)

    def test_comments_and_blank_lines(self, gf3):
        text = """
        # leading comment
        field GF(3)   # inline comment
        n 2
        dim 1
        mat 1 0 0 1
        """
        assert parse_spacefile(text).dim == 1

    def test_dependent_basis_canonicalized_by_default(self, gf3):
        text = "field GF(3)\nn 2\ndim 2\nmat 1 0 0 0\nmat 2 0 0 0\n"
        assert parse_spacefile(text).dim == 1
        with pytest.raises(SpaceFileError, match="dependent"):
            parse_spacefile(text, strict=True)

    def test_line_diagnostics(self, gf3):
        with pytest.raises(SpaceFileError, match="line 4"):
            parse_spacefile("field GF(3)\nn 2\ndim 1\nmat 1 0 x 1\n")
        with pytest.raises(SpaceFileError, match="column 3"):
            parse_spacefile("field GF(3)\nn 2\ndim 1\nmat 1 0 x 1\n")

    def test_entry_range_checked(self, gf3):
        with pytest.raises(SpaceFileError, match="outside"):
            parse_spacefile("field GF(3)\nn 2\ndim 1\nmat 1 0 5 1\n")

    def test_wrong_entry_count(self):
        with pytest.raises(SpaceFileError, match="expected 4 entries"):
            parse_spacefile("field GF(3)\nn 2\ndim 1\nmat 1 0 0\n")

    def test_dim_mismatch(self):
        with pytest.raises(SpaceFileError, match="dim says"):
            parse_spacefile("field GF(3)\nn 2\ndim 2\nmat 1 0 0 1\n")

    def test_missing_header(self):
        with pytest.raises(SpaceFileError):
            parse_spacefile("mat 1 0 0 1\n")

    def test_unknown_directive(self):
        with pytest.raises(SpaceFileError, match="unknown directive"):
            parse_spacefile("field GF(3)\nn 2\nrows 1\n")
