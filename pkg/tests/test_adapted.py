import pytest

from weaktri.adapted import (
    find_adapted_vector,
    hyperplane_functional,
    is_adapted_hyperplane,
    is_adapted_vector,
    projective_reps,
    range_constrained,
)
from weaktri.linalg import Mat, Vec, kernel_basis, span_rows
from weaktri.spaces import MatSpace

from conftest import full_space, random_invertible, random_matrix, seeded, triangular_space
from oracles import adapted_by_sweep, adapted_hyperplane_by_sweep


class TestProjectiveReps:
    def test_count_and_order(self, gf3):
        reps = projective_reps(gf3, 2)
        assert [r.entries for r in reps] == [(0, 1), (1, 0), (1, 1), (1, 2)]

    def test_reverse(self, gf3):
        fwd = projective_reps(gf3, 3)
        assert projective_reps(gf3, 3, reverse=True) == list(reversed(fwd))
        assert len(fwd) == (27 - 1) // 2

    def test_normalized(self, gf5):
        for rep in projective_reps(gf5, 3):
            lead = next(e for e in rep.entries if e)
            assert lead == 1


class TestRangeConstrained:
    def test_triangular_through_e1(self, gf3):
        t2 = triangular_space(gf3, 2)
        expected = MatSpace.from_span([Mat.unit(gf3, 2, 0, 0), Mat.unit(gf3, 2, 0, 1)])
        assert range_constrained(t2, Vec(gf3, (1, 0))) == expected

    def test_triangular_through_e2(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert range_constrained(t2, Vec(gf3, (0, 1))) == MatSpace.from_span(
            [Mat.unit(gf3, 2, 1, 1)]
        )

    def test_zero_space(self, gf3):
        zero = MatSpace.from_span([], field=gf3, n=2)
        assert range_constrained(zero, Vec(gf3, (1, 1))).dim == 0

    def test_zero_vector_rejected(self, gf3):
        with pytest.raises(ValueError):
            range_constrained(triangular_space(gf3, 2), Vec(gf3, (0, 0)))

    def test_members_have_range_in_line(self, gf5):
        rng = seeded(3)
        for _ in range(10):
            space = MatSpace.from_span([random_matrix(gf5, 3, rng) for _ in range(4)])
            x = Vec(gf5, (1, 2, 3))
            constrained = range_constrained(space, x)
            line = span_rows([x.entries], gf5)
            for m in constrained.basis:
                cols = span_rows([m.col(j) for j in range(3)], gf5)
                assert all(r in line or not any(r) for r in cols)
                assert len(cols) <= 1


class TestAdaptedVector:
    def test_triangular_examples(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert is_adapted_vector(t2, Vec(gf3, (0, 1)))
        assert not is_adapted_vector(t2, Vec(gf3, (1, 0)))

    def test_zero_space_vacuous(self, gf3):
        zero = MatSpace.from_span([], field=gf3, n=2)
        assert is_adapted_vector(zero, Vec(gf3, (1, 0)))

    def test_find_scans_lexicographically(self, gf3):
        t2 = triangular_space(gf3, 2)
        assert find_adapted_vector(t2).entries == (0, 1)
        found = find_adapted_vector(MatSpace.from_span([Mat.unit(gf3, 2, 0, 1)]))
        assert found is not None
        assert is_adapted_vector(MatSpace.from_span([Mat.unit(gf3, 2, 0, 1)]), found)

    def test_full_space_contract_only(self, gf3):
        # no adaptedness guarantee without weak triangularizability
        found = find_adapted_vector(full_space(gf3, 2))
        if found is not None:
            assert is_adapted_vector(full_space(gf3, 2), found)

    def test_matches_sweep_oracle(self, gf3):
        rng = seeded(11)
        spaces = [
            triangular_space(gf3, 2),
            full_space(gf3, 2),
            MatSpace.from_span([random_matrix(gf3, 2, rng) for _ in range(2)]),
            MatSpace.from_span([random_matrix(gf3, 3, rng) for _ in range(3)]),
        ]
        for space in spaces:
            for x in projective_reps(space.field, space.n):
                assert is_adapted_vector(space, x) == adapted_by_sweep(space, x)

    def test_equivariance(self, gf3):
        rng = seeded(13)
        t2 = triangular_space(gf3, 2)
        for _ in range(15):
            p = random_invertible(gf3, 2, rng)
            conj = t2.conjugate(p)
            for x in projective_reps(gf3, 2):
                assert is_adapted_vector(t2, x) == is_adapted_vector(conj, p.apply(x))


class TestAdaptedHyperplane:
    def test_functional_canonicalization(self, gf3):
        functional = hyperplane_functional(gf3, [(0, 1, 0), (0, 0, 1)])
        assert functional == (1, 0, 0)
        with pytest.raises(ValueError):
            hyperplane_functional(gf3, [(0, 1, 0)])

    def test_zero_space_vacuous(self, gf3):
        zero = MatSpace.from_span([], field=gf3, n=2)
        assert is_adapted_hyperplane(zero, [(0, 1)])

    def test_wrong_dimension_rejected(self, gf3):
        with pytest.raises(ValueError):
            is_adapted_hyperplane(triangular_space(gf3, 3), [(0, 1, 0)])

    def test_matches_sweep_oracle(self, gf3):
        rng = seeded(17)
        spaces = [
            triangular_space(gf3, 2),
            full_space(gf3, 2),
            MatSpace.from_span([random_matrix(gf3, 2, rng) for _ in range(2)]),
        ]
        hyperplanes = [[(0, 1)], [(1, 0)], [(1, 1)], [(1, 2)]]
        for space in spaces:
            for h in hyperplanes:
                assert is_adapted_hyperplane(space, h) == adapted_hyperplane_by_sweep(
                    space, h
                )

    def test_triangular_3(self, gf3):
        t3 = triangular_space(gf3, 3)
        spanning = [(0, 1, 0), (0, 0, 1)]
        assert is_adapted_hyperplane(t3, spanning) == adapted_hyperplane_by_sweep(
            t3, spanning
        )


class TestDuality:
    def test_vector_hyperplane_duality(self, gf3):
        # x adapted for S iff the hyperplane annihilating the reversal of x
        # is adapted for the reversal-transpose dual of S
        rng = seeded(19)
        rev = Mat(gf3, 2, (0, 1, 1, 0))
        spaces = [
            triangular_space(gf3, 2),
            MatSpace.from_span([random_matrix(gf3, 2, rng) for _ in range(2)]),
            MatSpace.from_span([random_matrix(gf3, 2, rng) for _ in range(3)]),
        ]
        for space in spaces:
            dual = space.transpose_dual()
            for x in projective_reps(gf3, 2):
                image = rev.apply(x)
                spanning = kernel_basis([image.entries], gf3)
                assert is_adapted_vector(space, x) == is_adapted_hyperplane(
                    dual, spanning
                )
