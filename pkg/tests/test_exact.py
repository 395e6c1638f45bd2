"""
厳密計算モジュールのテスト
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_rationals
from exact import (DimensionMismatchError, NoSolution, RatMatrix, Solution, UnderdeterminedWitness,
                   WorkbenchError, anticommutator, char_poly, commutator, format_rational, matrix_to_csv,
                   nullity, parse_rational, poly_from_roots, solve_exact, to_rational, write_matrix_csv)

A = RatMatrix.diagonal([1, 2])
B = RatMatrix([[0, 1], [1, 0]])


def square_matrices(dim: int):
    return st.lists(st.lists(small_rationals, min_size=dim, max_size=dim),
                    min_size=dim, max_size=dim).map(RatMatrix)


class TestRational:
    def test_parse_fraction_text(self):
        assert parse_rational("6/4") == Fraction(3, 2)
        assert parse_rational(" -7 ") == Fraction(-7)

    @pytest.mark.parametrize("text", ["1.5", "1e3", "1/2/3", "a/b", "", "3/0"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(WorkbenchError):
            parse_rational(text)

    def test_bool_is_not_rational(self):
        with pytest.raises(WorkbenchError):
            to_rational(True)

    def test_format_lowest_terms(self):
        assert format_rational(Fraction(4, 6)) == "2/3"
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(-1, 2)) == "-1/2"


class TestRatMatrix:
    def test_commutator_hand_example(self):
        assert commutator(A, B) == RatMatrix([[0, -1], [1, 0]])

    def test_anticommutator_hand_example(self):
        assert anticommutator(A, B) == RatMatrix([[0, 3], [3, 0]])

    def test_identity_cases(self):
        identity = RatMatrix.identity(2)
        assert commutator(identity, B).is_zero()
        assert anticommutator(identity, B) == B * 2
        assert anticommutator(B, B) == (B @ B) * 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            A @ RatMatrix.identity(3)

    def test_non_square_rejected(self):
        with pytest.raises(WorkbenchError):
            RatMatrix([[1, 2]])

    def test_scalar_value(self):
        assert RatMatrix.scalar(3, Fraction(5, 2)).scalar_value() == Fraction(5, 2)
        assert A.scalar_value() is None

    def test_first_nonzero_is_row_major(self):
        m = RatMatrix([[0, 0], [3, 4]])
        assert m.first_nonzero() == (1, 0, Fraction(3))

    @settings(max_examples=30, deadline=None)
    @given(square_matrices(3), square_matrices(3))
    def test_commutator_antisymmetric(self, a, b):
        assert commutator(a, b) == -commutator(b, a)
        assert commutator(a, a).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(square_matrices(3), square_matrices(3), square_matrices(3))
    def test_jacobi_identity(self, a, b, c):
        total = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
                 + commutator(c, commutator(a, b)))
        assert total.is_zero()


class TestCharPoly:
    def test_diagonal(self):
        assert char_poly(A) == [1, -3, 2]

    def test_zero_matrix(self):
        assert char_poly(RatMatrix.zeros(2)) == [1, 0, 0]

    def test_companion(self):
        companion = RatMatrix([[0, 1], [1, 1]])
        assert char_poly(companion) == [1, -1, -1]

    @settings(max_examples=25, deadline=None)
    @given(st.lists(small_rationals, min_size=1, max_size=4))
    def test_triangular_matches_roots(self, roots):
        n = len(roots)
        rows = [[roots[i] if i == j else (Fraction(1) if j == i + 1 else 0) for j in range(n)]
                for i in range(n)]
        assert char_poly(RatMatrix(rows)) == poly_from_roots(roots)


class TestSolveExact:
    def test_identity_system(self):
        result = solve_exact(RatMatrix.identity(2), [Fraction(3), Fraction(-1, 2)])
        assert isinstance(result, Solution)
        assert result.values == (3, Fraction(-1, 2))

    def test_diagonal_system(self):
        assert solve_exact(A, [1, 3]).values == (1, Fraction(3, 2))

    def test_inconsistent_system_has_witness(self):
        result = solve_exact([[1, 1], [2, 2]], [1, 3])
        assert isinstance(result, NoSolution)
        assert result.residual != 0
        rows = [[1, 1], [2, 2]]
        combined = [sum(c * rows[i][j] for i, c in enumerate(result.combination)) for j in range(2)]
        assert combined == [0, 0]
        assert sum(c * b for c, b in zip(result.combination, [1, 3])) == result.residual

    def test_underdetermined_lists_free_direction(self):
        result = solve_exact([[1, 1]], [2])
        assert isinstance(result, UnderdeterminedWitness)
        assert len(result.free_directions) == 1
        direction = result.free_directions[0]
        assert direction[0] + direction[1] == 0
        assert sum(result.particular) == 2

    def test_multiple_right_hand_sides(self):
        results = solve_exact(A, [[1, 2], [2, 4]])
        assert [r.values for r in results] == [(1, 1), (2, 2)]

    def test_nullity(self):
        assert nullity([[1, 2, 3], [2, 4, 6]]) == 2
        assert nullity(RatMatrix.identity(3)) == 0

    @settings(max_examples=30, deadline=None)
    @given(square_matrices(3), st.lists(small_rationals, min_size=3, max_size=3))
    def test_solution_satisfies_system(self, m, x):
        rhs = m.apply(x)
        result = solve_exact(m, rhs)
        assert not isinstance(result, NoSolution)
        values = result.values if isinstance(result, Solution) else result.particular
        assert m.apply(list(values)) == rhs


class TestExport:
    def test_csv_rows(self):
        assert matrix_to_csv(RatMatrix.diagonal([0, Fraction(17, 6)])).splitlines() == ["0,0", "0,17/6"]

    def test_write_file(self, tmp_path):
        path = write_matrix_csv(B, tmp_path / "out" / "b.csv")
        assert path.read_text(encoding="utf-8").splitlines() == ["0,1", "1,0"]
