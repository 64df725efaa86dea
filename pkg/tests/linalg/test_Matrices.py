from ncbgg.Errors import DimensionMismatchError, PreconditionError
from ncbgg.linalg.Matrices import Matrix, inverse, kernel_basis, quotient_basis, rank, rank_and_rref, solve
from tests.ExtendedTestCase import ExtendedTestCase


class TestMatrices(ExtendedTestCase):

    @staticmethod
    def sample(field) -> Matrix:
        return Matrix(field, [[1, 2, 0, 3], [2, 4, 1, 1], [3, 6, 1, 4]])

    def test_identity_rref(self):
        r, rref, piv = rank_and_rref(Matrix.identity(self.F5, 2))
        self.assertEqual(r, 2)
        self.assertEqual(piv, [0, 1])
        self.assertEqual(rref, Matrix.identity(self.F5, 2))

    def test_zero_rref(self):
        r, _, piv = rank_and_rref(Matrix.zeros(self.F5, 3, 4))
        self.assertEqual(r, 0)
        self.assertEqual(piv, [])

    def test_rational_rank_one(self):
        r, rref, piv = rank_and_rref(Matrix(self.QQ, [[1, 2], [2, 4]]))
        self.assertEqual(r, 1)
        self.assertEqual(piv, [0])
        self.assertMatrixEqual(self.QQ, rref, [[1, 2], [0, 0]])

    def test_rref_idempotent(self):
        for field in [self.F7, self.QQ]:
            _, rref, _ = rank_and_rref(TestMatrices.sample(field))
            _, again, _ = rank_and_rref(rref)
            self.assertEqual(rref, again)

    def test_rank_nullity(self):
        for field in [self.F5, self.F7, self.QQ]:
            m = TestMatrices.sample(field)
            k = kernel_basis(m)
            self.assertEqual(rank(m) + k.rows, m.cols)
            self.assertMatrixZero(m @ k.T)

    def test_kernel_trivial_cases(self):
        self.assertEqual(kernel_basis(Matrix.identity(self.F7, 3)).rows, 0)
        self.assertEqual(kernel_basis(Matrix.zeros(self.F7, 2, 3)).rows, 3)

    def test_kernel_single_row(self):
        m = Matrix(self.F7, [[1, 1, 0]])
        k = kernel_basis(m)
        self.assertEqual(k.rows, 2)
        self.assertMatrixZero(m @ k.T)
        self.assertMatrixEqual(self.F7, k, [[6, 1, 0], [0, 0, 1]])

    def test_quotient_zero_subspace(self):
        section, proj = quotient_basis(Matrix.zeros(self.F5, 0, 3), 3)
        self.assertEqual(proj, Matrix.identity(self.F5, 3))
        self.assertEqual(section.rows, 3)

    def test_quotient_full_space(self):
        section, proj = quotient_basis(Matrix.identity(self.QQ, 3), 3)
        self.assertEqual(section.rows, 0)
        self.assertEqual(proj.shape, (0, 3))

    def test_quotient_line(self):
        sub = Matrix(self.QQ, [[1, 1]])
        section, proj = quotient_basis(sub, 2)
        self.assertEqual(proj.rows, 1)
        self.assertEqual(proj @ section.T, Matrix.identity(self.QQ, 1))
        self.assertMatrixZero(proj @ sub.T)

    def test_quotient_projection_kills_subspace(self):
        for field in [self.F7, self.QQ]:
            sub = TestMatrices.sample(field)
            section, proj = quotient_basis(sub, 4)
            self.assertEqual(proj.rows, 4 - rank(sub))
            self.assertEqual(proj @ section.T, Matrix.identity(field, proj.rows))
            self.assertMatrixZero(proj @ sub.T)

    def test_quotient_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            quotient_basis(Matrix.identity(self.F5, 2), 3)

    def test_solve_and_inverse(self):
        a = Matrix(self.F13, [[2, 1], [1, 1]])
        b = Matrix(self.F13, [[3], [2]])
        x = solve(a, b)
        self.assertEqual(a @ x, b)
        self.assertEqual(a @ inverse(a), Matrix.identity(self.F13, 2))
        with self.assertRaises(PreconditionError):
            solve(Matrix(self.F13, [[1, 1], [1, 1]]), Matrix(self.F13, [[0], [1]]))

    def test_large_prime_products_do_not_overflow(self):
        from ncbgg.linalg.Fields import PrimeField
        field = PrimeField(2147483647)
        m = Matrix(field, [[2147483646] * 8] * 8)
        self.assertEqual((m @ m).entries[0, 0], 8 % 2147483647)
