from ncbgg.Errors import DimensionMismatchError, PreconditionError, WindowTooSmallError
from ncbgg.algebra.Presentations import exterior, polynomial
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra, finite_truncation, truncate_algebra
from ncbgg.module.Frobenius import Verdict, module_isomorphic
from ncbgg.module.GradedModule import (GradedModule, direct_sum, matlis_dual, module_from_maps, quotient_by_generators,
    regular_dual, regular_module, sum_of_shifts, trivial_module)
from tests.ExtendedTestCase import ExtendedTestCase


class TestGradedModule(ExtendedTestCase):

    @staticmethod
    def exterior2() -> TruncatedAlgebra:
        return finite_truncation(exterior(ExtendedTestCase.QQ, 2))

    def test_regular_module(self):
        reg = regular_module(TestGradedModule.exterior2())
        self.assertEqual(reg.piece_dims(), {0: 1, 1: 2, 2: 1})
        self.assertTrue(reg.bounded)
        self.assertEqual(reg.socle_dims(), {2: 1})
        self.assertEqual(reg.radical_series_dims(), [{0: 1, 1: 2, 2: 1}, {1: 2, 2: 1}, {2: 1}])

    def test_regular_dual(self):
        dual = regular_dual(TestGradedModule.exterior2())
        self.assertEqual((dual.lo, dual.hi), (-2, 0))
        self.assertEqual(dual.socle_dims(), {0: 1})
        self.assertTrue(dual.satisfies_relations())

    def test_trivial_module_and_shift(self):
        k = trivial_module(TestGradedModule.exterior2(), 3)
        self.assertEqual(k.piece_dims(), {3: 1})
        self.assertEqual(k.shift(2).piece_dims(), {1: 1})
        self.assertEqual(k.dim(7), 0)

    def test_quotient_by_generators(self):
        M = quotient_by_generators(TestGradedModule.exterior2(), [0])
        self.assertEqual(M.piece_dims(), {0: 1, 1: 1})
        self.assertEqual(M.socle_dims(), {1: 1})
        self.assertEqual(M.name, 'A/(Y1)')

    def test_direct_sum_and_shifts(self):
        alg = TestGradedModule.exterior2()
        reg = regular_module(alg)
        total = direct_sum([reg, trivial_module(alg, 1)])
        self.assertEqual(total.piece_dims(), {0: 1, 1: 3, 2: 1})
        shifted = sum_of_shifts(reg, [(0, 1), (-1, 2)])
        self.assertEqual(shifted.piece_dims(), {0: 1, 1: 4, 2: 5, 3: 2})
        self.assertTrue(shifted.satisfies_relations())

    def test_matlis_dual(self):
        alg = TestGradedModule.exterior2()
        dual = matlis_dual(regular_module(alg))
        self.assertEqual(dual.piece_dims(), regular_dual(alg).piece_dims())
        self.assertEqual(matlis_dual(trivial_module(alg, 1)).piece_dims(), {-1: 1})

    def test_matlis_dual_is_isomorphic(self):
        alg = finite_truncation(exterior(self.F7, 2))
        reg = regular_module(alg)
        dual = matlis_dual(reg)
        self.assertEqual(module_isomorphic(dual, regular_dual(alg), seed=1), Verdict.YES)
        self.assertEqual(module_isomorphic(dual, reg.shift(2), seed=1), Verdict.YES)
        line = quotient_by_generators(alg, [0])
        self.assertEqual(module_isomorphic(matlis_dual(matlis_dual(line)), line, seed=1), Verdict.YES)
        self.assertEqual(module_isomorphic(matlis_dual(line), line), Verdict.NO)

    def test_explicit_module(self):
        alg = TestGradedModule.exterior2()
        M = module_from_maps(alg, 0, [1, 1], {0: [[[1]]]}, name='line')
        self.assertEqual(M.socle_dims(), {1: 1})
        self.assertMatrixEqual(self.QQ, M.action(0, 0), [[1]])
        self.assertMatrixZero(M.action(1, 0))

    def test_relations_are_checked(self):
        alg = TestGradedModule.exterior2()
        with self.assertRaises(PreconditionError):
            module_from_maps(alg, 0, [1, 1, 1], {0: [[[1]], [[1]]]})
        with self.assertRaises(DimensionMismatchError):
            GradedModule(alg, 0, [1, 1], [[], []])

    def test_open_modules_guard_their_window(self):
        reg = regular_module(truncate_algebra(polynomial(self.QQ, 2), 3))
        self.assertFalse(reg.bounded)
        self.assertEqual(reg.dim(3), 4)
        with self.assertRaises(WindowTooSmallError):
            reg.dim(4)
        self.assertEqual(reg.restrict(0, 2).piece_dims(), {0: 1, 1: 2, 2: 3})

    def test_to_json(self):
        k = trivial_module(TestGradedModule.exterior2())
        self.assertEqual(k.to_json(), {'window': [0, 0], 'piece_dims': [1], 'actions': {'Y1': [], 'Y2': []}})
