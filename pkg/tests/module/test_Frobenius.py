from ncbgg.Errors import PresentationMismatchError, UnsupportedAlgebraError
from ncbgg.algebra.Presentations import (QuadraticPresentation, cofree_dual, default_names, exterior, free_algebra, koszul_dual,
    relation_rows, sklyanin)
from ncbgg.algebra.TruncatedAlgebra import finite_truncation, truncate_algebra
from ncbgg.module.Frobenius import (Verdict, check_frobenius, find_isomorphism, has_nondegenerate_pairings,
    invariants_differ, module_isomorphic, require_frobenius)
from ncbgg.module.GradedModule import direct_sum, regular_dual, regular_module, trivial_module
from tests.ExtendedTestCase import ExtendedTestCase


class TestFrobenius(ExtendedTestCase):

    def test_exterior_is_frobenius(self):
        alg = finite_truncation(exterior(self.QQ, 3))
        self.assertEqual(check_frobenius(alg), {'is_frobenius': True, 'shift': 3, 'top_degree': 3, 'self_duality': 'yes'})
        self.assertEqual(require_frobenius(alg), 3)

    def test_sklyanin_dual_is_frobenius(self):
        alg = finite_truncation(cofree_dual(sklyanin(self.F13, 1, 2, 3)))
        self.assertEqual(alg.component_dims, [1, 3, 3, 1, 0])
        self.assertTrue(has_nondegenerate_pairings(alg))
        self.assertEqual(check_frobenius(alg, seed=5),
            {'is_frobenius': True, 'shift': 3, 'top_degree': 3, 'self_duality': 'yes'})
        self.assertEqual(module_isomorphic(regular_dual(alg), regular_module(alg).shift(3), seed=5), Verdict.YES)

    def test_truncated_monomial_algebra_is_not_frobenius(self):
        field = self.F5
        pres = QuadraticPresentation(field, default_names(2), relation_rows(field, 2, [{(0, 0): 1}, {(0, 1): 1}, {(1, 0): 1}]))
        alg = truncate_algebra(pres, 3)
        self.assertEqual(alg.component_dims, [1, 2, 1, 1])
        self.assertEqual(check_frobenius(alg),
            {'is_frobenius': False, 'shift': None, 'top_degree': 3, 'self_duality': None})
        with self.assertRaises(UnsupportedAlgebraError):
            require_frobenius(alg)

    def test_square_zero_algebra_is_not_frobenius(self):
        alg = finite_truncation(koszul_dual(free_algebra(self.F5, 2)))
        self.assertEqual(alg.top_degree, 1)
        report = check_frobenius(alg)
        self.assertFalse(report['is_frobenius'])
        self.assertIsNone(report['self_duality'])
        with self.assertRaises(UnsupportedAlgebraError):
            require_frobenius(alg)

    def test_isomorphism(self):
        alg = finite_truncation(exterior(self.F7, 2))
        verdict, h = find_isomorphism(regular_dual(alg), regular_module(alg).shift(2), seed=3)
        self.assertEqual(verdict, Verdict.YES)
        self.assertEqual(sorted(h.keys()), [-2, -1, 0])
        k = trivial_module(alg)
        self.assertEqual(module_isomorphic(k, k.shift(1)), Verdict.NO)

    def test_invariants(self):
        alg = finite_truncation(exterior(self.F7, 2))
        k0, k1 = trivial_module(alg, 0), trivial_module(alg, 1)
        self.assertEqual(invariants_differ(k0, k1), 'piece dimensions')
        top = regular_module(alg).restrict(0, 1)
        self.assertEqual(invariants_differ(top, direct_sum([k0, k1, k1])), 'socle dimensions')
        self.assertIsNone(invariants_differ(k0, k0))

    def test_mismatched_algebras(self):
        with self.assertRaises(PresentationMismatchError):
            module_isomorphic(trivial_module(finite_truncation(exterior(self.F7, 2))),
                trivial_module(finite_truncation(exterior(self.F7, 3))))
