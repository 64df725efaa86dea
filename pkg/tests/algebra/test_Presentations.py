from math import sqrt
from ncbgg.Errors import DimensionMismatchError, ParseError
from ncbgg.algebra.Presentations import (QuadraticPresentation, cofree_dual, exterior, free_algebra, koszul_dual,
    opposite, polynomial, quantum_plane, sklyanin, sklyanin_curve_points)
from ncbgg.linalg.Matrices import Matrix
from tests.ExtendedTestCase import ExtendedTestCase


class TestPresentations(ExtendedTestCase):

    def test_dual_of_polynomial_is_exterior(self):
        for g in [2, 3, 4]:
            dual = koszul_dual(polynomial(self.QQ, g))
            self.assertTrue(dual.same_algebra(exterior(self.QQ, g)))
            self.assertEqual(dual.num_relations, g * (g + 1) // 2)

    def test_double_dual(self):
        for pres in [polynomial(self.QQ, 3), sklyanin(self.F7, 1, 2, 3), quantum_plane(self.F7, 2)]:
            self.assertEqual(koszul_dual(koszul_dual(pres)), pres)

    def test_dual_names_toggle(self):
        dual = koszul_dual(polynomial(self.QQ, 2))
        self.assertEqual(dual.generators, ["x'", "y'"])

    def test_free_algebra_dual(self):
        dual = koszul_dual(free_algebra(self.F5, 2))
        self.assertEqual(dual.num_relations, 4)

    def test_opposite(self):
        self.assertTrue(polynomial(self.QQ, 3).is_flip_symmetric)
        q = quantum_plane(self.F7, 2)
        self.assertFalse(q.is_flip_symmetric)
        self.assertFalse(opposite(q).same_algebra(q))
        self.assertTrue(opposite(opposite(q)).same_algebra(q))

    def test_cofree_dual_of_flip_symmetric(self):
        pres = polynomial(self.QQ, 2)
        self.assertTrue(cofree_dual(pres).same_algebra(koszul_dual(pres)))

    def test_relations_are_reduced(self):
        a = QuadraticPresentation(self.QQ, ['x', 'y'], Matrix(self.QQ, [[0, 1, -1, 0], [0, 2, -2, 0]]))
        self.assertEqual(a.num_relations, 1)
        self.assertTrue(a.same_algebra(polynomial(self.QQ, 2)))

    def test_sklyanin_cubic_hasse_bound(self):
        count = sklyanin_curve_points(self.F13, 1, 2, 3)
        self.assertLessEqual(abs(count - 14), 2 * sqrt(13))

    def test_invalid_presentations(self):
        with self.assertRaises(ParseError):
            QuadraticPresentation(self.QQ, ['x', 'x'], Matrix.zeros(self.QQ, 0, 4))
        with self.assertRaises(ParseError):
            QuadraticPresentation(self.QQ, [], Matrix.zeros(self.QQ, 0, 0))
        with self.assertRaises(DimensionMismatchError):
            QuadraticPresentation(self.QQ, ['x', 'y'], Matrix.zeros(self.QQ, 1, 3))
