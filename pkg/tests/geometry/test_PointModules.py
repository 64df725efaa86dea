from ncbgg.Errors import DimensionMismatchError, NotAPointError
from ncbgg.algebra.Presentations import cofree_dual, polynomial, quantum_plane, skew_polynomial, sklyanin
from ncbgg.algebra.TruncatedAlgebra import finite_truncation, truncate_algebra
from ncbgg.geometry.PointModules import point_module, predict_period, verify_shift_law
from ncbgg.geometry.PointScheme import ProjPoint, enumerate_point_scheme
from tests.ExtendedTestCase import ExtendedTestCase


class TestPointModules(ExtendedTestCase):

    def test_point_module(self):
        alg = truncate_algebra(polynomial(self.F5, 2), 4)
        P = point_module(alg, ProjPoint((1, 2)))
        self.assertEqual(P.piece_dims(), {n: 1 for n in range(5)})
        self.assertEqual(P.name, 'P(1:2)')
        self.assertTrue(P.satisfies_relations())

    def test_points_off_the_scheme(self):
        alg = truncate_algebra(skew_polynomial(self.F13, 12, 3, 5), 3)
        with self.assertRaises(NotAPointError) as ctx:
            point_module(alg, ProjPoint((1, 1, 1)))
        self.assertEqual(ctx.exception.degree, 2)
        with self.assertRaises(DimensionMismatchError):
            point_module(alg, ProjPoint((1, 1)))

    def test_shift_law_quantum_plane(self):
        alg = truncate_algebra(quantum_plane(self.F7, 2), 4)
        scheme = enumerate_point_scheme(alg.presentation)
        for p in scheme.points:
            self.assertTrue(verify_shift_law(alg, p, scheme=scheme))

    def test_shift_law_sklyanin(self):
        alg = truncate_algebra(sklyanin(self.F13, 1, 2, 3), 3)
        scheme = enumerate_point_scheme(alg.presentation)
        for p in scheme.points:
            self.assertTrue(verify_shift_law(alg, p, scheme=scheme))

    def test_orbit_prediction_only(self):
        alg = truncate_algebra(skew_polynomial(self.F13, 12, 3, 5), 3)
        report = predict_period(alg, ProjPoint((1, 0, 1)))
        self.assertEqual(report.period, 3)
        self.assertTrue(report.orbit_predicted)
        self.assertIsNone(report.verified)
        bounded = predict_period(alg, ProjPoint((1, 1, 0)), bound=3)
        self.assertTrue(bounded.aperiodic_up_to_bound)
        self.assertEqual(bounded.to_json()['point'], [1, 1, 0])

    def test_commutative_points_have_period_one(self):
        pres = polynomial(self.F5, 2)
        alg = truncate_algebra(pres, 6)
        report = predict_period(alg, ProjPoint((1, 3)), algLam=finite_truncation(cofree_dual(pres)))
        self.assertEqual(report.period, 1)
        self.assertFalse(report.orbit_predicted)
        self.assertTrue(report.verified)
        self.assertTrue(report.lemma_consistent)
        self.assertEqual(report.matches[0], {'i': 1, 'j': 1})
        self.assertEqual(len(report.bass_numbers), 6)
        self.assertTrue(report.bass_bounded)
        self.assertTrue(all(b == 1 for b in report.bass_numbers[1:]))

    def test_transported_points_have_bass_numbers_one(self):
        pres = quantum_plane(self.F7, 2)
        alg, algLam = truncate_algebra(pres, 6), finite_truncation(cofree_dual(pres))
        scheme = enumerate_point_scheme(pres)
        for p in [ProjPoint((1, 0)), ProjPoint((0, 1)), ProjPoint((1, 1))]:
            report = predict_period(alg, p, algLam=algLam, scheme=scheme)
            self.assertFalse(report.orbit_predicted)
            self.assertEqual(len(report.bass_numbers), 6)
            self.assertTrue(report.bass_bounded)

    def test_small_window_keeps_the_orbit_prediction(self):
        pres = polynomial(self.F5, 2)
        alg = truncate_algebra(pres, 2)
        report = predict_period(alg, ProjPoint((0, 1)), algLam=finite_truncation(cofree_dual(pres)))
        self.assertEqual(report.period, 1)
        self.assertTrue(report.orbit_predicted)
        self.assertIn('increase N', report.note)
