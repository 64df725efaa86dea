from ncbgg.Errors import InvalidFieldError, NoAutomorphismError, NotAPointError, ParseError
from ncbgg.algebra.Presentations import free_algebra, polynomial, quantum_plane, skew_polynomial, sklyanin, sklyanin_curve_points
from ncbgg.geometry.PointScheme import ProjPoint, enumerate_point_scheme, orbit_length, parse_point, projective_points
from ncbgg.linalg.Fields import PrimeField
from tests.ExtendedTestCase import ExtendedTestCase


class TestPointScheme(ExtendedTestCase):

    def test_points(self):
        self.assertEqual(parse_point(self.F7, '2:4'), ProjPoint((1, 2)))
        self.assertEqual(parse_point(self.F7, '(0, 3, 6)'), ProjPoint((0, 1, 2)))
        self.assertEqual(str(parse_point(self.F13, '1:0:2')), '(1:0:2)')
        with self.assertRaises(ParseError):
            parse_point(self.F7, '0:0')
        self.assertEqual(len(projective_points(self.F5, 2)), 6)
        self.assertEqual(len(projective_points(PrimeField(3), 3)), 13)

    def test_perp(self):
        p = ProjPoint((1, 2, 0))
        rows = p.perp(self.F7)
        self.assertEqual(rows.shape, (2, 3))
        self.assertTrue(all((row[0] * 1 + row[1] * 2 + row[2] * 0) % 7 == 0 for row in rows))

    def test_commutative_plane(self):
        scheme = enumerate_point_scheme(polynomial(self.F5, 2))
        self.assertEqual(len(scheme), 6)
        self.assertTrue(scheme.is_bijective)
        self.assertTrue(all(scheme.sigma[p] == p for p in scheme.points))
        self.assertEqual(scheme.cycle_type(), {1: 6})
        report = scheme.to_json()
        self.assertEqual(report['sigma'], list(range(6)))
        self.assertEqual(report['field'], {'prime': 5})

    def test_quantum_plane(self):
        scheme = enumerate_point_scheme(quantum_plane(self.F7, 2))
        for b in range(7):
            self.assertEqual(scheme.sigma[ProjPoint((1, b))], ProjPoint((1, 2 * b % 7)))
        self.assertEqual(scheme.sigma[ProjPoint((0, 1))], ProjPoint((0, 1)))
        self.assertEqual(scheme.cycle_type(), {1: 2, 3: 2})
        self.assertEqual(orbit_length(scheme, ProjPoint((1, 1))), 3)
        self.assertEqual(scheme.power(ProjPoint((1, 1)), -1), ProjPoint((1, 4)))

    def test_sklyanin_curve(self):
        scheme = enumerate_point_scheme(sklyanin(self.F13, 1, 2, 3))
        self.assertEqual(len(scheme), sklyanin_curve_points(self.F13, 1, 2, 3))
        self.assertTrue(scheme.is_graph)
        self.assertTrue(scheme.is_bijective)
        self.assertEqual(sum(n * c for n, c in scheme.cycle_type().items()), len(scheme))

    def test_skew_polynomial_lines(self):
        scheme = enumerate_point_scheme(skew_polynomial(self.F13, 12, 3, 5))
        self.assertEqual(len(scheme), 39)
        self.assertEqual(orbit_length(scheme, ProjPoint((0, 1, 1))), 2)
        self.assertEqual(orbit_length(scheme, ProjPoint((1, 0, 1))), 3)
        self.assertEqual(orbit_length(scheme, ProjPoint((1, 1, 0))), 4)
        self.assertIsNone(orbit_length(scheme, ProjPoint((1, 1, 0)), bound=3))
        self.assertEqual(orbit_length(scheme, ProjPoint((1, 1, 0)), exponent=1), 4)
        with self.assertRaises(NotAPointError) as ctx:
            orbit_length(scheme, ProjPoint((1, 1, 1)))
        self.assertEqual(ctx.exception.degree, 2)

    def test_failure_degree(self):
        scheme = enumerate_point_scheme(skew_polynomial(self.F13, 12, 3, 5))
        self.assertIsNone(scheme.failure_degree(ProjPoint((1, 0, 1))))
        self.assertEqual(scheme.failure_degree(ProjPoint((1, 1, 1))), 2)
        free = enumerate_point_scheme(free_algebra(PrimeField(3), 2))
        self.assertEqual(free.failure_degree(ProjPoint((1, 0))), 2)

    def test_free_algebra_has_no_automorphism(self):
        scheme = enumerate_point_scheme(free_algebra(PrimeField(3), 2))
        self.assertEqual(len(scheme.pairs), 16)
        self.assertFalse(scheme.is_graph)
        self.assertIsNone(scheme.to_json()['sigma'])
        with self.assertRaises(NoAutomorphismError):
            scheme.orbits()

    def test_rational_field_is_rejected(self):
        with self.assertRaises(InvalidFieldError):
            enumerate_point_scheme(polynomial(self.QQ, 2))
