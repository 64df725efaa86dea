from ncbgg.bgg.Support import extrapolate, finite_differences, support_dimension
from tests.ExtendedTestCase import ExtendedTestCase


class TestSupport(ExtendedTestCase):

    def test_finite_differences(self):
        self.assertEqual(finite_differences([1, 3, 6]), [[1, 3, 6], [2, 3], [1]])
        self.assertEqual(finite_differences([4]), [[4]])

    def test_extrapolate(self):
        self.assertEqual(extrapolate([1, 4, 9, 16], 2), 25)
        self.assertEqual(extrapolate([2, 2], 0), 2)
        self.assertEqual(extrapolate([1, 3, 5, 7], 1), 9)

    def test_quadratic_growth(self):
        report = support_dimension([1, 3, 6, 10, 15, 21])
        self.assertEqual(report['dimension'], 2)
        self.assertEqual(report['verdict'], 'ok')
        self.assertEqual(report['next'], 28)

    def test_constant_and_empty(self):
        self.assertEqual(support_dimension([1, 1, 1, 1, 1, 1])['dimension'], 0)
        empty = support_dimension([0, 0, 0, 0])
        self.assertEqual((empty['verdict'], empty['dimension'], empty['next']), ('empty', None, 0))

    def test_skip(self):
        report = support_dimension([5, 0, 2, 4, 6], skip=1)
        self.assertEqual(report['values'], [0, 2, 4, 6])
        self.assertEqual((report['dimension'], report['next']), (1, 8))

    def test_inconclusive(self):
        report = support_dimension([1, 2, 4, 8])
        self.assertEqual(report['verdict'], 'inconclusive')
        self.assertIsNone(report['next'])

    def test_eventually_zero(self):
        report = support_dimension([1, 1, 0, 0, 0, 0])
        self.assertEqual((report['verdict'], report['dimension'], report['next']), ('empty', None, 0))
        self.assertEqual(report['from'], 2)

    def test_eventually_constant(self):
        report = support_dimension([5, 1, 1, 1, 1, 1, 1])
        self.assertEqual((report['verdict'], report['dimension'], report['next']), ('ok', 0, 1))
        self.assertEqual(report['from'], 1)

    def test_eventually_linear(self):
        report = support_dimension([7, 0, 3, 5, 7, 9])
        self.assertEqual((report['dimension'], report['next']), (1, 11))
        self.assertEqual(report['from'], 2)

    def test_stable_tail_length(self):
        self.assertEqual(support_dimension([1, 2, 3, 3])['dimension'], 0)
        self.assertEqual(support_dimension([1, 2, 3, 3], stable=3)['verdict'], 'inconclusive')
