from fractions import Fraction
from ncbgg.Errors import InvalidFieldError, ParseError
from ncbgg.linalg.Fields import FieldKind, PrimeField, RationalField, field_from_json
from tests.ExtendedTestCase import ExtendedTestCase


class TestFields(ExtendedTestCase):

    def test_prime_is_verified(self):
        self.assertDoesNotRaise(lambda: PrimeField(13))
        with self.assertRaises(InvalidFieldError):
            PrimeField(15)
        with self.assertRaises(InvalidFieldError):
            PrimeField(2**31 + 11)

    def test_parse(self):
        self.assertEqual(self.F7.parse('1/2'), 4)
        self.assertEqual(self.F7.parse(-1), 6)
        self.assertEqual(self.QQ.parse('3/6'), Fraction(1, 2))
        with self.assertRaises(ParseError):
            self.QQ.parse('x')
        with self.assertRaises(ParseError):
            self.F7.parse(0.5)

    def test_from_json(self):
        self.assertEqual(field_from_json({'prime': 7}), self.F7)
        self.assertEqual(field_from_json('rational').kind, FieldKind.RATIONAL)
        with self.assertRaises(ParseError):
            field_from_json({'char': 7})

    def test_inverse(self):
        for x in range(1, 13):
            self.assertEqual((x * self.F13.inv(x)) % 13, 1)
        self.assertEqual(RationalField().inv(Fraction(2, 3)), Fraction(3, 2))
