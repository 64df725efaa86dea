from typing import Any, Callable, Sequence, Type
from unittest import TestCase
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Fields import Field, PrimeField, RationalField
from ncbgg.linalg.Matrices import Matrix
from ncbgg.module.GradedModule import GradedModule, module_from_maps


class ExtendedTestCase(TestCase):

    F5 = PrimeField(5)
    F7 = PrimeField(7)
    F13 = PrimeField(13)
    QQ = RationalField()

    def assertDoesNotRaise(self, fn: Callable[[], Any], exType: Type=Exception):
        try:
            fn()
        except Exception as e:
            if isinstance(e, exType):
                raise AssertionError(f'The function raises: {e}')

    def assertMatrixEqual(self, field: Field, m: Matrix, expected: Sequence[Sequence[Any]]):
        self.assertEqual(m, Matrix(field, expected, shape=(len(expected), len(expected[0]) if len(expected) > 0 else m.cols)))

    def assertMatrixZero(self, m: Matrix):
        if not m.is_zero:
            raise AssertionError(f'Expected a zero matrix, got {m}')

    @staticmethod
    def line_module(alg: TruncatedAlgebra, a: int, b: int) -> GradedModule:
        """
        Lambda / Lambda (a Y1 + b Y2) over an exterior algebra in two variables.
        """
        return module_from_maps(alg, 0, [1, 1], {0: [[[b]]], 1: [[[-a]]]}, name=f'line({a}:{b})')
