from ncbgg.Errors import PreconditionError, PresentationMismatchError, WindowTooSmallError
from ncbgg.algebra.Presentations import cofree_dual, polynomial, sklyanin
from ncbgg.algebra.TruncatedAlgebra import finite_truncation, truncate_algebra
from ncbgg.bgg.GradedComplex import module_complex, zero_complex
from ncbgg.bgg.Support import support_dimension
from ncbgg.bgg.Tails import (TailsObject, bass_support_identity, default_cutoff, gamma, phi, section_check, section_dims,
    structure_sheaf, tails_from_module, tails_hom_dims, torsion_cohomology_check)
from ncbgg.module.Frobenius import Verdict, module_isomorphic
from ncbgg.module.GradedModule import quotient_by_generators, regular_module, trivial_module, zero_module
from tests.ExtendedTestCase import ExtendedTestCase


class TestTails(ExtendedTestCase):

    @staticmethod
    def algebras(N: int=8):
        pres = polynomial(ExtendedTestCase.F7, 2)
        return truncate_algebra(pres, N), finite_truncation(cofree_dual(pres))

    def test_structure_sheaf(self):
        algA, _ = TestTails.algebras()
        O = structure_sheaf(algA)
        self.assertEqual(O.window.bounds, (0, 8))
        self.assertEqual(tails_hom_dims(O, 0, range(0, 4)), [1, 2, 3, 4])
        self.assertEqual(O.twist(1).cohomology_dim(0, 0), 2)
        self.assertEqual(O.twist(1).window.bounds, (-1, 7))
        self.assertEqual(O.suspend(1).table(), {-1: {u: u + 1 for u in range(9)}})
        with self.assertRaises(WindowTooSmallError):
            O.cohomology_dim(0, 9)

    def test_equality_on_common_window(self):
        algA, _ = TestTails.algebras()
        O = structure_sheaf(algA)
        self.assertTrue(O.equals(structure_sheaf(algA, cutoff=3)))
        self.assertFalse(O.equals(O.twist(1)))
        self.assertTrue(TailsObject(zero_complex(algA), 0, 8).is_zero())

    def test_to_json(self):
        algA, _ = TestTails.algebras(N=2)
        self.assertEqual(structure_sheaf(algA).to_json(),
            {'cutoff': 0, 'upper': 2, 'cohomology': {'0': {'0': 1, '1': 2, '2': 3}}})

    def test_phi_of_k_is_the_structure_sheaf(self):
        algA, algLam = TestTails.algebras()
        k = trivial_module(algLam)
        self.assertEqual(default_cutoff(k), -1)
        T = phi(k, algA)
        self.assertEqual((T.cutoff, T.upper), (-1, 6))
        self.assertEqual(T.table(), {0: {u: u + 1 for u in range(0, 7)}})
        self.assertTrue(T.equals(structure_sheaf(algA)))

    def test_phi_of_k_in_three_variables(self):
        for pres in [polynomial(self.F7, 3), sklyanin(self.F13, 1, 2, 3)]:
            algA, algLam = truncate_algebra(pres, 5), finite_truncation(cofree_dual(pres))
            k = trivial_module(algLam)
            self.assertEqual(default_cutoff(k), -2)
            T = phi(k, algA)
            self.assertEqual((T.cutoff, T.upper), (-2, 2))
            self.assertEqual(T.table(), {0: {0: 1, 1: 3, 2: 6}})
            self.assertTrue(T.equals(structure_sheaf(algA)))

    def test_phi_of_injectives_vanishes(self):
        algA, algLam = TestTails.algebras()
        self.assertTrue(phi(zero_module(algLam), algA).is_zero())
        self.assertTrue(phi(regular_module(algLam), algA).is_zero())

    def test_phi_checks_its_input(self):
        algA, algLam = TestTails.algebras()
        with self.assertRaises(PresentationMismatchError):
            phi(trivial_module(algLam), truncate_algebra(polynomial(self.F7, 3), 4))
        with self.assertRaises(WindowTooSmallError):
            phi(trivial_module(algLam), algA, cutoff=7)

    def test_gamma_of_the_structure_sheaf(self):
        algA, algLam = TestTails.algebras()
        back = gamma(structure_sheaf(algA), algLam)
        self.assertEqual(module_isomorphic(back, trivial_module(algLam)), Verdict.YES)

    def test_gamma_needs_room(self):
        algA, algLam = TestTails.algebras(N=3)
        with self.assertRaises(WindowTooSmallError) as ctx:
            gamma(structure_sheaf(algA), algLam)
        self.assertEqual(ctx.exception.truncation, 4)
        self.assertTrue(gamma(TailsObject(zero_complex(algA), 0, 3), algLam).is_zero)

    def test_sections_of_modules(self):
        algA, _ = TestTails.algebras()
        self.assertEqual(section_dims(regular_module(algA), range(-2, 3)), [0, 0, 1, 2, 3])
        line = quotient_by_generators(algA, [1])
        self.assertEqual(line.piece_dims()[0], 1)
        self.assertEqual(section_dims(line, range(-3, 3)), [1] * 6)
        self.assertEqual(section_dims(zero_module(algA), range(0, 2)), [0, 0])
        with self.assertRaises(WindowTooSmallError):
            section_dims(regular_module(algA), [7])

    def test_section_check(self):
        algA, algLam = TestTails.algebras()
        rows = section_check(structure_sheaf(algA))
        self.assertEqual([r['ell'] for r in rows], list(range(0, 7)))
        self.assertTrue(all(r['ok'] for r in rows))
        line = tails_from_module(quotient_by_generators(algA, [1]), cutoff=-2)
        bad = [r['ell'] for r in section_check(line) if not r['ok']]
        self.assertEqual(bad, [-2, -1])
        with self.assertRaises(PreconditionError):
            gamma(line, algLam, check_sections=True)
        k = trivial_module(algLam)
        back = gamma(phi(k, algA), algLam, check_sections=True)
        self.assertEqual(module_isomorphic(back, k), Verdict.YES)

    def test_round_trip_of_a_line(self):
        algA, algLam = TestTails.algebras()
        line = quotient_by_generators(algLam, [0])
        back = gamma(phi(line, algA), algLam)
        self.assertEqual(module_isomorphic(back, line), Verdict.YES)

    def test_bass_numbers_from_cohomology(self):
        algA, algLam = TestTails.algebras()
        k = trivial_module(algLam)
        T = phi(k, algA)
        rows = bass_support_identity(k, algA, range(0, 5), T=T)
        self.assertEqual([r['bass'] for r in rows], [1, 2, 3, 4, 5])
        self.assertTrue(all(r['ok'] for r in rows))
        self.assertEqual(bass_support_identity(k, algA, [], T=T), [])
        with self.assertRaises(WindowTooSmallError):
            bass_support_identity(k, algA, range(0, T.upper + 2), T=T)

    def test_untrusted_positions_make_rows_inconclusive(self):
        algA, algLam = TestTails.algebras()
        k = trivial_module(algLam)
        T = TailsObject(module_complex(regular_module(algA).restrict(5, 8), position=1), 0, 4)
        self.assertTrue(T.is_zero())
        rows = bass_support_identity(k, algA, range(0, 7), T=T)
        self.assertEqual([r['verdict'] for r in rows], ['mismatch'] * 6 + ['inconclusive'])
        self.assertEqual([r['tails'] for r in rows], [0] * 7)
        self.assertIsNone(rows[-1]['ok'])
        self.assertEqual(rows[-1]['untrusted_positions'], [1])
        self.assertFalse(any('untrusted_positions' in r for r in rows[:-1]))

    def test_torsion_cohomology(self):
        algA, algLam = TestTails.algebras()
        for j in [0, 1, 2]:
            report = torsion_cohomology_check(j, algA, algLam)
            self.assertEqual(report['d'], 2)
            self.assertTrue(report['holds'])
        self.assertEqual(torsion_cohomology_check(0, algA, algLam)['cohomology'], {'2': {'-2': 1}})

    def test_tails_from_module(self):
        algA, _ = TestTails.algebras()
        T = tails_from_module(regular_module(algA).restrict(0, 4), cutoff=1, position=2)
        self.assertEqual(T.table(), {2: {1: 2, 2: 3, 3: 4, 4: 5}})

    @staticmethod
    def tail_totals(T: TailsObject) -> list[int]:
        rows = [tails_hom_dims(T, j, T.degrees()) for j in T.table().keys()]
        return [sum(r[k] for r in rows) for k in range(len(T.degrees()))]

    @staticmethod
    def trusted_range(T: TailsObject) -> range:
        return range(max(0, T.cutoff + max(T.table().keys())), T.upper + min(T.underlying.positions()) + 1)

    def test_bounded_bass_modules_have_point_support(self):
        algA, algLam = TestTails.algebras()
        for a, b in [(1, 0), (0, 1), (1, 1), (1, 2)]:
            M = self.line_module(algLam, a, b)
            T = phi(M, algA)
            self.assertEqual(len(T.table()), 1)
            self.assertEqual(support_dimension(TestTails.tail_totals(T))['dimension'], 0)
            rows = bass_support_identity(M, algA, TestTails.trusted_range(T), T=T)
            self.assertGreater(len(rows), 3)
            self.assertTrue(all(r['verdict'] == 'ok' for r in rows))
            self.assertTrue(all(r['bass'] == 1 for r in rows))
        T = phi(trivial_module(algLam), algA)
        self.assertEqual(support_dimension(TestTails.tail_totals(T))['dimension'], 1)

    def test_point_support_in_three_variables(self):
        pres = polynomial(self.F7, 3)
        algLam = finite_truncation(cofree_dual(pres))
        M = quotient_by_generators(algLam, [0])
        algA = truncate_algebra(pres, 8)
        T = phi(M, algA)
        self.assertEqual(support_dimension(TestTails.tail_totals(T))['dimension'], 0)
        rows = bass_support_identity(M, algA, TestTails.trusted_range(T), T=T)
        self.assertGreater(len(rows), 0)
        self.assertTrue(all(r['verdict'] == 'ok' and r['bass'] == 1 for r in rows))
        T = phi(trivial_module(algLam), truncate_algebra(pres, 5))
        self.assertEqual(support_dimension(TestTails.tail_totals(T))['dimension'], 2)
