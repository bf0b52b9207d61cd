"""
Tests for closed-form derivations, Leibniz residuals and windowed derivation spaces.
"""

from django.test import SimpleTestCase
from hypothesis import given, settings

from .algebra_core import AlgebraId, I, L, bracket, e, w22_generators
from .derivations import (
    GenericDerivation, InnerDerivation, ThinDerivation, W22Derivation, apply_thin, apply_w22,
    generator_pairs, leibniz_check, outer_D, shift_form_defects, solve_derivation_space,
)
from .exceptions import AlgebraMismatch, WindowOverflow
from .testing import thin_derivations, thin_elements, w22_derivations, w22_elements


class ClosedFormTests(SimpleTestCase):

    def test_outer_derivation(self):
        self.assertTrue(outer_D(L(3)).is_zero())
        self.assertEqual(outer_D(I(3)), I(3))
        self.assertEqual(outer_D(2 * L(0) - 5 * I(-2)), -5 * I(-2))
        with self.assertRaises(AlgebraMismatch):
            outer_D(e(1))

    def test_apply_w22(self):
        self.assertEqual(apply_w22(W22Derivation(L(0)), L(5)), -5 * L(5))
        self.assertEqual(apply_w22(W22Derivation(L(1), 2), I(0)), I(1) + 2 * I(0))
        self.assertTrue(apply_w22(W22Derivation(), L(3) + I(-7)).is_zero())

    def test_apply_thin(self):
        self.assertEqual(apply_thin(ThinDerivation((1,)), e(5)), 3 * e(5))
        self.assertEqual(apply_thin(ThinDerivation((0, -1, 1), (2,)), e(1) + e(2)), e(2) + e(3))
        shift = ThinDerivation((0,), (0, 1))
        for j in range(2, 10):
            self.assertEqual(apply_thin(shift, e(j)), e(j + 1))

    def test_thin_inner_derivations_are_in_the_family(self):
        """Test that ad(e_k) has the alpha/beta form for every k"""
        for k in range(1, 7):
            d = ThinDerivation.ad(k)
            for j in range(1, 11):
                self.assertEqual(d.apply(e(j)), bracket(e(k), e(j)), (k, j))

    def test_trailing_zeros_trimmed(self):
        self.assertEqual(ThinDerivation((1, 0, 0), (0,)), ThinDerivation((1,)))
        self.assertEqual(ThinDerivation(), ThinDerivation((0,), (0, 0)))

    def test_literals(self):
        self.assertEqual(W22Derivation(L(1) - I(2), 2).as_literal(),
                         {'kind': 'w22', 'inner': 'L[1] - I[2]', 'outer': '2'})
        self.assertEqual(ThinDerivation((0, '-1/2'), (3,)).as_literal(),
                         {'kind': 'thin', 'alpha': ['0', '-1/2'], 'beta': ['3']})

    def test_w22_derivation_arithmetic(self):
        d = W22Derivation(L(1), 1) + 2 * W22Derivation(I(0), -1)
        self.assertEqual(d, W22Derivation(L(1) + 2 * I(0), -1))
        self.assertEqual(d - d, W22Derivation())


class LeibnizTests(SimpleTestCase):

    def setUp(self):
        self.pairs = generator_pairs(w22_generators(-4, 4))

    def test_inner_derivation_passes(self):
        self.assertTrue(leibniz_check(W22Derivation(L(2)), self.pairs).passed)

    def test_outer_derivation_passes(self):
        report = leibniz_check(outer_D, self.pairs)
        self.assertTrue(report.passed)
        self.assertEqual(report.as_dict()['status'], 'pass')

    def test_identity_is_not_a_derivation(self):
        """Test that x -> x leaves residual L_3 on (L_1, L_2)"""
        report = leibniz_check(lambda x: x, [(L(1), L(2))])
        self.assertFalse(report.passed)
        self.assertEqual(report.failures[0].residual, L(3))
        self.assertEqual(report.as_dict()['counterexamples'][0]['lhs'], 'L[3]')

    @settings(max_examples=50, deadline=None)
    @given(w22_derivations(), w22_elements(), w22_elements())
    def test_w22_derivations_satisfy_leibniz(self, d, x, y):
        self.assertTrue(leibniz_check(d, [(x, y)]).passed)

    @settings(max_examples=50, deadline=None)
    @given(thin_derivations(), thin_elements(top=50), thin_elements(top=50))
    def test_thin_derivations_satisfy_leibniz(self, d, x, y):
        self.assertTrue(leibniz_check(d, [(x, y)]).passed)


class W22DerivationSpaceTests(SimpleTestCase):
    """The window N = 4: inner derivations plus a single outer direction."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.space = solve_derivation_space(AlgebraId.W22, 4)

    def test_outer_dimension_is_one(self):
        self.assertEqual(self.space.outer_dim, 1)
        self.assertEqual(len(self.space.outer_representatives), 1)
        self.assertEqual(len(self.space.interior), 10)

    def test_outer_representative_is_d_up_to_inner(self):
        inner = self.space.inner_span()
        outer = self.space.restriction(W22Derivation(outer_coeff=1))
        self.assertFalse(inner.contains(outer))
        inner.add(self.space.restriction(self.space.outer_representatives[0]))
        self.assertTrue(inner.contains(outer))

    def test_inner_derivations_lie_in_the_space(self):
        for k in range(-2, 3):
            self.assertTrue(self.space.contains_on_interior(InnerDerivation(L(k))))
            self.assertTrue(self.space.contains_on_interior(InnerDerivation(I(k))))
        self.assertTrue(self.space.contains_on_interior(W22Derivation(L(1) - I(-1), 3)))

    def test_non_derivation_is_not_in_the_space(self):
        self.assertFalse(self.space.contains_on_interior(lambda x: x))

    def test_basis_vectors_are_windowed(self):
        d = self.space.basis[0]
        self.assertEqual(d.restrict([L(0).support[0]]), {
            (L(0).support[0], s): c for s, c in d.apply(L(0)).terms.items()})
        with self.assertRaises(WindowOverflow):
            d.apply(L(5))

    def test_window_growth_keeps_interior_solutions(self):
        large = solve_derivation_space(AlgebraId.W22, 5)
        for d in self.space.basis:
            self.assertTrue(large.contains_on(d, self.space.interior))

    def test_report_shape(self):
        data = self.space.as_dict()
        self.assertEqual(data['algebra'], 'w22')
        self.assertEqual(data['outer_dim'], 1)
        self.assertEqual(data['nullspace_dim'], len(self.space.basis))


class ThinDerivationSpaceTests(SimpleTestCase):

    def test_shift_form_on_interior(self):
        for window in (6, 8):
            space = solve_derivation_space(AlgebraId.THIN, window)
            for d in space.basis:
                self.assertEqual(shift_form_defects(d), [], window)

    def test_defects_are_reported(self):
        space = solve_derivation_space(AlgebraId.THIN, 6)
        broken = space.basis[0].images.copy()
        broken[e(3).support[0]] = broken[e(3).support[0]] + e(9)
        defects = shift_form_defects(GenericDerivation(AlgebraId.THIN, 6, broken))
        self.assertIn(9, [t for j, t, _, _ in defects if j == 3])

    def test_window_growth_keeps_interior_solutions(self):
        small = solve_derivation_space(AlgebraId.THIN, 6)
        large = solve_derivation_space(AlgebraId.THIN, 7)
        for d in small.basis:
            self.assertTrue(large.contains_on(d, small.interior))

    def test_small_windows_rejected(self):
        with self.assertRaises(ValueError):
            solve_derivation_space(AlgebraId.THIN, 2)

    def test_inner_derivations_lie_in_the_space(self):
        space = solve_derivation_space(AlgebraId.THIN, 6)
        for k in range(1, 7):
            self.assertTrue(space.contains_on_interior(ThinDerivation.ad(k)), k)
