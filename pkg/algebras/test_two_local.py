"""
Tests for the Omega map, witness solving, the 2-locality checkers, the W(2,2)
decomposition and the thin-algebra classification.
"""

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from .algebra_core import AlgebraId, Element, I, L, e, symbol_e, w22_generators
from .derivations import ThinDerivation, W22Derivation
from .exceptions import AlgebraMismatch, UnknownProbe, WindowTooSmall
from .testing import (
    nonzero_rationals, rationals, thin_derivations, thin_elements, thin_two_local_maps, w22_derivations,
    w22_elements,
)
from .two_local import (
    Decomposition, DerivationOracle, Failure, FailureReason, FunctionOracle, OmegaParams,
    ThinTwoLocalMap, ValueTableOracle, check_additivity, check_homogeneity, check_i0_kernel_witness,
    check_i_part_scaling, check_l_kernel_propagation, check_l_kernel_witness, check_lp_i2p_witness,
    check_vanishing_on_kernel, classify_thin_two_local, decompose_w22_two_local, evaluate,
    is_two_local_on_set, omega_apply, witness_find,
)

ZERO_THIN = Element.zero(AlgebraId.THIN)
ZERO_W22 = Element.zero(AlgebraId.W22)

TWO_BRANCH = OmegaParams(theta=(1,))
WITH_LAMBDA = OmegaParams(theta=(1, 1), lam=2, q=3)


def two_branch_map():
    return ThinTwoLocalMap(omega=TWO_BRANCH)


def lambda_map():
    return ThinTwoLocalMap(omega=WITH_LAMBDA)


def k1_or_single(top=6):
    """Thin elements with a non-zero e_1 coefficient, or single terms."""
    headed = st.tuples(nonzero_rationals, thin_elements(top, max_terms=3)).map(
        lambda pair: pair[1] - pair[1].coefficient(symbol_e(1)) * e(1) + pair[0] * e(1))
    single = st.tuples(st.integers(1, top), nonzero_rationals).map(lambda pair: e(*pair))
    return headed | single


class OmegaTests(SimpleTestCase):

    def test_params(self):
        self.assertEqual(WITH_LAMBDA.m, 3)
        self.assertEqual(OmegaParams((1, 0, 0)).theta, (Fraction(1),))
        self.assertEqual(OmegaParams((), 0, 5).canonical().q, 3)
        with self.assertRaises(ValueError):
            OmegaParams((1,), 1, 2)

    def test_two_branch_formula(self):
        self.assertEqual(omega_apply(TWO_BRANCH, 2 * e(1) + 3 * e(2) + e(4)), 3 * e(2) + e(4))

    def test_lambda_branch(self):
        self.assertEqual(omega_apply(WITH_LAMBDA, e(1) + e(2)), e(2) + e(3))
        self.assertEqual(omega_apply(WITH_LAMBDA, 2 * e(3)), 4 * e(3))
        self.assertEqual(omega_apply(WITH_LAMBDA, -e(1) - e(2) + 2 * e(3)), -e(2) + e(3) + 2 * e(4))

    def test_other_inputs_vanish(self):
        for params in (TWO_BRANCH, WITH_LAMBDA):
            self.assertEqual(omega_apply(params, ZERO_THIN), ZERO_THIN)
            self.assertEqual(omega_apply(params, e(2)), ZERO_THIN)
            self.assertEqual(omega_apply(params, e(4)), ZERO_THIN)
            self.assertEqual(omega_apply(params, e(3) + e(4)), ZERO_THIN)

    def test_wrong_algebra(self):
        with self.assertRaises(AlgebraMismatch):
            omega_apply(TWO_BRANCH, L(1))

    def test_evaluate(self):
        self.assertEqual(evaluate(lambda_map(), e(1) + e(2)), e(2) + e(3))
        shift = ThinTwoLocalMap(ThinDerivation((0,), (0, 1)))
        self.assertEqual(evaluate(shift, e(4)), e(5))
        self.assertEqual(evaluate(lambda_map(), ZERO_THIN), ZERO_THIN)
        with self.assertRaises(AlgebraMismatch):
            evaluate(lambda_map(), I(0))

    def test_literal(self):
        self.assertEqual(lambda_map().as_literal(), {
            'delta': {'kind': 'thin', 'alpha': [], 'beta': []},
            'omega': {'theta': ['1', '1'], 'lambda': '2', 'q': 3},
        })

    def test_value_table_oracle(self):
        table = ValueTableOracle(AlgebraId.THIN, {e(3): e(3)})
        self.assertEqual(table(e(3)), e(3))
        self.assertEqual(table(ZERO_THIN), ZERO_THIN)
        with self.assertRaises(UnknownProbe):
            table(e(4))

    @settings(max_examples=100, deadline=None)
    @given(thin_two_local_maps(), rationals, thin_elements(top=8))
    def test_homogeneity(self, map_, k, x):
        self.assertEqual(map_(k * x), k * map_(x))


class WitnessTests(SimpleTestCase):

    def test_thin_witness(self):
        witness = witness_find(AlgebraId.THIN, e(1) + e(2), e(2) + e(3), e(3), 2 * e(3), 6)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.derivation.apply(e(1) + e(2)), e(2) + e(3))
        self.assertEqual(witness.derivation.apply(e(3)), 2 * e(3))
        self.assertEqual(witness.values['beta_{2}'], 2)

    def test_w22_witness(self):
        witness = witness_find(AlgebraId.W22, L(0), L(1), L(1), ZERO_W22, 4)
        self.assertEqual(witness.derivation.inner, L(1))
        self.assertEqual(witness.derivation.outer_coeff, 0)
        self.assertEqual(witness.free_parameters, 1)

    def test_linearity_obstruction(self):
        self.assertIsNone(witness_find(AlgebraId.THIN, e(3), e(3), 2 * e(3), 4 * e(3), 6))

    def test_window_too_small(self):
        with self.assertRaises(WindowTooSmall):
            witness_find(AlgebraId.THIN, e(1), e(9), e(2), ZERO_THIN, 6)
        with self.assertRaises(WindowTooSmall):
            witness_find(AlgebraId.W22, L(-5), ZERO_W22, L(1), ZERO_W22, 4)

    def test_constraints_pin_coordinates(self):
        pinned = [({'alpha_{1}': 1}, 0)]
        witness = witness_find(AlgebraId.THIN, e(3), 2 * e(3), e(4), ZERO_THIN, 6)
        self.assertEqual(witness.values['alpha_{1}'], -2)
        self.assertIsNone(witness_find(AlgebraId.THIN, e(3), 2 * e(3), e(4), ZERO_THIN, 6, pinned))

    @settings(max_examples=40, deadline=None)
    @given(thin_derivations(4, 3), thin_elements(top=6), thin_elements(top=6))
    def test_thin_witness_soundness(self, d, x, y):
        witness = witness_find(AlgebraId.THIN, x, d(x), y, d(y), 10)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.derivation(x), d(x))
        self.assertEqual(witness.derivation(y), d(y))

    @settings(max_examples=25, deadline=None)
    @given(w22_derivations(3), w22_elements(3, 3), w22_elements(3, 3))
    def test_w22_witness_soundness(self, d, x, y):
        witness = witness_find(AlgebraId.W22, x, d(x), y, d(y), 6)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.derivation(x), d(x))
        self.assertEqual(witness.derivation(y), d(y))


class TwoLocalCheckTests(SimpleTestCase):

    def test_lambda_map_on_golden_probes(self):
        probes = [e(1) + e(2), -e(1) - e(2) + 2 * e(3), 2 * e(3), e(1), e(2), e(3), e(4)]
        report = is_two_local_on_set(lambda_map(), probes, 10)
        self.assertTrue(report.passed)
        self.assertEqual(report.details['pairs'], 28)
        self.assertEqual(len(report.witnesses), 28)

    def test_zero_map(self):
        zero = FunctionOracle(AlgebraId.THIN, lambda x: ZERO_THIN, 'zero')
        self.assertTrue(is_two_local_on_set(zero, [e(1), e(2) + e(5), 3 * e(4)], 8).passed)

    def test_non_homogeneous_stub(self):
        stub = ValueTableOracle(AlgebraId.THIN, {e(3): e(3), 2 * e(3): e(3)})
        report = is_two_local_on_set(stub, [e(3), 2 * e(3)], 6)
        self.assertFalse(report.passed)
        self.assertEqual([c.input for c in report.counterexamples], [[e(3), 2 * e(3)]])
        self.assertEqual(report.as_dict()['status'], 'fail')

    def test_lambda_branch_fails_on_mixed_pairs(self):
        """Test that lambda != 0 admits no witness at (e_3, e_2 + e_4)"""
        report = is_two_local_on_set(lambda_map(), [e(3), e(2) + e(4)], 10)
        self.assertFalse(report.passed)
        self.assertEqual([c.input for c in report.counterexamples], [[e(3), e(2) + e(4)]])
        lambda_free = ThinTwoLocalMap(omega=OmegaParams((1, 1)))
        self.assertTrue(is_two_local_on_set(lambda_free, [e(3), e(2) + e(4)], 10).passed)

    @settings(max_examples=15, deadline=None)
    @given(thin_two_local_maps(), st.lists(k1_or_single(), min_size=1, max_size=4))
    def test_two_local_maps_pass_on_headed_and_single_probes(self, map_, probes):
        report = is_two_local_on_set(map_, probes, 12)
        self.assertTrue(report.passed)
        for witness in report.witnesses:
            x, y = witness['pair']
            self.assertEqual(witness['witness'](x), map_(x))
            self.assertEqual(witness['witness'](y), map_(y))

    def test_homogeneity_checker(self):
        self.assertTrue(check_homogeneity(lambda_map(), [(2, e(1) + e(2)), (0, e(3))]).passed)
        sign = ValueTableOracle(AlgebraId.THIN, {e(3): e(3), -e(3): e(3)})
        report = check_homogeneity(sign, [(-1, e(3))])
        self.assertFalse(report.passed)
        self.assertEqual(report.counterexamples[0].lhs, e(3))

    def test_additivity_counterexamples(self):
        found = check_additivity(lambda_map(), [(e(1) + e(2), -e(1) - e(2) + 2 * e(3))])
        self.assertEqual(len(found), 1)
        self.assertEqual(found[0].lhs, 4 * e(3))
        self.assertEqual(found[0].rhs, 2 * e(3) + 2 * e(4))

        found = check_additivity(two_branch_map(), [(e(1), e(2))])
        self.assertEqual((found[0].lhs, found[0].rhs), (e(2), ZERO_THIN))

        d = DerivationOracle(W22Derivation(L(1) - 2 * I(3), 5))
        self.assertEqual(check_additivity(d, [(L(0), I(2)), (L(1) + I(-1), L(-3))]), [])


class DecompositionTests(SimpleTestCase):

    def test_recovers_inner_plus_outer(self):
        d = W22Derivation(L(1), 2)
        self.assertEqual(d(I(0)), I(1) + 2 * I(0))
        probes = w22_generators(-3, 3) + [L(2) + I(4)]
        outcome = decompose_w22_two_local(DerivationOracle(d), 8, probes)
        self.assertIsInstance(outcome, Decomposition)
        self.assertEqual(outcome.mu, 2)
        for x in probes:
            self.assertEqual(outcome.derivation(x), d(x))

    def test_zero_derivation(self):
        outcome = decompose_w22_two_local(DerivationOracle(W22Derivation()), 4, w22_generators(-2, 2))
        self.assertEqual(outcome.derivation, W22Derivation())

    def test_non_two_local_stub(self):
        stub = ValueTableOracle(AlgebraId.W22, {L(0): ZERO_W22, L(1): ZERO_W22, I(0): ZERO_W22, I(1): I(2)})
        outcome = decompose_w22_two_local(stub, 4, [L(0), L(1), I(0), I(1)])
        self.assertIsInstance(outcome, Failure)
        self.assertEqual(outcome.reason, FailureReason.DISAGREEMENT)
        self.assertEqual(outcome.probe, I(1))
        self.assertEqual(outcome.as_dict()['expected'], 'I[2]')

    def test_infeasible_base(self):
        stub = ValueTableOracle(AlgebraId.W22, {L(0): L(0), L(1): ZERO_W22})
        outcome = decompose_w22_two_local(stub, 4, [])
        self.assertEqual(outcome.reason, FailureReason.INFEASIBLE)

    def test_residue_not_scalar(self):
        stub = ValueTableOracle(AlgebraId.W22, {L(0): ZERO_W22, L(1): ZERO_W22, I(0): I(1)})
        outcome = decompose_w22_two_local(stub, 4, [])
        self.assertEqual(outcome.reason, FailureReason.RESIDUE_NOT_SCALAR_I0)
        self.assertEqual(outcome.actual, I(1))

    @settings(max_examples=15, deadline=None)
    @given(w22_derivations(3), st.lists(w22_elements(4), max_size=5))
    def test_round_trip(self, d, extra):
        probes = w22_generators(-4, 4) + extra
        outcome = decompose_w22_two_local(DerivationOracle(d), 8, probes)
        self.assertIsInstance(outcome, Decomposition)
        self.assertEqual(outcome.mu, d.outer_coeff)


class ClassificationTests(SimpleTestCase):

    def test_lambda_map(self):
        self.assertEqual(classify_thin_two_local(lambda_map(), 8), lambda_map())

    def test_two_branch_map(self):
        outcome = classify_thin_two_local(two_branch_map(), 8)
        self.assertEqual(outcome.delta, ThinDerivation())
        self.assertEqual(outcome.omega, OmegaParams((1,), 0, 3))

    def test_pure_derivation(self):
        d = ThinDerivation((1, 1), (3,))
        outcome = classify_thin_two_local(DerivationOracle(d), 8)
        self.assertEqual(outcome, ThinTwoLocalMap(d))

    def test_ambiguous_lambda(self):
        def two_lambdas(x):
            if len(x) == 1 and x.coefficient(symbol_e(3)):
                return x
            if len(x) == 1 and x.coefficient(symbol_e(4)):
                return 5 * x
            return ZERO_THIN
        outcome = classify_thin_two_local(FunctionOracle(AlgebraId.THIN, two_lambdas), 8)
        self.assertEqual(outcome.reason, FailureReason.AMBIGUOUS_LAMBDA)

    def test_composite_disagreement(self):
        bump = FunctionOracle(AlgebraId.THIN, lambda x: e(5) if x == e(2) + e(3) else ZERO_THIN)
        outcome = classify_thin_two_local(bump, 8)
        self.assertEqual(outcome.reason, FailureReason.DISAGREEMENT)
        self.assertEqual(outcome.probe, e(2) + e(3))

    def test_window_too_small(self):
        with self.assertRaises(WindowTooSmall):
            classify_thin_two_local(lambda_map(), 5)

    def test_lambda_above_window_is_not_seen(self):
        high = ThinTwoLocalMap(omega=OmegaParams((1,), 3, 9))
        outcome = classify_thin_two_local(high, 8)
        self.assertEqual(outcome.omega, OmegaParams((1,), 0, 3))
        for j in range(1, 9):
            self.assertEqual(outcome(e(j)), high(e(j)))
        self.assertNotEqual(outcome(e(9)), high(e(9)))
        self.assertEqual(classify_thin_two_local(high, 10), high.canonical())

    @settings(max_examples=30, deadline=None)
    @given(thin_two_local_maps(), st.lists(thin_elements(top=9), max_size=10))
    def test_round_trip(self, map_, probes):
        outcome = classify_thin_two_local(map_, 10)
        self.assertEqual(outcome, map_.canonical())
        for x in probes:
            self.assertEqual(outcome(x), map_(x))


class KernelConsequenceTests(SimpleTestCase):
    window = 8

    def setUp(self):
        self.probes = [L(3) - I(-2), L(2) + I(4), 3 * I(1) + L(-1), L(-3)]

    def test_l_kernel_witness(self):
        kills_l2 = DerivationOracle(W22Derivation(L(2) + 3 * I(2), 2))
        for y in self.probes:
            report = check_l_kernel_witness(kills_l2, 2, y, self.window)
            self.assertTrue(report.passed)
            self.assertTrue(report.details['hypothesis_holds'])
            inner = report.witnesses[0]['witness'].inner
            self.assertTrue(all(s.index == 2 for s in inner.terms))

    def test_hypothesis_not_met(self):
        report = check_l_kernel_witness(DerivationOracle(W22Derivation(L(1))), 2, L(0), self.window)
        self.assertTrue(report.passed)
        self.assertFalse(report.details['hypothesis_holds'])

    def test_i0_kernel_witness(self):
        kills_i0 = DerivationOracle(W22Derivation(L(0) + I(1) - I(3)))
        for y in self.probes:
            report = check_i0_kernel_witness(kills_i0, y, self.window)
            self.assertTrue(report.passed)
            self.assertEqual(report.witnesses[0]['witness'].outer_coeff, 0)

    def test_l_kernel_propagation(self):
        self.assertTrue(check_l_kernel_propagation(DerivationOracle(W22Derivation(outer_coeff=3)), range(-6, 7)).passed)
        leaky = FunctionOracle(AlgebraId.W22, lambda x: I(2) if x == L(2) else ZERO_W22)
        report = check_l_kernel_propagation(leaky, range(-3, 4))
        self.assertFalse(report.passed)
        self.assertEqual(report.counterexamples[0].input, L(2))

    def test_i_part_scaling(self):
        scaled = DerivationOracle(W22Derivation(outer_coeff=Fraction(5, 2)))
        report = check_i_part_scaling(scaled, self.probes, range(-3, 4), self.window)
        self.assertTrue(report.passed)
        self.assertEqual(report.details['mu']['L[2] + I[4]'], Fraction(5, 2))
        self.assertEqual(report.details['mu']['L[-3]'], 0)

    def test_i_part_scaling_detects_non_scalar(self):
        twisted = FunctionOracle(AlgebraId.W22, lambda x: I(5) if x == I(1) else ZERO_W22)
        report = check_i_part_scaling(twisted, [I(1)], range(-2, 3), self.window)
        self.assertFalse(report.passed)

    def test_lp_i2p_witness(self):
        zero = DerivationOracle(W22Derivation())
        for y in self.probes:
            self.assertTrue(check_lp_i2p_witness(zero, 2, y, self.window, indices=range(-4, 5)).passed)
        with self.assertRaises(WindowTooSmall):
            check_lp_i2p_witness(zero, 5, L(0), self.window)

    def test_vanishing_on_kernel(self):
        self.assertTrue(check_vanishing_on_kernel(DerivationOracle(W22Derivation()), self.probes).passed)
        stub = ValueTableOracle(AlgebraId.W22, {L(0): ZERO_W22, L(1): ZERO_W22, I(0): ZERO_W22, I(1): I(2)})
        report = check_vanishing_on_kernel(stub, [I(1)])
        self.assertFalse(report.passed)
        self.assertEqual(report.as_dict()['counterexamples'][0]['lhs'], 'I[2]')
