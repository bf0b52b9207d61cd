"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from .algebra_core import AlgebraId, Element, symbol_I, symbol_L, symbol_e
from .derivations import ThinDerivation, W22Derivation
from .two_local import OmegaParams, ThinTwoLocalMap

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_rationals = rationals.filter(bool)


def w22_symbols(bound=6):
    indices = st.integers(-bound, bound)
    return st.builds(symbol_L, indices) | st.builds(symbol_I, indices)


def thin_symbols(top=12):
    return st.builds(symbol_e, st.integers(1, top))


def w22_elements(bound=6, max_terms=5):
    return st.lists(st.tuples(w22_symbols(bound), nonzero_rationals), max_size=max_terms).map(
        lambda pairs: Element.from_terms(AlgebraId.W22, pairs))


def thin_elements(top=12, max_terms=5):
    return st.lists(st.tuples(thin_symbols(top), nonzero_rationals), max_size=max_terms).map(
        lambda pairs: Element.from_terms(AlgebraId.THIN, pairs))


def w22_derivations(bound=3):
    return st.builds(W22Derivation, w22_elements(bound), rationals)


def thin_derivations(max_alpha=5, max_beta=4):
    return st.builds(ThinDerivation, st.lists(rationals, max_size=max_alpha), st.lists(rationals, max_size=max_beta))


def omega_params(max_theta=3, max_q=6):
    return st.builds(OmegaParams, st.lists(rationals, max_size=max_theta).map(tuple), rationals,
                     st.integers(3, max_q))


def thin_two_local_maps():
    return st.builds(ThinTwoLocalMap, thin_derivations(4, 3), omega_params())
