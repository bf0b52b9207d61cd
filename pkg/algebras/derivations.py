"""
Derivations of W(2,2) and of the thin Lie algebra.

Closed forms:

* ``W22Derivation`` is ad(inner) + outer_coeff * D with D(L_m) = 0, D(I_m) = I_m.
* ``ThinDerivation`` is the two-vector family
      delta(e_1) = sum_i alpha_i e_i
      delta(e_j) = (j - 2) alpha_1 e_j + sum_{i >= 2} beta_i e_{i+j-2}   (j >= 2)

``solve_derivation_space`` computes every derivation of a finite index
window by exact linear algebra and splits it into the span of inner
derivations and the rest, compared on an interior subwindow where no
Leibniz constraint is missing.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil
from types import MappingProxyType

from .algebra_core import (
    AlgebraId, Element, Family, bracket, bracket_symbols, check_same_algebra, e, extend_linearly,
    format_element, format_rational, symbol_I, symbol_L, symbol_e,
)
from .exact_linear import LinearSystem, SpanBasis, solve
from .exceptions import AlgebraMismatch, WindowOverflow

logger = logging.getLogger(__name__)


def _require(algebra, x):
    if x.algebra is not algebra:
        raise AlgebraMismatch(f"expected a {algebra.value} element, got {x.algebra.value}")


def outer_D(x):
    """The outer derivation of W(2,2): kills every L-term, fixes every I-term."""
    _require(AlgebraId.W22, x)
    return Element._canonical(
        AlgebraId.W22, {s: c for s, c in x.terms.items() if s.family is Family.I})


def _trimmed(values):
    values = [Fraction(v) for v in values]
    while values and not values[-1]:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class W22Derivation:
    """ad(inner) + outer_coeff * D."""
    inner: Element = field(default_factory=lambda: Element.zero(AlgebraId.W22))
    outer_coeff: Fraction = Fraction(0)

    algebra = AlgebraId.W22

    def __post_init__(self):
        _require(AlgebraId.W22, self.inner)
        object.__setattr__(self, 'outer_coeff', Fraction(self.outer_coeff))

    def apply(self, x):
        _require(AlgebraId.W22, x)
        return bracket(self.inner, x) + self.outer_coeff * outer_D(x)

    __call__ = apply

    def __add__(self, other):
        return W22Derivation(self.inner + other.inner, self.outer_coeff + other.outer_coeff)

    def __sub__(self, other):
        return W22Derivation(self.inner - other.inner, self.outer_coeff - other.outer_coeff)

    def scaled(self, k):
        return W22Derivation(k * self.inner, k * self.outer_coeff)

    def __mul__(self, k):
        return self.scaled(k)

    __rmul__ = __mul__

    def canonical(self):
        return self

    def as_literal(self):
        return {
            'kind': 'w22',
            'inner': format_element(self.inner),
            'outer': format_rational(self.outer_coeff),
        }


@dataclass(frozen=True)
class ThinDerivation:
    """Thin-algebra derivation; ``alpha = (a_1..a_n)``, ``beta = (b_2..b_m)``.

    Trailing zeros are trimmed on construction, so the zero derivation is
    ``ThinDerivation((), ())`` and equality is equality of maps.
    """
    alpha: tuple = ()
    beta: tuple = ()

    algebra = AlgebraId.THIN

    def __post_init__(self):
        object.__setattr__(self, 'alpha', _trimmed(self.alpha))
        object.__setattr__(self, 'beta', _trimmed(self.beta))

    @classmethod
    def ad(cls, k):
        """The parameters of ad(e_k)."""
        if k == 1:
            return cls((), (0, 1))
        return cls([0] * k + [-1], ())

    def image_of_symbol(self, symbol):
        j = symbol.index
        if j == 1:
            return Element._canonical(
                AlgebraId.THIN, {symbol_e(i): a for i, a in enumerate(self.alpha, start=1)})
        terms = {}
        if self.alpha and j > 2:
            terms[symbol_e(j)] = (j - 2) * self.alpha[0]
        for i, b in enumerate(self.beta, start=2):
            key = symbol_e(i + j - 2)
            terms[key] = terms.get(key, 0) + b
        return Element._canonical(AlgebraId.THIN, terms)

    def apply(self, x):
        _require(AlgebraId.THIN, x)
        return extend_linearly(self.image_of_symbol, x)

    __call__ = apply

    def __add__(self, other):
        n = max(len(self.alpha), len(other.alpha))
        m = max(len(self.beta), len(other.beta))
        pad = lambda v, k: list(v) + [0] * (k - len(v))  # noqa: E731
        return ThinDerivation(
            [a + b for a, b in zip(pad(self.alpha, n), pad(other.alpha, n))],
            [a + b for a, b in zip(pad(self.beta, m), pad(other.beta, m))],
        )

    def canonical(self):
        # trailing zeros are already gone
        return self

    def as_literal(self):
        return {
            'kind': 'thin',
            'alpha': [format_rational(a) for a in self.alpha],
            'beta': [format_rational(b) for b in self.beta],
        }


def apply_w22(d, x):
    return d.apply(x)


def apply_thin(d, x):
    return d.apply(x)


# -- windowed derivations -------------------------------------------------------

def core_symbols(algebra, bound):
    """Generators of the index window: |i| <= bound for W(2,2), 1 <= i <= bound for thin."""
    algebra = AlgebraId(algebra)
    if algebra is AlgebraId.W22:
        indices = range(-bound, bound + 1)
        return [symbol_L(i) for i in indices] + [symbol_I(i) for i in indices]
    return [symbol_e(i) for i in range(1, bound + 1)]


def interior_bound(algebra, window):
    return ceil(window / 2) if AlgebraId(algebra) is AlgebraId.W22 else ceil(window / 2) + 1


def interior_symbols(algebra, window):
    return core_symbols(algebra, interior_bound(algebra, window))


def in_core(symbol, window):
    if symbol.algebra is AlgebraId.W22:
        return abs(symbol.index) <= window
    return symbol.index <= window


@dataclass(frozen=True)
class GenericDerivation:
    """A linear map given by its images on the core generators of a window."""
    algebra: AlgebraId
    window: int
    images: MappingProxyType

    def image_of_symbol(self, symbol):
        if not in_core(symbol, self.window):
            raise WindowOverflow(f"{symbol} is outside the window of size {self.window}")
        return self.images.get(symbol, Element.zero(self.algebra))

    def apply(self, x):
        _require(self.algebra, x)
        return extend_linearly(self.image_of_symbol, x)

    __call__ = apply

    def restrict(self, generators):
        """``{(generator, symbol): coefficient}`` of the images of ``generators``."""
        return {
            (g, s): c
            for g in generators
            for s, c in self.image_of_symbol(g).terms.items()
        }

    def as_literal(self):
        return {
            'kind': 'generic',
            'algebra': self.algebra.value,
            'window': self.window,
            'images': {str(s): format_element(v) for s, v in self.images.items() if v},
        }


# -- Leibniz verification -------------------------------------------------------

@dataclass(frozen=True)
class LeibnizResidual:
    x: Element
    y: Element
    residual: Element


@dataclass
class LeibnizReport:
    residuals: list

    @property
    def passed(self):
        return all(r.residual.is_zero() for r in self.residuals)

    @property
    def failures(self):
        return [r for r in self.residuals if not r.residual.is_zero()]

    def as_dict(self):
        return {
            'check': 'leibniz',
            'status': 'pass' if self.passed else 'fail',
            'probes': [[format_element(r.x), format_element(r.y)] for r in self.residuals],
            'counterexamples': [
                {
                    'input': [format_element(r.x), format_element(r.y)],
                    'lhs': format_element(r.residual),
                    'rhs': '0',
                }
                for r in self.failures
            ],
            'witnesses': [],
        }


def leibniz_check(d, probe_pairs):
    """Residual d([x,y]) - [d x, y] - [x, d y] for every pair.

    ``d`` is any derivation object or a plain callable. Windowed derivations
    raise ``WindowOverflow`` when a probe or its bracket leaves the window.
    """
    apply = d.apply if hasattr(d, 'apply') else d
    residuals = []
    for x, y in probe_pairs:
        check_same_algebra(x, y)
        residual = apply(bracket(x, y)) - bracket(apply(x), y) - bracket(x, apply(y))
        residuals.append(LeibnizResidual(x, y, residual))
    return LeibnizReport(residuals)


def generator_pairs(generators):
    return [(a, b) for a in generators for b in generators]


# -- derivation space of a window ----------------------------------------------

class _Coordinates(dict):
    """Registry assigning consecutive integers to (generator, output symbol) pairs."""

    def of(self, key):
        index = self.get(key)
        if index is None:
            index = self[key] = len(self)
        return index


@dataclass
class DerivationSpace:
    algebra: AlgebraId
    window: int
    basis: tuple
    inner_dim: int
    outer_dim: int
    interior: tuple
    outer_representatives: tuple
    num_vars: int = 0
    num_rows: int = 0
    _coords: _Coordinates = field(default_factory=_Coordinates, repr=False)
    _spans: dict = field(default_factory=dict, repr=False)

    def restriction(self, d, generators=None):
        """Sparse coordinates of ``d`` on the given generators (default: the interior)."""
        apply = d.apply if hasattr(d, 'apply') else d
        vector = {}
        for g in generators or self.interior:
            for s, c in apply(g.as_element()).terms.items():
                vector[self._coords.of((g, s))] = c
        return vector

    def _basis_span(self, generators):
        key = tuple(generators)
        if key not in self._spans:
            self._spans[key] = SpanBasis(self.restriction(b, key) for b in self.basis)
        return self._spans[key]

    def contains_on(self, d, generators=None):
        """Whether some windowed derivation agrees with ``d`` on the generators."""
        generators = tuple(generators or self.interior)
        return self._basis_span(generators).contains(self.restriction(d, generators))

    def contains_on_interior(self, d):
        return self.contains_on(d, self.interior)

    def inner_span(self):
        return SpanBasis(self.restriction(InnerDerivation(g.as_element()))
                         for g in core_symbols(self.algebra, self.window))

    def as_dict(self):
        return {
            'algebra': self.algebra.value,
            'window': self.window,
            'unknowns': self.num_vars,
            'equations': self.num_rows,
            'nullspace_dim': len(self.basis),
            'interior': [str(s) for s in self.interior],
            'inner_dim': self.inner_dim,
            'outer_dim': self.outer_dim,
            'outer_representatives': [d.as_literal() for d in self.outer_representatives],
        }


@dataclass(frozen=True)
class InnerDerivation:
    """ad(element) for either algebra."""
    element: Element

    @property
    def algebra(self):
        return self.element.algebra

    def apply(self, x):
        return bracket(self.element, x)

    __call__ = apply


def _leibniz_system(algebra, window):
    core = core_symbols(algebra, window)
    span = core_symbols(algebra, 2 * window)
    system = LinearSystem()
    var = {}
    for g in core:
        for s in span:
            var[g, s] = system.add_variable(f"{g}->{s}")

    for g, h in combinations(core, 2):
        hit = bracket_symbols(g, h)
        if hit is not None and not in_core(hit[1], window):
            continue
        rows = {}

        def put(symbol, index, coeff):
            row = rows.setdefault(symbol, {})
            row[index] = row.get(index, 0) + coeff

        if hit is not None:
            c, u = hit
            for s in span:
                put(s, var[u, s], c)
        for s in span:
            left = bracket_symbols(s, h)
            if left is not None:
                put(left[1], var[g, s], -left[0])
            right = bracket_symbols(g, s)
            if right is not None:
                put(right[1], var[h, s], -right[0])
        for symbol in sorted(rows, key=lambda s: s.sort_key()):
            system.add_row(rows[symbol])
    return system, core, span


def solve_derivation_space(algebra, window):
    """All derivations of the window ``window`` and their inner/outer split.

    Unknowns are the coefficients of the images of core generators on the
    span of index bound ``2 * window``; Leibniz rows come from every pair of
    core generators whose bracket stays in the core. The split is measured on
    the interior subwindow.
    """
    algebra = AlgebraId(algebra)
    if window < 3:
        raise ValueError("derivation windows start at 3")
    system, core, span = _leibniz_system(algebra, window)
    logger.info("derivation space %s N=%d: %d unknowns, %d rows",
                algebra.value, window, system.num_vars, len(system))
    result = solve(system)

    basis = []
    for vector in result.nullspace:
        images = {}
        for n, g in enumerate(core):
            chunk = vector[n * len(span):(n + 1) * len(span)]
            images[g] = Element._canonical(algebra, dict(zip(span, chunk)))
        basis.append(GenericDerivation(algebra, window, MappingProxyType(images)))

    space = DerivationSpace(
        algebra=algebra,
        window=window,
        basis=tuple(basis),
        inner_dim=0,
        outer_dim=0,
        interior=tuple(interior_symbols(algebra, window)),
        outer_representatives=(),
        num_vars=system.num_vars,
        num_rows=len(system),
    )
    inner = space.inner_span()
    space.inner_dim = inner.rank
    representatives = [b for b in basis if inner.add(space.restriction(b))]
    space.outer_representatives = tuple(representatives)
    space.outer_dim = len(representatives)
    logger.info("derivation space %s N=%d: nullity %d, inner %d, outer %d",
                algebra.value, window, len(basis), space.inner_dim, space.outer_dim)
    return space


def shift_form_defects(d, interior=None):
    """Coordinates where a windowed thin derivation leaves the shift form.

    With alpha_1 the e_1-coefficient of d(e_1) and b_t the e_t-coefficient
    of d(e_2), the shift form asks that for 2 <= j <= interior the
    coefficient of e_t in d(e_j) is b_{t-j+2} (0 when t < j), plus
    (j - 2) alpha_1 on the diagonal. Returns ``(j, t, expected, actual)``
    tuples; empty means the invariant holds.
    """
    if d.algebra is not AlgebraId.THIN:
        raise AlgebraMismatch("the shift form is a thin-algebra invariant")
    top = interior if interior is not None else interior_bound(AlgebraId.THIN, d.window)
    top = min(top, d.window)
    alpha_1 = d.apply(e(1)).coefficient(symbol_e(1))
    second = d.apply(e(2))
    defects = []
    for j in range(2, top + 1):
        image = d.apply(e(j))
        for t in range(1, 2 * d.window + 1):
            expected = Fraction(0) if t < j else second.coefficient(symbol_e(t - j + 2))
            if t == j:
                expected += (j - 2) * alpha_1
            actual = image.coefficient(symbol_e(t))
            if actual != expected:
                defects.append((j, t, expected, actual))
    return defects
