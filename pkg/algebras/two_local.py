"""
2-local derivations, executable.

A map Delta is 2-local when every pair (x, y) has a genuine derivation
agreeing with Delta at x and at y. Here that pair derivation (the witness)
is found by solving an exact linear system over a windowed parameter
family: ad(sum a_k L_k + b_k I_k) + lambda D on W(2,2), the alpha/beta
family on the thin algebra.

On top of the witness solver sit the checkers (2-locality on a probe set,
homogeneity, additivity), the W(2,2) decomposition Delta = Delta_{L_0,L_1} + mu D,
the thin-algebra classification delta + Omega, and checkers for the
intermediate kernel statements used on the way to the W(2,2) result.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement

from .algebra_core import (
    AlgebraId, Element, Family, I, L, bracket_symbols, e, format_element, format_rational,
    symbol_I, symbol_L, symbol_e,
)
from .derivations import ThinDerivation, W22Derivation, outer_D
from .exact_linear import LinearSystem, solve
from .exceptions import AlgebraMismatch, UnknownProbe, WindowTooSmall

logger = logging.getLogger(__name__)


def _require(algebra, x):
    if x.algebra is not algebra:
        raise AlgebraMismatch(f"expected a {algebra.value} element, got {x.algebra.value}")


def _jsonable(value):
    if isinstance(value, Element):
        return format_element(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, 'as_literal'):
        return value.as_literal()
    if hasattr(value, 'as_dict'):
        return value.as_dict()
    return value


# -- the Omega map and the classified form -------------------------------------

@dataclass(frozen=True)
class OmegaParams:
    """theta = (theta_2..theta_m), lambda (``lam``) and the fixed index q > 2.

    Trailing zeros of theta are trimmed, so ``m`` is derived.
    """
    theta: tuple = ()
    lam: Fraction = Fraction(0)
    q: int = 3

    def __post_init__(self):
        theta = [Fraction(t) for t in self.theta]
        while theta and not theta[-1]:
            theta.pop()
        object.__setattr__(self, 'theta', tuple(theta))
        object.__setattr__(self, 'lam', Fraction(self.lam))
        if self.q <= 2:
            raise ValueError(f"omega index q must exceed 2, got {self.q}")

    @property
    def m(self):
        return max(len(self.theta) + 1, 2)

    def canonical(self):
        """lambda = 0 leaves q inert; it is reported as 3."""
        return self if self.lam else OmegaParams(self.theta, 0, 3)

    def as_literal(self):
        return {
            'theta': [format_rational(t) for t in self.theta],
            'lambda': format_rational(self.lam),
            'q': self.q,
        }


def omega_apply(p, x):
    """Omega(x) for x = sum k_i e_i.

    k_1 != 0      -> sum_{i>=2} sum_j k_i theta_j e_{i+j-2}
    x == k_q e_q  -> lambda k_q e_q
    otherwise     -> 0
    """
    _require(AlgebraId.THIN, x)
    terms = x.terms
    if terms.get(symbol_e(1)):
        out = {}
        for symbol, k in terms.items():
            if symbol.index < 2:
                continue
            for j, theta in enumerate(p.theta, start=2):
                key = symbol_e(symbol.index + j - 2)
                out[key] = out.get(key, 0) + k * theta
        return Element._canonical(AlgebraId.THIN, out)
    if len(terms) == 1 and symbol_e(p.q) in terms:
        return Element._canonical(AlgebraId.THIN, {symbol_e(p.q): p.lam * terms[symbol_e(p.q)]})
    return Element.zero(AlgebraId.THIN)


class MapOracle(ABC):
    """A deterministic, possibly non-linear map on one algebra."""

    algebra = None

    @abstractmethod
    def __call__(self, x):
        """Value of the map at ``x``."""

    def describe(self):
        return type(self).__name__


@dataclass(frozen=True)
class ThinTwoLocalMap(MapOracle):
    """delta + Omega on the thin algebra."""
    delta: ThinDerivation = field(default_factory=ThinDerivation)
    omega: OmegaParams = field(default_factory=OmegaParams)

    algebra = AlgebraId.THIN

    def __call__(self, x):
        return self.delta.apply(x) + omega_apply(self.omega, x)

    def canonical(self):
        return ThinTwoLocalMap(self.delta, self.omega.canonical())

    def as_literal(self):
        return {'delta': self.delta.as_literal(), 'omega': self.omega.as_literal()}

    def describe(self):
        return 'two-local map'


class DerivationOracle(MapOracle):
    def __init__(self, derivation):
        self.derivation = derivation
        self.algebra = derivation.algebra

    def __call__(self, x):
        return self.derivation.apply(x)

    def describe(self):
        return 'derivation'


class FunctionOracle(MapOracle):
    def __init__(self, algebra, function, name='function'):
        self.algebra = AlgebraId(algebra)
        self.function = function
        self.name = name

    def __call__(self, x):
        return self.function(x)

    def describe(self):
        return self.name


class ValueTableOracle(MapOracle):
    """A finite table ``element -> value``; other inputs raise ``UnknownProbe`` (0 maps to 0)."""

    def __init__(self, algebra, table):
        self.algebra = AlgebraId(algebra)
        self.table = dict(table)
        for x, v in self.table.items():
            _require(self.algebra, x)
            _require(self.algebra, v)

    def __call__(self, x):
        if x in self.table:
            return self.table[x]
        if x.is_zero():
            return Element.zero(self.algebra)
        raise UnknownProbe(x)

    def describe(self):
        return f'table of {len(self.table)} entries'


def evaluate(map_, x):
    _require(map_.algebra, x)
    return map_(x)


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    input: object
    lhs: Element
    rhs: Element

    def as_dict(self):
        return {'input': _jsonable(self.input), 'lhs': format_element(self.lhs), 'rhs': format_element(self.rhs)}


@dataclass
class CheckReport:
    check: str
    probes: list
    counterexamples: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.counterexamples

    @property
    def status(self):
        return 'pass' if self.passed else 'fail'

    def as_dict(self):
        data = {
            'check': self.check,
            'status': self.status,
            'probes': _jsonable(list(self.probes)),
            'counterexamples': [c.as_dict() for c in self.counterexamples],
            'witnesses': _jsonable(list(self.witnesses)),
        }
        if self.details:
            data['details'] = _jsonable(self.details)
        return data


class FailureReason(str, Enum):
    INFEASIBLE = 'infeasible'
    RESIDUE_NOT_SCALAR_I0 = 'residue_not_scalar_i0'
    DISAGREEMENT = 'disagreement'
    AMBIGUOUS_LAMBDA = 'ambiguous_lambda'


@dataclass(frozen=True)
class Failure:
    reason: FailureReason
    probe: object = None
    expected: Element = None
    actual: Element = None
    detail: str = ''

    def as_dict(self):
        return {
            'reason': self.reason.value,
            'probe': _jsonable(self.probe),
            'expected': _jsonable(self.expected),
            'actual': _jsonable(self.actual),
            'detail': self.detail,
        }


# -- witness solving -----------------------------------------------------------

def _w22_labels(window):
    ks = range(-window, window + 1)
    return [f"a_{{{k}}}" for k in ks] + [f"b_{{{k}}}" for k in ks] + ['lambda']


def _thin_labels(window):
    return [f"alpha_{{{i}}}" for i in range(1, window + 1)] + [f"beta_{{{i}}}" for i in range(2, window + 1)]


def witness_labels(algebra, window):
    return _w22_labels(window) if AlgebraId(algebra) is AlgebraId.W22 else _thin_labels(window)


def _parametric_image(algebra, window, symbol):
    """Image of a basis symbol under the parameter family: ``{out symbol: {label: coeff}}``."""
    out = {}

    def put(target, label, coeff):
        row = out.setdefault(target, {})
        row[label] = row.get(label, 0) + coeff

    if algebra is AlgebraId.W22:
        for k in range(-window, window + 1):
            for generator, prefix in ((symbol_L(k), 'a'), (symbol_I(k), 'b')):
                hit = bracket_symbols(generator, symbol)
                if hit is not None:
                    put(hit[1], f"{prefix}_{{{k}}}", hit[0])
        if symbol.family is Family.I:
            put(symbol, 'lambda', 1)
        return out

    j = symbol.index
    if j == 1:
        for i in range(1, window + 1):
            put(symbol_e(i), f"alpha_{{{i}}}", 1)
        return out
    if j > 2:
        put(symbol, 'alpha_{1}', j - 2)
    for i in range(2, window + 1):
        put(symbol_e(i + j - 2), f"beta_{{{i}}}", 1)
    return out


def _parametric_apply(algebra, window, x):
    out = {}
    for symbol, coeff in x.terms.items():
        for target, row in _parametric_image(algebra, window, symbol).items():
            acc = out.setdefault(target, {})
            for label, c in row.items():
                acc[label] = acc.get(label, 0) + coeff * c
    return out


def _fits(x, window):
    if x.algebra is AlgebraId.W22:
        return x.max_abs_index() <= window
    return all(s.index <= window for s in x.terms)


def instantiate_witness(algebra, values):
    """The derivation named by a ``label -> value`` mapping."""
    if AlgebraId(algebra) is AlgebraId.W22:
        pairs = []
        for label, value in values.items():
            if value and label != 'lambda':
                family, k = label[0], int(label[3:-1])
                pairs.append((symbol_L(k) if family == 'a' else symbol_I(k), value))
        return W22Derivation(Element.from_terms(AlgebraId.W22, pairs), values.get('lambda', 0))
    alpha = [values[f"alpha_{{{i}}}"] for i in range(1, 1 + sum(1 for k in values if k.startswith('alpha')))]
    beta = [values[f"beta_{{{i}}}"] for i in range(2, 2 + sum(1 for k in values if k.startswith('beta')))]
    return ThinDerivation(alpha, beta)


@dataclass(frozen=True)
class WitnessParams:
    algebra: AlgebraId
    values: dict
    derivation: object
    free_parameters: int = 0

    def as_dict(self):
        return {
            'algebra': self.algebra.value,
            'derivation': self.derivation.as_literal(),
            'free_parameters': self.free_parameters,
        }


def witness_system(algebra, x, vx, y, vy, window, constraints=()):
    """The exact system "family(x) = vx, family(y) = vy" plus extra constraints."""
    algebra = AlgebraId(algebra)
    for value in (x, vx, y, vy):
        _require(algebra, value)
        if not _fits(value, window):
            raise WindowTooSmall(f"{format_element(value)} does not fit in window {window}")
    system = LinearSystem(var_labels=witness_labels(algebra, window))
    for source, target in ((x, vx), (y, vy)):
        image = _parametric_apply(algebra, window, source)
        for symbol in sorted(set(image) | set(target.terms), key=lambda s: s.sort_key()):
            system.add_row(image.get(symbol, {}), target.coefficient(symbol))
    for coeffs, rhs in constraints:
        system.add_row(coeffs, rhs)
    return system


def witness_find(algebra, x, vx, y, vy, window, constraints=()):
    """A derivation d of the windowed family with d(x) = vx and d(y) = vy, or None.

    ``constraints`` are extra ``({label: coeff}, rhs)`` rows on the witness
    parameters. The returned witness is the solver's particular solution.
    """
    algebra = AlgebraId(algebra)
    system = witness_system(algebra, x, vx, y, vy, window, constraints)
    result = solve(system)
    if not result.feasible:
        logger.debug("no witness for (%s, %s)", x, y)
        return None
    values = result.as_mapping()
    return WitnessParams(algebra, values, instantiate_witness(algebra, values), len(result.nullspace))


# -- checkers ------------------------------------------------------------------

def is_two_local_on_set(map_, probes, window):
    """Witness search for every unordered pair of probes (a probe paired with itself included)."""
    probes = list(probes)
    values = [evaluate(map_, x) for x in probes]
    report = CheckReport('two_local', probes, details={'window': window, 'pairs': 0})
    for i, j in combinations_with_replacement(range(len(probes)), 2):
        x, y = probes[i], probes[j]
        witness = witness_find(map_.algebra, x, values[i], y, values[j], window)
        report.details['pairs'] += 1
        if witness is None:
            report.counterexamples.append(Counterexample([x, y], values[i], values[j]))
        else:
            report.witnesses.append({'pair': [x, y], 'witness': witness.derivation})
    if not report.passed:
        logger.warning("2-locality fails on %d of %d pairs", len(report.counterexamples), report.details['pairs'])
    return report


def check_homogeneity(map_, samples):
    samples = [(Fraction(k), x) for k, x in samples]
    report = CheckReport('homogeneity', [{'k': k, 'x': x} for k, x in samples])
    for k, x in samples:
        lhs = evaluate(map_, k * x)
        rhs = k * evaluate(map_, x)
        if lhs != rhs:
            report.counterexamples.append(Counterexample({'k': k, 'x': x}, lhs, rhs))
    return report


def check_additivity(map_, samples):
    """Pairs where map(x + y) != map(x) + map(y), with both sides."""
    found = []
    for x, y in samples:
        lhs = evaluate(map_, x + y)
        rhs = evaluate(map_, x) + evaluate(map_, y)
        if lhs != rhs:
            found.append(Counterexample([x, y], lhs, rhs))
    return found


def additivity_report(map_, samples):
    samples = list(samples)
    return CheckReport('additivity', [list(pair) for pair in samples], check_additivity(map_, samples))


# -- W(2,2): every 2-local derivation is Delta_{L_0,L_1} + mu D -----------------

@dataclass(frozen=True)
class Decomposition:
    derivation: W22Derivation
    base: W22Derivation
    mu: Fraction
    probes: tuple = ()

    def as_dict(self):
        return {
            'derivation': self.derivation.as_literal(),
            'base': self.base.as_literal(),
            'mu': format_rational(self.mu),
            'probes': _jsonable(list(self.probes)),
        }


def decompose_w22_two_local(map_, window, verify_probes):
    """Rebuild a W(2,2) 2-local map as a derivation, or explain why it is not one.

    1. witness d_0 at (L_0, L_1);
    2. mu from map(I_0) - d_0(I_0), which must be mu * I_0;
    3. d = d_0 + mu D, compared with the map on every verify probe.
    """
    if map_.algebra is not AlgebraId.W22:
        raise AlgebraMismatch("decomposition works on W(2,2) maps")
    witness = witness_find(AlgebraId.W22, L(0), map_(L(0)), L(1), map_(L(1)), window)
    if witness is None:
        logger.warning("no derivation matches the map at (L[0], L[1])")
        return Failure(FailureReason.INFEASIBLE, [L(0), L(1)], detail='no witness at (L[0], L[1])')
    base = witness.derivation

    residue = map_(I(0)) - base.apply(I(0))
    mu = residue.coefficient(symbol_I(0))
    if residue != mu * I(0):
        logger.warning("residue at I[0] is %s, not a multiple of I[0]", residue)
        return Failure(FailureReason.RESIDUE_NOT_SCALAR_I0, I(0), mu * I(0), residue,
                       'map(I[0]) - d0(I[0]) is not a multiple of I[0]')

    candidate = base + W22Derivation(Element.zero(AlgebraId.W22), mu)
    probes = tuple(verify_probes)
    for x in probes:
        expected = map_(x)
        actual = candidate.apply(x)
        if expected != actual:
            logger.warning("decomposition disagrees at %s", x)
            return Failure(FailureReason.DISAGREEMENT, x, expected, actual,
                           'map and reconstructed derivation differ')
    return Decomposition(candidate, base, mu, probes)


# -- thin algebra: every 2-local derivation is delta + Omega --------------------

def _composite_probes(window, q):
    probes = [
        e(1) + e(2) + e(3),
        2 * e(1) + 5 * e(4),
        e(2) + e(3),
        e(3) + e(4),
        3 * e(q),
        -e(q),
        e(1) + e(window),
        -e(1) + e(2) - 2 * e(3),
        e(2) + 2 * e(q),
    ]
    return [p for p in probes if p]


def classify_thin_two_local(map_, window, extra_probes=()):
    """Recover (delta, theta, lambda, q) from a thin-algebra map.

    delta is the witness at (e_1, e_2); theta is read off the residual at
    e_1 + e_2 and confirmed at every e_1 + e_j; (q, lambda) come from the
    residuals at single generators, at most one of which may be non-zero.
    Composite probes then cross-check the reconstruction.

    lambda is only seen at single generators e_3 .. e_window. A map whose
    lambda term sits at q > window is classified with lambda = 0; the result
    agrees with it everywhere except on multiples of that e_q.
    """
    if map_.algebra is not AlgebraId.THIN:
        raise AlgebraMismatch("classification works on thin-algebra maps")
    if window < 6:
        raise WindowTooSmall("classification needs a window of at least 6")

    witness = witness_find(AlgebraId.THIN, e(1), map_(e(1)), e(2), map_(e(2)), window)
    if witness is None:
        return Failure(FailureReason.INFEASIBLE, [e(1), e(2)], detail='no witness at (e[1], e[2])')
    delta = witness.derivation

    def residual(x):
        return map_(x) - delta.apply(x)

    head = residual(e(1) + e(2))
    if head.coefficient(symbol_e(1)):
        return Failure(FailureReason.DISAGREEMENT, e(1) + e(2), None, head,
                       'residual at e[1] + e[2] has an e[1] component')
    top = max((s.index for s in head.terms), default=1)
    theta = [head.coefficient(symbol_e(j)) for j in range(2, top + 1)]
    omega = OmegaParams(theta)
    for j in range(3, window + 1):
        probe = e(1) + e(j)
        got = residual(probe)
        if got != omega_apply(omega, probe):
            return Failure(FailureReason.DISAGREEMENT, probe, omega_apply(omega, probe), got,
                           'residual at e[1] + e[j] is not the shifted theta pattern')

    singles = []
    for j in range(3, window + 1):
        got = residual(e(j))
        if not got:
            continue
        c = got.coefficient(symbol_e(j))
        if got != c * e(j):
            return Failure(FailureReason.DISAGREEMENT, e(j), c * e(j), got,
                           'residual at a single generator is not a multiple of it')
        singles.append((j, c, got))
    if len(singles) > 1:
        (j1, _, g1), (j2, _, g2) = singles[:2]
        logger.warning("non-zero residuals at e[%d] and e[%d]", j1, j2)
        return Failure(FailureReason.AMBIGUOUS_LAMBDA, [e(j1), e(j2)], g1, g2,
                       'more than one single generator carries a lambda term')
    q, lam = (singles[0][0], singles[0][1]) if singles else (3, Fraction(0))
    if not singles:
        logger.debug("no lambda term on e[3]..e[%d]", window)

    candidate = ThinTwoLocalMap(delta, OmegaParams(theta, lam, q)).canonical()
    for probe in list(_composite_probes(window, q)) + list(extra_probes):
        expected = map_(probe)
        actual = candidate(probe)
        if expected != actual:
            return Failure(FailureReason.DISAGREEMENT, probe, expected, actual,
                           'reconstructed map differs on a composite probe')
    return candidate


# -- kernel consequences on W(2,2) ---------------------------------------------

def _pin_zero(labels):
    return [({label: 1}, 0) for label in labels]


def _vacuous(report, holds):
    report.details['hypothesis_holds'] = holds
    return report


def check_l_kernel_witness(map_, index, y, window):
    """map(L_i) = 0 admits a witness at (L_i, y) whose inner part lies in span{L_i, I_i}."""
    x = L(index)
    report = CheckReport('l_kernel_witness', [x, y], details={'index': index})
    if map_(x):
        return _vacuous(report, False)
    pinned = _pin_zero(f"{p}_{{{k}}}" for p in 'ab' for k in range(-window, window + 1) if k != index)
    witness = witness_find(AlgebraId.W22, x, Element.zero(AlgebraId.W22), y, map_(y), window, pinned)
    if witness is None:
        report.counterexamples.append(Counterexample([x, y], Element.zero(AlgebraId.W22), map_(y)))
    else:
        report.witnesses.append({'pair': [x, y], 'witness': witness.derivation})
    return _vacuous(report, True)


def check_i0_kernel_witness(map_, y, window):
    """map(I_0) = 0 admits a witness at (I_0, y) with lambda = 0 and no L_k, k != 0."""
    x = I(0)
    report = CheckReport('i0_kernel_witness', [x, y])
    if map_(x):
        return _vacuous(report, False)
    pinned = _pin_zero(['lambda'] + [f"a_{{{k}}}" for k in range(-window, window + 1) if k])
    witness = witness_find(AlgebraId.W22, x, Element.zero(AlgebraId.W22), y, map_(y), window, pinned)
    if witness is None:
        report.counterexamples.append(Counterexample([x, y], Element.zero(AlgebraId.W22), map_(y)))
    else:
        report.witnesses.append({'pair': [x, y], 'witness': witness.derivation})
    return _vacuous(report, True)


def check_l_kernel_propagation(map_, indices):
    """map(L_0) = map(L_1) = 0 forces map(L_i) = 0 on the given indices."""
    probes = [L(i) for i in indices]
    report = CheckReport('l_kernel_propagation', probes)
    if map_(L(0)) or map_(L(1)):
        return _vacuous(report, False)
    for x in probes:
        value = map_(x)
        if value:
            report.counterexamples.append(Counterexample(x, value, Element.zero(AlgebraId.W22)))
    return _vacuous(report, True)


def check_i_part_scaling(map_, probes, indices, window):
    """If map kills every L_i (i in ``indices``), map(x) = mu_x * (I-part of x).

    mu_x is checked to be one scalar for all i: the witness at (L_i, x)
    restricted to span{L_i, I_i} with lambda pinned to mu_x must exist for
    every i in ``indices``.
    """
    probes = list(probes)
    report = CheckReport('i_part_scaling', probes, details={'indices': list(indices), 'mu': {}})
    if any(map_(L(i)) for i in indices):
        return _vacuous(report, False)
    for x in probes:
        value = map_(x)
        i_part = outer_D(x)
        lead = i_part.support[0] if i_part else None
        mu = value.coefficient(lead) / i_part.coefficient(lead) if lead else Fraction(0)
        if value != mu * i_part:
            report.counterexamples.append(Counterexample(x, value, mu * i_part))
            continue
        report.details['mu'][format_element(x)] = mu
        for i in indices:
            pinned = _pin_zero(f"{p}_{{{k}}}" for p in 'ab' for k in range(-window, window + 1) if k != i)
            pinned.append(({'lambda': 1}, mu))
            if witness_find(AlgebraId.W22, L(i), Element.zero(AlgebraId.W22), x, value, window, pinned) is None:
                report.counterexamples.append(Counterexample([L(i), x], value, mu * i_part))
    return _vacuous(report, True)


def check_lp_i2p_witness(map_, p, y, window, indices=None):
    """With L_i (i in ``indices``) and I_0 killed, the witness at (L_p + I_2p, y)
    can be taken as ad(xi L_p + eta I_p + xi I_2p): lambda = 0, no other support."""
    if not p or 2 * abs(p) > window:
        raise WindowTooSmall(f"L[{p}] + I[{2 * p}] needs 0 < 2|p| <= window")
    indices = range(-window, window + 1) if indices is None else indices
    x = L(p) + I(2 * p)
    report = CheckReport('lp_i2p_witness', [x, y], details={'p': p})
    if map_(I(0)) or any(map_(L(i)) for i in indices):
        return _vacuous(report, False)
    pinned = _pin_zero(['lambda'] + [f"a_{{{k}}}" for k in range(-window, window + 1) if k != p]
                       + [f"b_{{{k}}}" for k in range(-window, window + 1) if k not in (p, 2 * p)])
    pinned.append(({f"a_{{{p}}}": 1, f"b_{{{2 * p}}}": -1}, 0))
    witness = witness_find(AlgebraId.W22, x, map_(x), y, map_(y), window, pinned)
    if witness is None:
        report.counterexamples.append(Counterexample([x, y], map_(x), map_(y)))
    else:
        report.witnesses.append({'pair': [x, y], 'witness': witness.derivation})
    return _vacuous(report, True)


def check_vanishing_on_kernel(map_, probes):
    """map(L_0) = map(L_1) = map(I_0) = 0 forces map to vanish on the probes."""
    probes = list(probes)
    report = CheckReport('vanishing_on_kernel', probes)
    if map_(L(0)) or map_(L(1)) or map_(I(0)):
        return _vacuous(report, False)
    for x in probes:
        value = map_(x)
        if value:
            report.counterexamples.append(Counterexample(x, value, Element.zero(AlgebraId.W22)))
    return _vacuous(report, True)
