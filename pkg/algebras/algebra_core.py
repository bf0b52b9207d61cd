"""
Exact elements of W(2,2) and the thin Lie algebra.

Elements are finitely supported linear combinations of basis symbols with
``Fraction`` coefficients. The bracket is the bilinear extension of the
structure constants

    W(2,2):  [L_m, L_n] = (m - n) L_{m+n}
             [L_m, I_n] = (m - n) I_{m+n}
             [I_m, I_n] = 0

    thin:    [e_1, e_n] = e_{n+1}   (n >= 2), all other basis brackets 0.

Every value here is immutable; nothing in this module keeps global state
apart from the memoised basis bracket table.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from types import MappingProxyType

from .exceptions import AlgebraMismatch, ElementParseError, InvalidSymbol

logger = logging.getLogger(__name__)


class AlgebraId(str, Enum):
    W22 = 'w22'
    THIN = 'thin'


class Family(str, Enum):
    L = 'L'
    I = 'I'
    E = 'e'


FAMILY_ORDER = {Family.L: 0, Family.I: 1, Family.E: 2}
FAMILY_ALGEBRA = {Family.L: AlgebraId.W22, Family.I: AlgebraId.W22, Family.E: AlgebraId.THIN}


@dataclass(frozen=True)
class BasisSymbol:
    """One generator: L_m or I_m of W(2,2), or e_n of the thin algebra."""
    algebra: AlgebraId
    family: Family
    index: int

    def __post_init__(self):
        if FAMILY_ALGEBRA[self.family] is not self.algebra:
            raise InvalidSymbol(f"{self.family.value}-symbols do not belong to {self.algebra.value}")
        if self.family is Family.E and self.index < 1:
            raise InvalidSymbol(f"thin basis starts at e[1], got e[{self.index}]")

    def sort_key(self):
        return (FAMILY_ORDER[self.family], self.index)

    def as_element(self):
        return Element._canonical(self.algebra, {self: Fraction(1)})

    def __str__(self):
        return f"{self.family.value}[{self.index}]"


def symbol_L(m):
    return BasisSymbol(AlgebraId.W22, Family.L, m)


def symbol_I(m):
    return BasisSymbol(AlgebraId.W22, Family.I, m)


def symbol_e(n):
    return BasisSymbol(AlgebraId.THIN, Family.E, n)


def parse_rational(text):
    """Parse ``p`` or ``p/q`` (q > 0) into a Fraction; anything else is rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL.fullmatch(str(text).strip())
    if not match:
        raise ValueError(f"not a rational literal: {text!r}")
    denominator = int(match.group('den') or 1)
    if denominator == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(match.group('num')), denominator)


def format_rational(value):
    return str(Fraction(value))


_RATIONAL = re.compile(r'(?P<num>[+-]?\d+)(?:/(?P<den>\d+))?')


class Element:
    """A finitely supported combination of basis symbols of one algebra.

    Zero coefficients are never stored, so two elements are equal exactly when
    their term maps are equal. The zero element is the empty map.
    """

    __slots__ = ('algebra', '_terms', '_hash')

    def __init__(self, algebra, terms=None):
        algebra = AlgebraId(algebra)
        clean = {}
        for symbol, coeff in (terms or {}).items():
            if symbol.algebra is not algebra:
                raise AlgebraMismatch(f"{symbol} is not a {algebra.value} symbol")
            coeff = Fraction(coeff)
            if coeff:
                clean[symbol] = clean.get(symbol, 0) + coeff
        self.algebra = algebra
        self._terms = {s: c for s, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _canonical(cls, algebra, terms):
        # terms is owned by the new element and already type-checked
        element = cls.__new__(cls)
        element.algebra = algebra
        element._terms = {s: c for s, c in terms.items() if c}
        element._hash = None
        return element

    @classmethod
    def zero(cls, algebra):
        return cls._canonical(AlgebraId(algebra), {})

    @classmethod
    def from_terms(cls, algebra, pairs):
        """Build from ``(symbol, coefficient)`` pairs; repeated symbols are summed."""
        terms = {}
        for symbol, coeff in pairs:
            terms[symbol] = terms.get(symbol, 0) + Fraction(coeff)
        return cls(algebra, terms)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def support(self):
        return sorted(self._terms, key=BasisSymbol.sort_key)

    def sorted_terms(self):
        return [(symbol, self._terms[symbol]) for symbol in self.support]

    def coefficient(self, symbol):
        return self._terms.get(symbol, Fraction(0))

    def is_zero(self):
        return not self._terms

    def max_abs_index(self):
        return max((abs(s.index) for s in self._terms), default=0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, k):
        if isinstance(k, Element):
            return NotImplemented
        return scale(k, self)

    __rmul__ = __mul__

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({self.algebra.value}, {format_element(self)!r})"


def L(m, coeff=1):
    return Element._canonical(AlgebraId.W22, {symbol_L(m): Fraction(coeff)})


def I(m, coeff=1):  # noqa: E741
    return Element._canonical(AlgebraId.W22, {symbol_I(m): Fraction(coeff)})


def e(n, coeff=1):
    return Element._canonical(AlgebraId.THIN, {symbol_e(n): Fraction(coeff)})


def check_same_algebra(a, b):
    if a.algebra is not b.algebra:
        raise AlgebraMismatch(f"cannot combine {a.algebra.value} and {b.algebra.value} elements")


def add(a, b):
    check_same_algebra(a, b)
    terms = dict(a._terms)
    for symbol, coeff in b._terms.items():
        terms[symbol] = terms.get(symbol, 0) + coeff
    return Element._canonical(a.algebra, terms)


def scale(k, a):
    k = Fraction(k)
    if not k:
        return Element.zero(a.algebra)
    return Element._canonical(a.algebra, {s: k * c for s, c in a._terms.items()})


def linear_combination(algebra, pairs):
    """Sum of ``coeff * element`` over the pairs, all in ``algebra``."""
    algebra = AlgebraId(algebra)
    terms = {}
    for coeff, element in pairs:
        if element.algebra is not algebra:
            raise AlgebraMismatch(f"cannot combine {algebra.value} and {element.algebra.value} elements")
        coeff = Fraction(coeff)
        if not coeff:
            continue
        for symbol, c in element._terms.items():
            terms[symbol] = terms.get(symbol, 0) + coeff * c
    return Element._canonical(algebra, terms)


def extend_linearly(image_of, x):
    """Apply the linear map defined on basis symbols by ``image_of`` to ``x``."""
    return linear_combination(x.algebra, ((c, image_of(s)) for s, c in x._terms.items()))


@lru_cache(maxsize=None)
def bracket_symbols(s, t):
    """Bracket of two basis symbols as ``(coefficient, symbol)``, or None when it vanishes."""
    if s.algebra is not t.algebra:
        raise AlgebraMismatch(f"cannot bracket {s} with {t}")
    if s.algebra is AlgebraId.W22:
        if s.family is Family.I and t.family is Family.I:
            return None
        c = s.index - t.index
        if c == 0:
            return None
        family = Family.L if s.family is Family.L and t.family is Family.L else Family.I
        return Fraction(c), BasisSymbol(AlgebraId.W22, family, s.index + t.index)
    if s.index == 1 and t.index >= 2:
        return Fraction(1), symbol_e(t.index + 1)
    if t.index == 1 and s.index >= 2:
        return Fraction(-1), symbol_e(s.index + 1)
    return None


def bracket(a, b):
    check_same_algebra(a, b)
    terms = {}
    for (s, cs), (t, ct) in product(a._terms.items(), b._terms.items()):
        hit = bracket_symbols(s, t)
        if hit is None:
            continue
        c, u = hit
        terms[u] = terms.get(u, 0) + c * cs * ct
    return Element._canonical(a.algebra, terms)


def ad(a):
    """The inner derivation x -> [a, x] as a callable."""
    return lambda x: bracket(a, x)


# -- generator sets and identity sweeps ---------------------------------------

def w22_generators(lo, hi):
    return [L(m) for m in range(lo, hi + 1)] + [I(m) for m in range(lo, hi + 1)]


def thin_generators(hi, lo=1):
    return [e(n) for n in range(max(lo, 1), hi + 1)]


def antisymmetry_violations(generators):
    """Pairs (a, b) with [a, b] + [b, a] != 0."""
    return [
        (a, b) for a, b in product(generators, repeat=2)
        if bracket(a, b) + bracket(b, a)
    ]


def jacobi_violations(generators):
    """Triples breaking [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0, exhaustively."""
    violations = []
    for a, b, c in product(generators, repeat=3):
        total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        if total:
            violations.append((a, b, c))
    logger.debug("jacobi sweep over %d generators: %d violations", len(generators), len(violations))
    return violations


# -- text form ------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<symbol>(?P<family>[LIe])\[\s*(?P<index>[+-]?\d+)\s*\])"
    r"|(?P<number>\d+)"
    r"|(?P<op>[-+*/])"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match:
            raise ElementParseError(f"unexpected character {text[pos]!r}", text, pos)
        if match.group('symbol'):
            tokens.append(('symbol', (match.group('family'), int(match.group('index'))), pos))
        elif match.group('number'):
            tokens.append(('number', int(match.group('number')), pos))
        else:
            tokens.append((match.group('op'), None, pos))
        pos = match.end()
    tokens.append(('end', None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, algebra):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.algebra = AlgebraId(algebra) if algebra is not None else None

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        token = self.tokens[self.i]
        if token[0] != kind:
            wanted = {'symbol': 'a basis symbol', 'number': 'a number', 'end': 'end of input'}.get(kind, repr(kind))
            raise ElementParseError(f"expected {wanted}", self.text, token[2])
        self.i += 1
        return token

    def symbol(self):
        _, (family, index), pos = self.take('symbol')
        family = Family(family)
        algebra = FAMILY_ALGEBRA[family]
        if self.algebra is None:
            self.algebra = algebra
        elif algebra is not self.algebra:
            raise AlgebraMismatch(
                f"{family.value}[{index}] at position {pos} is not a {self.algebra.value} symbol")
        try:
            return BasisSymbol(algebra, family, index)
        except InvalidSymbol as exc:
            raise ElementParseError(str(exc), self.text, pos) from exc

    def coefficient(self):
        _, numerator, _ = self.take('number')
        if self.peek()[0] == '/':
            self.i += 1
            _, denominator, pos = self.take('number')
            if denominator == 0:
                raise ElementParseError("zero denominator", self.text, pos)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def term(self):
        if self.peek()[0] == 'number':
            coeff = self.coefficient()
            self.take('*')
        else:
            coeff = Fraction(1)
        return self.symbol(), coeff

    def parse(self):
        if [t[0] for t in self.tokens] == ['number', 'end'] and self.tokens[0][1] == 0:
            if self.algebra is None:
                raise ElementParseError("'0' needs an explicit algebra", self.text, 0)
            return Element.zero(self.algebra)
        pairs = []
        sign = 1
        if self.peek()[0] in ('+', '-'):
            sign = -1 if self.take(self.peek()[0])[0] == '-' else 1
        while True:
            symbol, coeff = self.term()
            pairs.append((symbol, sign * coeff))
            kind = self.peek()[0]
            if kind == 'end':
                break
            if kind not in ('+', '-'):
                raise ElementParseError("expected '+' or '-'", self.text, self.peek()[2])
            sign = -1 if self.take(kind)[0] == '-' else 1
        return Element.from_terms(self.algebra, pairs)


def parse_element(text, algebra=None):
    """Parse the element grammar, e.g. ``"2*L[3] - 1/2*I[-1]"`` or ``"e[1] + e[2]"``.

    With ``algebra=None`` the algebra is taken from the first symbol.
    """
    if not str(text).strip():
        raise ElementParseError("empty element literal", str(text), 0)
    return _Parser(str(text), algebra).parse()


def format_element(x):
    if not x._terms:
        return '0'
    parts = []
    for n, (symbol, coeff) in enumerate(x.sorted_terms()):
        if n == 0:
            parts.append(str(symbol) if coeff == 1 else f"{format_rational(coeff)}*{symbol}")
            continue
        magnitude = abs(coeff)
        body = str(symbol) if magnitude == 1 else f"{format_rational(magnitude)}*{symbol}"
        parts.append(f"{'-' if coeff < 0 else '+'} {body}")
    return ' '.join(parts)
