from fractions import Fraction

from rest_framework import serializers

from .algebra_core import AlgebraId, format_rational, parse_element, parse_rational
from .derivations import ThinDerivation, W22Derivation
from .exceptions import AlgebraError, LiteralError
from .two_local import OmegaParams, ThinTwoLocalMap, ValueTableOracle

ALGEBRA_CHOICES = [(a.value, a.value) for a in AlgebraId]


def _algebra_hint(field):
    data = getattr(field.root, 'initial_data', None)
    if isinstance(data, dict) and data.get('algebra') in AlgebraId._value2member_map_:
        return AlgebraId(data['algebra'])
    return None


class ElementField(serializers.CharField):
    """An element literal such as ``2*L[3] - I[-1]``.

    Parsed against the ``algebra`` of the enclosing payload when it has one,
    otherwise the algebra is taken from the literal itself.
    """

    def __init__(self, algebra=None, **kwargs):
        self.algebra = AlgebraId(algebra) if algebra else None
        kwargs.setdefault('trim_whitespace', True)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return parse_element(text, self.algebra or _algebra_hint(self))
        except AlgebraError as exc:
            raise serializers.ValidationError(str(exc))

    def to_representation(self, value):
        return str(value)


class RationalField(serializers.Field):
    """``"p"`` / ``"p/q"`` strings or integers, kept as ``Fraction``."""

    default_error_messages = {'invalid': 'Not a rational literal: {value!r}.'}

    def to_internal_value(self, data):
        if isinstance(data, bool) or not isinstance(data, (int, str, Fraction)):
            self.fail('invalid', value=data)
        try:
            return parse_rational(data)
        except ValueError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return format_rational(value)


class DerivationLiteralSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=ALGEBRA_CHOICES)
    inner = ElementField(algebra=AlgebraId.W22, required=False)
    outer = RationalField(required=False, default=Fraction(0))
    alpha = serializers.ListField(child=RationalField(), required=False, default=list)
    beta = serializers.ListField(child=RationalField(), required=False, default=list)

    def validate(self, data):
        if data['kind'] == AlgebraId.W22.value:
            if data.get('alpha') or data.get('beta'):
                raise serializers.ValidationError("alpha/beta belong to thin derivations.")
            inner = data.get('inner')
            data['derivation'] = W22Derivation(inner, data['outer']) if inner is not None \
                else W22Derivation(outer_coeff=data['outer'])
        else:
            if 'inner' in data or data.get('outer'):
                raise serializers.ValidationError("inner/outer belong to W(2,2) derivations.")
            data['derivation'] = ThinDerivation(data['alpha'], data['beta'])
        return data


class OmegaSerializer(serializers.Serializer):
    theta = serializers.ListField(child=RationalField(), required=False, default=list)
    q = serializers.IntegerField(required=False, default=3, min_value=3)

    def get_fields(self):
        fields = super().get_fields()
        # 'lambda' is a keyword, so it cannot be declared on the class body
        fields['lambda'] = RationalField(required=False, default=Fraction(0))
        return fields


class TwoLocalMapSerializer(serializers.Serializer):
    delta = DerivationLiteralSerializer(required=False)
    omega = OmegaSerializer(required=False)

    def validate(self, data):
        delta = data.get('delta', {}).get('derivation', ThinDerivation())
        if delta.algebra is not AlgebraId.THIN:
            raise serializers.ValidationError({'delta': "delta must be a thin derivation."})
        omega = data.get('omega', {})
        data['map'] = ThinTwoLocalMap(
            delta, OmegaParams(omega.get('theta', ()), omega.get('lambda', 0), omega.get('q', 3)))
        return data


def parse_table(lines, algebra=None):
    """``<element> => <element>`` lines as a ``ValueTableOracle``.

    Blank lines and lines starting with ``#`` are skipped. Without an
    explicit algebra the first symbol found decides it.
    """
    rows = []
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if '=>' not in line:
            raise LiteralError(f"line {number}: expected '<element> => <element>'")
        rows.append((number, *(part.strip() for part in line.split('=>', 1))))
    if algebra is None:
        for _, left, right in rows:
            for text in (left, right):
                if text != '0':
                    algebra = parse_element(text).algebra
                    break
            if algebra is not None:
                break
    if algebra is None:
        raise LiteralError("cannot tell the algebra of an all-zero table; pass it explicitly")
    table = {}
    for number, left, right in rows:
        try:
            x, value = parse_element(left, algebra), parse_element(right, algebra)
        except AlgebraError as exc:
            raise LiteralError(f"line {number}: {exc}") from exc
        if table.get(x, value) != value:
            raise LiteralError(f"line {number}: conflicting value for {x}")
        table[x] = value
    return ValueTableOracle(algebra, table)


class MapSourceSerializer(serializers.Serializer):
    """A map given either as a two-local literal or as table lines."""
    algebra = serializers.ChoiceField(choices=ALGEBRA_CHOICES, required=False)
    map = TwoLocalMapSerializer(required=False)
    table = serializers.ListField(child=serializers.CharField(), required=False)

    def validate(self, data):
        if ('map' in data) == ('table' in data):
            raise serializers.ValidationError("give exactly one of 'map' and 'table'.")
        if 'map' in data:
            data['oracle'] = data['map']['map']
        else:
            algebra = AlgebraId(data['algebra']) if 'algebra' in data else None
            try:
                data['oracle'] = parse_table(data['table'], algebra)
            except AlgebraError as exc:
                raise serializers.ValidationError({'table': str(exc)})
        return data


def _same_algebra(data, names):
    algebras = {data[name].algebra for name in names if name in data}
    if len(algebras) > 1:
        raise serializers.ValidationError("all elements must belong to one algebra.")
    return algebras.pop() if algebras else None


class BracketSerializer(serializers.Serializer):
    algebra = serializers.ChoiceField(choices=ALGEBRA_CHOICES)
    a = ElementField()
    b = ElementField()


class ApplySerializer(serializers.Serializer):
    derivation = DerivationLiteralSerializer()
    element = ElementField()

    def validate(self, data):
        if data['element'].algebra is not data['derivation']['derivation'].algebra:
            raise serializers.ValidationError("element and derivation live in different algebras.")
        return data


class WindowMixin(serializers.Serializer):
    window = serializers.IntegerField(min_value=1)


class SolveDerivationSerializer(WindowMixin):
    algebra = serializers.ChoiceField(choices=ALGEBRA_CHOICES)

    def validate_window(self, value):
        if value < 3:
            raise serializers.ValidationError("derivation windows start at 3.")
        return value


class WitnessSerializer(WindowMixin):
    algebra = serializers.ChoiceField(choices=ALGEBRA_CHOICES)
    x = ElementField()
    vx = ElementField()
    y = ElementField()
    vy = ElementField()

    def validate(self, data):
        _same_algebra(data, ('x', 'vx', 'y', 'vy'))
        return data


class TwoLocalVerifySerializer(MapSourceSerializer, WindowMixin):
    probes = serializers.ListField(child=ElementField(), allow_empty=False)


class DecomposeSerializer(WindowMixin):
    table = serializers.ListField(child=serializers.CharField())
    verify = serializers.ListField(child=ElementField(algebra=AlgebraId.W22), allow_empty=False)

    def validate_table(self, value):
        try:
            return parse_table(value, AlgebraId.W22)
        except AlgebraError as exc:
            raise serializers.ValidationError(str(exc))


class ClassifySerializer(MapSourceSerializer, WindowMixin):

    def validate_window(self, value):
        if value < 6:
            raise serializers.ValidationError("classification needs a window of at least 6.")
        return value
