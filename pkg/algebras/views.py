import logging

from rest_framework import permissions, status
from rest_framework.decorators import api_view, permission_classes
from rest_framework.response import Response
from rest_framework.views import APIView

from . import reports
from .algebra_core import AlgebraId, check_same_algebra
from .exceptions import AlgebraError
from .serializers import (
    ApplySerializer, BracketSerializer, ClassifySerializer, DecomposeSerializer,
    SolveDerivationSerializer, TwoLocalVerifySerializer, WitnessSerializer,
)

logger = logging.getLogger(__name__)


class ComputationView(APIView):
    """POST a payload, get a JSON report.

    400 for invalid payloads, 422 when the computation ran but the
    mathematical check failed, 200 otherwise.
    """
    serializer_class = None
    permission_classes = [permissions.AllowAny]

    def get_serializer(self, *args, **kwargs):
        return self.serializer_class(*args, **kwargs)

    def compute(self, data):
        raise NotImplementedError

    def post(self, request, *args, **kwargs):
        serializer = self.get_serializer(data=request.data)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            report = self.compute(serializer.validated_data)
        except AlgebraError as exc:
            logger.info("%s rejected: %s", type(self).__name__, exc)
            return Response({"detail": str(exc)}, status=status.HTTP_400_BAD_REQUEST)
        return Response(
            report.data,
            status=status.HTTP_200_OK if report.passed else status.HTTP_422_UNPROCESSABLE_ENTITY,
        )


class BracketView(ComputationView):
    """Bracket of two elements of one algebra."""
    serializer_class = BracketSerializer

    def compute(self, data):
        check_same_algebra(data['a'], data['b'])
        return reports.bracket_report(data['a'], data['b'])


class ApplyView(ComputationView):
    """Apply a derivation literal to an element."""
    serializer_class = ApplySerializer

    def compute(self, data):
        return reports.apply_report(data['derivation']['derivation'], data['element'])


class SolveDerivationView(ComputationView):
    """Derivation space of a window with its inner/outer split."""
    serializer_class = SolveDerivationSerializer

    def compute(self, data):
        return reports.derivation_space_report(AlgebraId(data['algebra']), data['window'])


class WitnessView(ComputationView):
    """A derivation matching two prescribed values, if one exists."""
    serializer_class = WitnessSerializer

    def compute(self, data):
        return reports.witness_report(
            AlgebraId(data['algebra']), data['x'], data['vx'], data['y'], data['vy'], data['window'])


class TwoLocalVerifyView(ComputationView):
    """Witness search over every pair of a probe set."""
    serializer_class = TwoLocalVerifySerializer

    def compute(self, data):
        return reports.two_local_report(data['oracle'], data['probes'], data['window'])


class DecomposeView(ComputationView):
    """Rebuild a W(2,2) value table as a derivation."""
    serializer_class = DecomposeSerializer

    def compute(self, data):
        return reports.decompose_report(data['table'], data['window'], data['verify'])


class ClassifyView(ComputationView):
    """Recover delta + Omega from a thin-algebra map."""
    serializer_class = ClassifySerializer

    def compute(self, data):
        return reports.classify_report(data['oracle'], data['window'])


class ReproduceView(APIView):
    """Run one reproduce case (or ``all``) with the configured seed."""
    permission_classes = [permissions.AllowAny]

    def get(self, request, case):
        if case not in reports.case_ids():
            return Response(
                {"detail": f"Unknown case. Choose from: {', '.join(reports.case_ids())}."},
                status=status.HTTP_404_NOT_FOUND,
            )
        report = reports.reproduce(case)
        return Response(
            report.data,
            status=status.HTTP_200_OK if report.passed else status.HTTP_422_UNPROCESSABLE_ENTITY,
        )


@api_view(['GET'])
@permission_classes([permissions.AllowAny])
def api_root(request, format=None):
    """API root view that provides links to all the API endpoints."""
    return Response({
        'bracket': request.build_absolute_uri('bracket/'),
        'apply': request.build_absolute_uri('apply/'),
        'solve-der': request.build_absolute_uri('solve-der/'),
        'witness': request.build_absolute_uri('witness/'),
        'verify-2local': request.build_absolute_uri('verify-2local/'),
        'decompose-w22': request.build_absolute_uri('decompose-w22/'),
        'classify-thin': request.build_absolute_uri('classify-thin/'),
        'reproduce': {case: request.build_absolute_uri(f'reproduce/{case}/') for case in reports.case_ids()},
    })
