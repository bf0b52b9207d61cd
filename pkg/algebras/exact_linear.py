"""
Exact sparse linear systems over the rationals.

Rows are sparse maps ``variable index -> Fraction``. Elimination keeps an
echelon form keyed by pivot; the pivot of an incoming row is its first
(lowest-index) non-zero entry once every known pivot has been eliminated
from it, so the output only depends on the row order of the input.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

logger = logging.getLogger(__name__)


class LinearSystem:
    """``num_vars`` unknowns, labelled rows ``sum(coeff * x_i) = rhs``."""

    def __init__(self, num_vars=0, rows=None, var_labels=None):
        self.num_vars = 0
        self.var_labels = []
        self._label_index = {}
        self.rows = []
        labels = list(var_labels or [])
        for i in range(max(num_vars, len(labels))):
            self.add_variable(labels[i] if i < len(labels) else f"x_{i}")
        for coeffs, rhs in rows or ():
            self.add_row(coeffs, rhs)

    def add_variable(self, label):
        if label in self._label_index:
            raise ValueError(f"duplicate variable label {label!r}")
        self._label_index[label] = self.num_vars
        self.var_labels.append(label)
        self.num_vars += 1
        return self.num_vars - 1

    def index_of(self, label):
        return self._label_index[label]

    def add_row(self, coeffs, rhs=0):
        """Append ``sum(coeffs[v] * v) = rhs``; ``v`` is an index or a label."""
        row = {}
        for var, coeff in coeffs.items():
            index = self._label_index[var] if isinstance(var, str) else var
            if not 0 <= index < self.num_vars:
                raise IndexError(f"variable {var!r} outside 0..{self.num_vars - 1}")
            coeff = Fraction(coeff)
            if coeff:
                row[index] = row.get(index, 0) + coeff
        self.rows.append(({k: v for k, v in row.items() if v}, Fraction(rhs)))

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"LinearSystem(num_vars={self.num_vars}, rows={len(self.rows)})"


class SolveStatus(str, Enum):
    UNIQUE = 'unique'
    AFFINE = 'affine'
    INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    particular: tuple = None
    nullspace: tuple = ()
    rank: int = 0
    var_labels: tuple = field(default=(), repr=False)

    @property
    def feasible(self):
        return self.status is not SolveStatus.INFEASIBLE

    def as_mapping(self):
        """Particular solution keyed by variable label."""
        if self.particular is None:
            return None
        return dict(zip(self.var_labels, self.particular))


class _Echelon:
    """Echelon rows keyed by pivot; every stored row has pivot coefficient 1."""

    def __init__(self):
        self.rows = {}
        self.inconsistent = False

    def reduce(self, row, rhs=Fraction(0)):
        row = dict(row)
        while row:
            pivot = min(row)
            known = self.rows.get(pivot)
            if known is None:
                return row, rhs, pivot
            coeff = row[pivot]
            prow, prhs = known
            for var, value in prow.items():
                updated = row.get(var, 0) - coeff * value
                if updated:
                    row[var] = updated
                else:
                    row.pop(var, None)
            rhs -= coeff * prhs
        return row, rhs, None

    def add(self, row, rhs=Fraction(0)):
        """Insert a row; returns True when it raised the rank."""
        row, rhs, pivot = self.reduce(row, rhs)
        if pivot is None:
            if rhs:
                self.inconsistent = True
            return False
        lead = row[pivot]
        self.rows[pivot] = ({var: value / lead for var, value in row.items()}, rhs / lead)
        return True

    def back_substitute(self):
        for pivot in sorted(self.rows, reverse=True):
            row, rhs = self.rows[pivot]
            for other in sorted(v for v in row if v != pivot and v in self.rows):
                coeff = row[other]
                orow, orhs = self.rows[other]
                for var, value in orow.items():
                    updated = row.get(var, 0) - coeff * value
                    if updated:
                        row[var] = updated
                    else:
                        row.pop(var, None)
                rhs -= coeff * orhs
            self.rows[pivot] = (row, rhs)


def _normalized(vector):
    lead = next((v for v in vector if v), None)
    if lead is None or lead == 1:
        return tuple(vector)
    return tuple(v / lead for v in vector)


def solve(system):
    """Particular solution (free variables at 0) plus a nullspace basis.

    Nullspace vectors are listed by ascending free variable and scaled so
    their first non-zero coordinate is 1.
    """
    echelon = _Echelon()
    for row, rhs in system.rows:
        echelon.add(row, rhs)
    echelon.back_substitute()
    n = system.num_vars
    rank = len(echelon.rows)

    columns = {}
    for pivot, (row, _) in echelon.rows.items():
        for var, value in row.items():
            if var != pivot:
                columns.setdefault(var, []).append((pivot, value))

    nullspace = []
    for free in range(n):
        if free in echelon.rows:
            continue
        vector = [Fraction(0)] * n
        vector[free] = Fraction(1)
        for pivot, value in columns.get(free, ()):
            vector[pivot] = -value
        nullspace.append(_normalized(vector))

    labels = tuple(system.var_labels)
    if echelon.inconsistent:
        logger.debug("%r is infeasible (rank %d)", system, rank)
        return SolveResult(SolveStatus.INFEASIBLE, None, tuple(nullspace), rank, labels)

    particular = [Fraction(0)] * n
    for pivot, (_, rhs) in echelon.rows.items():
        particular[pivot] = rhs
    status = SolveStatus.AFFINE if nullspace else SolveStatus.UNIQUE
    logger.debug("%r solved: %s, rank %d, nullity %d", system, status.value, rank, len(nullspace))
    return SolveResult(status, tuple(particular), tuple(nullspace), rank, labels)


def rank(system):
    echelon = _Echelon()
    for row, _ in system.rows:
        echelon.add(row)
    return len(echelon.rows)


def nullspace_dim(system):
    return system.num_vars - rank(system)


def residuals(system, vector):
    """Exact ``lhs - rhs`` of every row at ``vector``."""
    return [sum((c * vector[i] for i, c in row.items()), Fraction(0)) - rhs for row, rhs in system.rows]


def _sparse(vector):
    if isinstance(vector, dict):
        return {k: Fraction(v) for k, v in vector.items() if v}
    return {i: Fraction(v) for i, v in enumerate(vector) if v}


class SpanBasis:
    """Incrementally grown span of sparse vectors (dicts ``int -> Fraction`` or sequences)."""

    def __init__(self, vectors=()):
        self._echelon = _Echelon()
        for vector in vectors:
            self.add(vector)

    def add(self, vector):
        return self._echelon.add(_sparse(vector))

    def contains(self, vector):
        row, _, pivot = self._echelon.reduce(_sparse(vector))
        return pivot is None

    @property
    def rank(self):
        return len(self._echelon.rows)


def span_rank(vectors):
    return SpanBasis(vectors).rank


def in_span(vectors, vector):
    return SpanBasis(vectors).contains(vector)
