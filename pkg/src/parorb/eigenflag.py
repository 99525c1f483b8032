"""Flag-compatible eigenbases over an exact field.

Given a diagonalizable operator that maps every step of a full flag into
itself, there is a basis of eigenvectors v_1, ..., v_r with
span(v_1..v_j) = V_j for every j.  flag_compatible_eigenbasis constructs
one deterministically: at each step it takes the smallest eigenvalue whose
eigenspace meets V_j outside V_{j-1}, intersects the eigenspace with V_j,
and picks the lexicographically least row of the intersection's reduced
echelon basis.

All arithmetic is exact.  Entries may be any exact field type supporting
+, -, *, /, ==, and a total order, mixed with the ints 0 and 1; ints and
rational strings are coerced to Fraction, floats are rejected.  The shipped
and tested instantiation is the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FlagNotFull, FlagNotPreserved, NotDiagonalizable

Vector = tuple
Matrix = tuple


# === exact row-reduction toolkit ===========================================

def _coerce_entry(x):
    if isinstance(x, float):
        raise ValueError("floating-point entries are not exact: %r" % (x,))
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


def _row_reduce(rows):
    """Reduced row echelon form: (nonzero rows, pivot column list).

    Deterministic: columns scanned left to right, first nonzero row used as
    pivot, rows normalized to leading 1, eliminated above and below.
    """
    work = [list(row) for row in rows]
    if not work:
        return (), ()
    height, width = len(work), len(work[0])
    pivots = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, height):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        lead = work[rank][col]
        work[rank] = [x / lead for x in work[rank]]
        for i in range(height):
            if i != rank and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == height:
            break
    return tuple(tuple(row) for row in work[:rank]), tuple(pivots)


def _reduce_vector(rref_rows, pivots, vector):
    """Remainder of vector after elimination against an RREF basis."""
    residual = list(vector)
    for row, col in zip(rref_rows, pivots):
        factor = residual[col]
        if factor != 0:
            residual = [a - factor * b for a, b in zip(residual, row)]
    return tuple(residual)


def _is_zero_vector(vector) -> bool:
    return all(x == 0 for x in vector)


def _nullspace(rows):
    """Canonical basis of the right kernel, one vector per free column."""
    rref_rows, pivots = _row_reduce(rows)
    width = len(rows[0])
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * width
        vec[free] = Fraction(1)
        for row, col in zip(rref_rows, pivots):
            vec[col] = -row[free]
        basis.append(tuple(vec))
    return basis


def _mat_vec(matrix, vector):
    return tuple(sum(a * x for a, x in zip(row, vector)) for row in matrix)


def _mat_mul(left, right):
    cols = tuple(zip(*right))
    return tuple(
        tuple(sum(a * x for a, x in zip(row, col)) for col in cols) for row in left
    )


def _solve_square(coeff_rows, rhs_rows):
    """X with coeff·X = rhs, for invertible coeff (rank checked upstream)."""
    n = len(coeff_rows)
    augmented = [
        tuple(coeff_rows[i]) + tuple(rhs_rows[i]) for i in range(n)
    ]
    reduced, pivots = _row_reduce(augmented)
    if tuple(pivots) != tuple(range(n)):
        raise AssertionError("coefficient matrix unexpectedly singular")
    return tuple(row[n:] for row in reduced)


def _intersection_basis(rref_a, rref_b):
    """RREF basis of span(rref_a) ∩ span(rref_b)."""
    if not rref_a or not rref_b:
        return ()
    width = len(rref_a[0])
    columns = list(rref_a) + [tuple(-x for x in row) for row in rref_b]
    # stack as a width x (|a|+|b|) system: combinations summing to zero
    system = [tuple(col[i] for col in columns) for i in range(width)]
    spanning = []
    for coeffs in _nullspace(system):
        vec = [Fraction(0)] * width
        for c, row in zip(coeffs[: len(rref_a)], rref_a):
            if c != 0:
                vec = [v + c * x for v, x in zip(vec, row)]
        if not _is_zero_vector(vec):
            spanning.append(tuple(vec))
    reduced, _ = _row_reduce(spanning)
    return reduced


# === the operator and the construction ======================================

@dataclass(frozen=True)
class FlaggedOperator:
    """A square matrix together with a full flag given by spanning vectors.

    flag[j] is the vector extending V_j to V_{j+1}: V_j is the span of the
    first j flag vectors.  The matrix must map each V_j into itself and be
    diagonalizable over the field; both are checked exactly by
    flag_compatible_eigenbasis, not at construction.
    """

    matrix: Matrix
    flag: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "matrix",
            tuple(tuple(_coerce_entry(x) for x in row) for row in self.matrix),
        )
        object.__setattr__(
            self,
            "flag",
            tuple(tuple(_coerce_entry(x) for x in vec) for vec in self.flag),
        )

    @property
    def dimension(self) -> int:
        return len(self.matrix)


def flag_compatible_eigenbasis(op: FlaggedOperator):
    """Eigenvectors v_1..v_r with span(v_1..v_j) = V_j for every j.

    Raises FlagNotFull when the flag is not a complete independent chain,
    FlagNotPreserved when some step is not mapped into itself, and
    NotDiagonalizable when the eigenspaces do not fill the space (minimal
    polynomial not squarefree; a preserved full flag already forces it to
    split).

    >>> basis = flag_compatible_eigenbasis(FlaggedOperator(
    ...     matrix=((1, 1), (0, 2)), flag=((1, 0), (0, 1))))
    >>> [tuple(map(str, v)) for v in basis]
    [('1', '0'), ('1', '1')]
    """
    matrix = op.matrix
    r = len(matrix)
    if r == 0 or any(len(row) != r for row in matrix):
        raise ValueError("matrix must be square and nonempty")
    flag = op.flag
    if len(flag) != r or any(len(vec) != r for vec in flag):
        raise FlagNotFull(
            "need exactly %d flag vectors of length %d" % (r, r)
        )
    flag_rref, _ = _row_reduce(flag)
    if len(flag_rref) != r:
        raise FlagNotFull("flag vectors are linearly dependent")

    # conjugate into the flag basis; triangularity == flag preservation
    w_columns = tuple(tuple(flag[j][i] for j in range(r)) for i in range(r))
    conjugated = _solve_square(w_columns, _mat_mul(matrix, w_columns))
    for i in range(r):
        for j in range(i):
            if conjugated[i][j] != 0:
                raise FlagNotPreserved(
                    "flag step %d is not mapped into itself" % (j + 1)
                )

    eigenvalues = []
    for value in (conjugated[i][i] for i in range(r)):
        if not any(value == seen for seen in eigenvalues):
            eigenvalues.append(value)
    eigenvalues.sort()

    eigenspaces = {}
    total = 0
    for value in eigenvalues:
        shifted = tuple(
            tuple(matrix[i][j] - (value if i == j else 0) for j in range(r))
            for i in range(r)
        )
        basis, _ = _row_reduce(_nullspace(shifted))
        eigenspaces[value] = basis
        total += len(basis)
    if total != r:
        raise NotDiagonalizable(
            "eigenspaces span dimension %d of %d (minimal polynomial "
            "not squarefree)" % (total, r)
        )

    # prefix RREF bases of V_0 ⊂ V_1 ⊂ ... ⊂ V_r, computed once
    prefixes = [((), ())]
    for j in range(1, r + 1):
        prefixes.append(_row_reduce(flag[:j]))

    chosen = []
    for j in range(1, r + 1):
        step_rref, step_pivots = prefixes[j]
        prev_rref, prev_pivots = prefixes[j - 1]
        found = None
        for value in eigenvalues:
            basis = eigenspaces[value]
            if len(basis) == 1:
                inside = _is_zero_vector(
                    _reduce_vector(step_rref, step_pivots, basis[0])
                )
                meet = basis if inside else ()
            else:
                meet = _intersection_basis(step_rref, basis)
            candidates = [
                row
                for row in meet
                if not _is_zero_vector(_reduce_vector(prev_rref, prev_pivots, row))
            ]
            if candidates:
                found = min(candidates)
                break
        if found is None:
            raise AssertionError(
                "no eigenvector extends flag step %d; invariant checks "
                "should have caught this" % j
            )
        chosen.append(found)
    return chosen
