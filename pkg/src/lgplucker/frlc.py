"""The contraction relations and their sparse 0/1 system matrix.

For every index tuple gamma of length n - 2 there is one linear relation:
the sum of the grade-n coordinates at gamma union each complementary pair
disjoint from gamma. Its coefficients are all 1 against the pair-adjacent
coordinate system (see :mod:`.symplectic`), so the full system is a 0/1
matrix with rows indexed by the (n-2)-tuples and columns by the n-tuples.
``vanishing_space`` inverts the viewpoint: given points it returns a basis
of every functional vanishing on their span, the numerical witness that
the relation rows are all there is.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from math import comb
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import linalg
from .combinatorics import IndexTuple, index_tuples, split_free_pairs, tuple_rank, validate_index_tuple
from .errors import ResourceCapError
from .fields import Field, QQ, Scalar
from .symplectic import ExteriorVector, arranged_coordinates, pair_adjacent_sign

BUILD_CAP = 7


@dataclass
class LinearFunctional:
    """Sparse linear functional on grade-n tensors.

    Coefficients are taken against the pair-adjacent coordinate system;
    evaluation folds in the sign twist so callers can feed ordinary
    exterior vectors.
    """

    n: int
    field: Field
    coeffs: Dict[IndexTuple, Scalar] = dataclass_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, val in self.coeffs.items():
            key = tuple(key)
            validate_index_tuple(key, 2 * self.n, length=self.n)
            val = self.field.coerce(val)
            if val:
                clean[key] = val
        self.coeffs = clean

    def evaluate(self, w: ExteriorVector) -> Scalar:
        if w.n != self.n or w.grade != self.n or w.field != self.field:
            raise ValueError("functional and vector live in different spaces")
        f = self.field
        total = f.zero
        for key, c in self.coeffs.items():
            v = w.coefficient(key)
            if not v:
                continue
            if pair_adjacent_sign(key, self.n) < 0:
                v = f.neg(v)
            total = f.add(total, f.mul(c, v))
        return total

    __call__ = evaluate


class PlueckerMatrix:
    """Sparse 0/1 matrix of the contraction relation system.

    Rows are indexed by the (n-2)-tuples and columns by the n-tuples over
    [1, 2n], both in canonical lexicographic order. The entry at
    (gamma, beta) is 1 exactly when beta contains gamma and the two extra
    indices form a complementary pair.
    """

    __slots__ = ("n", "row_tuples", "col_tuples", "row_supports", "_col_signs")

    def __init__(self, n: int, row_tuples: List[IndexTuple], col_tuples: List[IndexTuple], row_supports: List[Tuple[int, ...]]):
        self.n = n
        self.row_tuples = row_tuples
        self.col_tuples = col_tuples
        self.row_supports = row_supports
        self._col_signs: List[int] | None = None

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.row_tuples), len(self.col_tuples))

    @property
    def nnz(self) -> int:
        return sum(len(s) for s in self.row_supports)

    def entry(self, i: int, j: int) -> int:
        return 1 if j in self.row_supports[i] else 0

    def row_weight(self, i: int) -> int:
        return len(self.row_supports[i])

    def column_weights(self) -> List[int]:
        w = [0] * len(self.col_tuples)
        for support in self.row_supports:
            for j in support:
                w[j] += 1
        return w

    def dense(self) -> np.ndarray:
        a = np.zeros(self.shape, dtype=np.int8)
        for i, support in enumerate(self.row_supports):
            for j in support:
                a[i, j] = 1
        return a

    def to_exact(self, field: Field) -> linalg.ExactMatrix:
        rows = [{j: field.one for j in support} for support in self.row_supports]
        return linalg.ExactMatrix(len(self.row_tuples), len(self.col_tuples), field, rows)

    def _column_signs(self) -> List[int]:
        if self._col_signs is None:
            self._col_signs = [pair_adjacent_sign(t, self.n) for t in self.col_tuples]
        return self._col_signs

    def apply(self, w: ExteriorVector) -> List[Scalar]:
        """The relation values on w; equals the coordinates of contract(w).

        Both sides of the twist are folded in: the column coordinates of w
        and the row coordinates of the output are read in the
        pair-adjacent system, which is exactly what keeps this matrix 0/1.
        """
        if w.n != self.n or w.grade != self.n:
            raise ValueError(f"expected a grade-{self.n} vector over 2n = {2 * self.n}")
        f = w.field
        signs = self._column_signs()
        out = []
        for row_t, support in zip(self.row_tuples, self.row_supports):
            s = f.zero
            for j in support:
                v = w.coefficient(self.col_tuples[j])
                if not v:
                    continue
                if signs[j] < 0:
                    v = f.neg(v)
                s = f.add(s, v)
            if s and pair_adjacent_sign(row_t, self.n) < 0:
                s = f.neg(s)
            out.append(s)
        return out

    def __repr__(self) -> str:
        r, c = self.shape
        return f"PlueckerMatrix(n={self.n}, {r}x{c}, nnz={self.nnz})"


def contraction_functional(gamma: IndexTuple, n: int, field: Field = QQ) -> LinearFunctional:
    """The relation attached to gamma: coefficient 1 at gamma union each
    disjoint complementary pair."""
    gamma = tuple(gamma)
    validate_index_tuple(gamma, 2 * n, length=n - 2)
    support = set(gamma)
    coeffs: Dict[IndexTuple, Scalar] = {}
    for i in range(1, n + 1):
        ibar = 2 * n + 1 - i
        if i in support or ibar in support:
            continue
        coeffs[tuple(sorted(gamma + (i, ibar)))] = field.one
    return LinearFunctional(n, field, coeffs)


def build_plucker_matrix(n: int) -> PlueckerMatrix:
    """Assemble the full relation matrix for half-dimension n (2 <= n <= 7)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > BUILD_CAP:
        raise ResourceCapError(f"n = {n} exceeds the build cap {BUILD_CAP}")
    row_tuples = index_tuples(n - 2, 2 * n)
    col_tuples = index_tuples(n, 2 * n)
    supports: List[Tuple[int, ...]] = []
    for gamma in row_tuples:
        support = set(gamma)
        cols = []
        for i in range(1, n + 1):
            ibar = 2 * n + 1 - i
            if i in support or ibar in support:
                continue
            cols.append(tuple_rank(tuple(sorted(gamma + (i, ibar))), 2 * n))
        supports.append(tuple(sorted(cols)))
    return PlueckerMatrix(n, row_tuples, col_tuples, supports)


def row_weight_law(gamma: IndexTuple, n: int) -> int:
    """Predicted weight of row gamma: n minus its pair count minus its free count."""
    split = split_free_pairs(gamma, n)
    return n - len(split.pairs) - len(split.free)


def vanishing_space(points: Sequence[ExteriorVector], field: Field) -> List[LinearFunctional]:
    """Basis of all functionals vanishing on the span of the given points.

    Rows of the point matrix are pair-adjacent coordinate vectors, so the
    nullspace vectors are functional coefficient vectors in the same
    system, directly comparable with the 0/1 relation rows.
    """
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    n = points[0].n
    for w in points:
        if w.n != n or w.grade != n or w.field != field:
            raise ValueError("points must share one grade-n space and field")
    m = linalg.ExactMatrix.from_rows([arranged_coordinates(w) for w in points], field)
    cols = index_tuples(n, 2 * n)
    out = []
    for vec in linalg.nullspace(m):
        coeffs = {cols[j]: v for j, v in enumerate(vec) if v}
        out.append(LinearFunctional(n, field, coeffs))
    return out


def functional_matrix(functionals: Sequence[LinearFunctional], n: int, field: Field) -> linalg.ExactMatrix:
    """Stack functional coefficient vectors as rows of an exact matrix."""
    cols = {t: j for j, t in enumerate(index_tuples(n, 2 * n))}
    rows = []
    for h in functionals:
        if h.n != n or h.field != field:
            raise ValueError("functionals must share the given space and field")
        rows.append({cols[t]: v for t, v in h.coeffs.items()})
    return linalg.ExactMatrix(len(rows), comb(2 * n, n), field, rows)
