"""The symplectic pairing, exterior vectors and Lagrangian subspaces.

Basis convention: e_1, ..., e_{2n} with <e_i, e_j> = +1 exactly when
j = 2n - i + 1 and i < j, so index i is paired with 2n - i + 1 and the
form is alternating. Exterior coordinates are stored against sorted index
tuples (the coefficient of e_{a_1} ^ ... ^ e_{a_k} with a_1 < ... < a_k);
a coordinate addressed by an unsorted word is the sorted coordinate times
the parity of the sorting permutation.

The contraction map pairs off two wedge factors through the form. Written
against sorted tuples its coefficients carry permutation signs, but they
all become +1 in the "pair-adjacent" coordinate system, where each index
word is rearranged as (free indices ascending, then each complementary
pair (i, 2n-i+1) adjacent, pairs ascending). ``pair_adjacent_sign`` is the
parity of that rearrangement; matrix-level code works against these
coordinates so the contraction system keeps 0/1 coefficients.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from math import prod
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from . import linalg
from .combinatorics import (
    IndexTuple,
    index_tuples,
    sorting_sign,
    split_free_pairs,
    validate_index_tuple,
)
from .errors import ResourceCapError
from .fields import Field, GF, Scalar

ENUMERATION_CAP = 10**6


def basis_pairing(i: int, j: int, n: int) -> int:
    """<e_i, e_j>: +1 if j = 2n - i + 1 and i < j, -1 if i > j, else 0."""
    if not (1 <= i <= 2 * n and 1 <= j <= 2 * n):
        raise ValueError(f"indices ({i}, {j}) outside [1, {2 * n}]")
    if i + j != 2 * n + 1:
        return 0
    return 1 if i < j else -1


def gram_matrix(n: int) -> List[List[int]]:
    """The 2n x 2n Gram matrix of the basis pairing."""
    return [[basis_pairing(i, j, n) for j in range(1, 2 * n + 1)] for i in range(1, 2 * n + 1)]


def pairing(x: Sequence, y: Sequence, n: int, field: Field) -> Scalar:
    """Bilinear extension of the basis pairing to coordinate vectors."""
    if len(x) != 2 * n or len(y) != 2 * n:
        raise ValueError(f"vectors must have length {2 * n}")
    s = field.zero
    for i in range(1, n + 1):
        ibar = 2 * n + 1 - i
        term = field.sub(
            field.mul(field.coerce(x[i - 1]), field.coerce(y[ibar - 1])),
            field.mul(field.coerce(x[ibar - 1]), field.coerce(y[i - 1])),
        )
        s = field.add(s, term)
    return s


class ExteriorVector:
    """Sparse exterior tensor of a fixed grade with exact coefficients."""

    __slots__ = ("n", "grade", "field", "coords")

    def __init__(self, n: int, grade: int, field: Field, coords: Dict[IndexTuple, Scalar] | None = None):
        if not 0 <= grade <= 2 * n:
            raise ValueError(f"grade {grade} outside [0, {2 * n}]")
        clean: Dict[IndexTuple, Scalar] = {}
        for key, val in (coords or {}).items():
            key = tuple(key)
            validate_index_tuple(key, 2 * n, length=grade)
            val = field.coerce(val)
            if val:
                clean[key] = val
        self.n = n
        self.grade = grade
        self.field = field
        self.coords = clean

    @classmethod
    def basis(cls, n: int, field: Field, alpha: IndexTuple) -> "ExteriorVector":
        alpha = tuple(alpha)
        return cls(n, len(alpha), field, {alpha: field.one})

    def coefficient(self, alpha: IndexTuple) -> Scalar:
        return self.coords.get(tuple(alpha), self.field.zero)

    def coefficient_word(self, word: Tuple[int, ...]) -> Scalar:
        """Coordinate addressed by a possibly unsorted word, sign tracked."""
        sign = sorting_sign(tuple(word))
        if sign == 0:
            return self.field.zero
        val = self.coords.get(tuple(sorted(word)), self.field.zero)
        return val if sign > 0 else self.field.neg(val)

    def is_zero(self) -> bool:
        return not self.coords

    def _compatible(self, other: "ExteriorVector") -> None:
        if (self.n, self.grade, self.field) != (other.n, other.grade, other.field):
            raise ValueError("incompatible exterior vectors")

    def __add__(self, other: "ExteriorVector") -> "ExteriorVector":
        self._compatible(other)
        coords = dict(self.coords)
        for k, v in other.coords.items():
            coords[k] = self.field.add(coords.get(k, self.field.zero), v)
        return ExteriorVector(self.n, self.grade, self.field, coords)

    def __sub__(self, other: "ExteriorVector") -> "ExteriorVector":
        return self + (-other)

    def __neg__(self) -> "ExteriorVector":
        return self.scaled(self.field.neg(self.field.one))

    def scaled(self, s: Scalar) -> "ExteriorVector":
        s = self.field.coerce(s)
        return ExteriorVector(
            self.n, self.grade, self.field, {k: self.field.mul(v, s) for k, v in self.coords.items()}
        )

    def __rmul__(self, s) -> "ExteriorVector":
        return self.scaled(s)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExteriorVector)
            and (self.n, self.grade, self.field) == (other.n, other.grade, other.field)
            and self.coords == other.coords
        )

    def __repr__(self) -> str:
        terms = ", ".join(f"{k}: {v}" for k, v in sorted(self.coords.items()))
        return f"ExteriorVector(n={self.n}, grade={self.grade}, {{{terms}}})"


def _det(rows: List[List[Scalar]], field: Field) -> Scalar:
    """Determinant by exact Gaussian elimination with division."""
    k = len(rows)
    rows = [list(r) for r in rows]
    det = field.one
    for c in range(k):
        piv = -1
        for r in range(c, k):
            if rows[r][c]:
                piv = r
                break
        if piv < 0:
            return field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = field.neg(det)
        det = field.mul(det, rows[c][c])
        inv = field.inv(rows[c][c])
        for r in range(c + 1, k):
            if rows[r][c]:
                f = field.mul(rows[r][c], inv)
                rows[r] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[r], rows[c])]
    return det


def wedge(vectors: Sequence[Sequence], n: int, field: Field) -> ExteriorVector:
    """Wedge of coordinate vectors; coefficient at alpha is the alpha-minor.

    Linearly dependent inputs simply give the zero vector.
    """
    vecs = [[field.coerce(v) for v in row] for row in vectors]
    k = len(vecs)
    if k > 2 * n:
        raise ValueError(f"cannot wedge {k} vectors in ambient dimension {2 * n}")
    for row in vecs:
        if len(row) != 2 * n:
            raise ValueError(f"vectors must have length {2 * n}")
    coords: Dict[IndexTuple, Scalar] = {}
    for alpha in index_tuples(k, 2 * n):
        minor = [[vec[a - 1] for a in alpha] for vec in vecs]
        d = _det(minor, field)
        if d:
            coords[alpha] = d
    return ExteriorVector(n, k, field, coords)


def contract(w: ExteriorVector) -> ExteriorVector:
    """Contraction of a grade-n tensor down to grade n - 2.

    The output coordinate at gamma sums, over the complementary pairs
    disjoint from gamma, the input coordinate addressed by the word
    gamma + (i, 2n - i + 1); the sorting parity of that word reproduces
    exactly the (-1)^(r + s - 1) position sign of the term-by-term
    definition, so this agrees with ``contract_vectors`` on wedges.
    """
    n = w.n
    if w.grade != n or n < 2:
        raise ValueError(f"contraction needs grade n = {n} >= 2, got grade {w.grade}")
    field = w.field
    out: Dict[IndexTuple, Scalar] = {}
    for beta, val in w.coords.items():
        support = set(beta)
        for i in range(1, n + 1):
            ibar = 2 * n + 1 - i
            if i not in support or ibar not in support:
                continue
            gamma = tuple(x for x in beta if x != i and x != ibar)
            sign = sorting_sign(gamma + (i, ibar))
            term = val if sign > 0 else field.neg(val)
            acc = field.add(out.get(gamma, field.zero), term)
            if acc:
                out[gamma] = acc
            else:
                out.pop(gamma, None)
    return ExteriorVector(n, n - 2, field, out)


def contract_vectors(vectors: Sequence[Sequence], n: int, field: Field) -> ExteriorVector:
    """Contraction of v_1 ^ ... ^ v_n evaluated literally, term by term.

    Independent of :func:`contract`: sums <v_r, v_s> (-1)^(r+s-1) times the
    wedge of the remaining n - 2 vectors over all positions r < s.
    """
    vecs = [[field.coerce(v) for v in row] for row in vectors]
    if len(vecs) != n:
        raise ValueError(f"expected {n} vectors, got {len(vecs)}")
    out = ExteriorVector(n, n - 2, field)
    for r in range(n):
        for s in range(r + 1, n):
            c = pairing(vecs[r], vecs[s], n, field)
            if not c:
                continue
            if (r + s) % 2 == 0:
                c = field.neg(c)
            rest = [v for t, v in enumerate(vecs) if t not in (r, s)]
            out = out + wedge(rest, n, field).scaled(c)
    return out


def pair_adjacent_sign(alpha: IndexTuple, n: int) -> int:
    """Parity of rearranging sorted alpha into pair-adjacent order.

    Pair-adjacent order lists the free indices ascending, then each
    complete complementary pair as (low, high) adjacent, pairs ascending.
    """
    split = split_free_pairs(alpha, n)
    word = list(split.free)
    for p in split.pairs:
        word.extend(p)
    return sorting_sign(tuple(word))


def coordinate_vector(w: ExteriorVector) -> List[Scalar]:
    """Plain coordinates of w over the canonical order of its index set."""
    return [w.coefficient(t) for t in index_tuples(w.grade, 2 * w.n)]


def arranged_coordinates(w: ExteriorVector) -> List[Scalar]:
    """Coordinates of w in the pair-adjacent system (sign-twisted)."""
    out = []
    for t in index_tuples(w.grade, 2 * w.n):
        v = w.coefficient(t)
        if v and pair_adjacent_sign(t, w.n) < 0:
            v = w.field.neg(v)
        out.append(v)
    return out


class SubspaceBasis:
    """Rows of a k-dimensional subspace basis, checked independent."""

    __slots__ = ("n", "field", "rows")

    def __init__(self, n: int, field: Field, rows: Sequence[Sequence]):
        coerced = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        for row in coerced:
            if len(row) != 2 * n:
                raise ValueError(f"rows must have length {2 * n}")
        m = linalg.ExactMatrix.from_rows(coerced, field) if coerced else None
        if m is not None and linalg.rank(m) != len(coerced):
            raise ValueError("rows are linearly dependent")
        self.n = n
        self.field = field
        self.rows = coerced

    @property
    def dim(self) -> int:
        return len(self.rows)

    def gram(self) -> List[List[Scalar]]:
        return [[pairing(a, b, self.n, self.field) for b in self.rows] for a in self.rows]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and (self.n, self.field) == (other.n, other.field)
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"SubspaceBasis(n={self.n}, dim={self.dim}, field={self.field!r})"


def is_isotropic(basis: SubspaceBasis) -> bool:
    """Whether all pairwise pairings of the basis rows vanish."""
    return all(not v for row in basis.gram() for v in row)


def plucker_vector(basis: SubspaceBasis) -> ExteriorVector:
    """Wedge of the basis rows: the subspace's exterior coordinates."""
    return wedge(basis.rows, basis.n, basis.field)


def random_lagrangian(n: int, field: Field, seed: int) -> SubspaceBasis:
    """Random Lagrangian subspace by greedy isotropic completion.

    Repeatedly draws a random vector inside the symplectic perpendicular
    of the span so far, keeping it when independent. Deterministic for a
    fixed seed; always terminates because an isotropic subspace of
    dimension k < n has a strictly larger perpendicular.
    """
    rng = random.Random(seed)
    j = gram_matrix(n)
    rows: List[List[Scalar]] = []

    def perp_basis() -> List[List[Scalar]]:
        if not rows:
            eye = []
            for i in range(2 * n):
                v = [field.zero] * (2 * n)
                v[i] = field.one
                eye.append(v)
            return eye
        # row r constrains y through sum_c (r J)_c y_c = 0
        pair_rows = []
        for r in rows:
            u = []
            for c in range(2 * n):
                s = field.zero
                for d in range(2 * n):
                    jdc = j[d][c]
                    if jdc:
                        s = field.add(s, r[d] if jdc > 0 else field.neg(r[d]))
                u.append(s)
            pair_rows.append(u)
        return linalg.nullspace(linalg.ExactMatrix.from_rows(pair_rows, field))

    while len(rows) < n:
        basis = perp_basis()
        if field.char:
            coeffs = [rng.randrange(field.char) for _ in basis]
        else:
            coeffs = [rng.randint(-9, 9) for _ in basis]
        cand = [field.zero] * (2 * n)
        for c, vec in zip(coeffs, basis):
            if not c:
                continue
            cs = field.coerce(c)
            cand = [field.add(a, field.mul(cs, b)) for a, b in zip(cand, vec)]
        if not any(cand):
            continue
        m = linalg.ExactMatrix.from_rows(rows + [cand], field)
        if linalg.rank(m) == len(rows) + 1:
            rows.append(cand)
    lag = SubspaceBasis(n, field, rows)
    assert is_isotropic(lag)
    return lag


def lagrangian_count(n: int, q: int) -> int:
    """Number of Lagrangian subspaces over GF(q): product of (1 + q^i)."""
    return prod(1 + q**i for i in range(1, n + 1))


def _affine_solutions(a: np.ndarray, b: np.ndarray, p: int) -> Iterator[np.ndarray]:
    """All solutions of a x = b over GF(p), in a deterministic order."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        a = np.zeros((0, ncols), dtype=np.int64)
    aug = np.concatenate([a % p, b.reshape(-1, 1) % p], axis=1)
    rref, pivot_cols = linalg._rref_mod(aug, p)
    if ncols in pivot_cols:
        return
    free = [c for c in range(ncols) if c not in set(pivot_cols)]
    particular = np.zeros(ncols, dtype=np.int64)
    for row_idx, pc in enumerate(pivot_cols):
        particular[pc] = rref[row_idx, ncols]
    null_basis = []
    for fcol in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fcol] = 1
        for row_idx, pc in enumerate(pivot_cols):
            v[pc] = (-rref[row_idx, fcol]) % p
        null_basis.append(v)
    for coeffs in product(range(p), repeat=len(null_basis)):
        x = particular.copy()
        for c, v in zip(coeffs, null_basis):
            if c:
                x = x + c * v
        yield x % p


def lagrangian_subspaces(n: int, q: int) -> Iterator[SubspaceBasis]:
    """All Lagrangian subspaces over GF(q), one canonical basis each.

    Emits the unique reduced row echelon representative of every
    n-dimensional isotropic subspace of GF(q)^(2n), grouped by pivot
    column set in lexicographic order. Rows are generated top-down with
    the isotropy conditions against the fixed earlier rows solved as
    linear systems, so the work stays proportional to the output.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    field = GF(q)
    total = lagrangian_count(n, q)
    if total > ENUMERATION_CAP:
        raise ResourceCapError(
            f"{total} subspaces exceed the enumeration cap {ENUMERATION_CAP}; "
            "use random_lagrangian for sampling instead"
        )
    p = field.char
    jmat = np.array(gram_matrix(n), dtype=np.int64) % p

    def extend(pivots: Tuple[int, ...], rows: List[np.ndarray], pair_forms: List[np.ndarray]) -> Iterator[List[np.ndarray]]:
        a = len(rows)
        if a == n:
            yield rows
            return
        jcol = pivots[a]
        free_cols = [c for c in range(2 * n) if c not in pivots and c > jcol]
        amat = np.array([[u[c] for c in free_cols] for u in pair_forms], dtype=np.int64)
        if not pair_forms:
            amat = amat.reshape(0, len(free_cols))
        rhs = np.array([(-u[jcol]) % p for u in pair_forms], dtype=np.int64)
        for x in _affine_solutions(amat, rhs, p):
            row = np.zeros(2 * n, dtype=np.int64)
            row[jcol] = 1
            for c, v in zip(free_cols, x):
                row[c] = v
            yield from extend(pivots, rows + [row], pair_forms + [(row @ jmat) % p])

    for pivots in combinations(range(2 * n), n):
        for rows in extend(pivots, [], []):
            yield SubspaceBasis(n, field, [[int(v) for v in row] for row in rows])


def satisfies_plucker_relations(w: ExteriorVector) -> bool:
    """Whether w satisfies every quadratic relation of the grade-n embedding.

    For each pair of tuples alpha (length n - 1) and beta (length n + 1)
    the alternating sum over the entries of beta of the products
    p(alpha + beta_i) * p(beta minus beta_i) must vanish, coordinates
    addressed with the sorting-parity convention.
    """
    n = w.n
    if w.grade != n:
        raise ValueError(f"relations apply to grade {n}, got {w.grade}")
    field = w.field
    for alpha in index_tuples(n - 1, 2 * n):
        for beta in index_tuples(n + 1, 2 * n):
            total = field.zero
            for pos in range(n + 1):
                c1 = w.coefficient_word(alpha + (beta[pos],))
                if not c1:
                    continue
                c2 = w.coefficient(beta[:pos] + beta[pos + 1 :])
                if not c2:
                    continue
                term = field.mul(c1, c2)
                if pos % 2 == 0:
                    term = field.neg(term)
                total = field.add(total, term)
            if total:
                return False
    return True
