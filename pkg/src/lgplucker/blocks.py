"""Incidence configurations on pair sets and the block structure of the
relation matrix.

For even m, take the m complementary pairs as ground symbols: the
configuration has one row per (m-2)/2-subset of pairs and one column per
(m/2)-subset, with incidence given by containment. Its 0/1 matrix L_r
(r = (m+2)/2) is regular and sparse: r ones per row, r - 1 per column,
and any two rows share at most one column.

The relation matrix decomposes into copies of these: group its rows by
the free part of their index tuple; each class, restricted to the columns
its rows touch, is a copy of L_r for m = n - (free size), after the
order-preserving renumbering of the surviving pairs. Columns whose index
tuple contains no complementary pair are identically zero and are listed
separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

import numpy as np

from .combinatorics import IndexTuple, index_tuples, row_partition, split_free_pairs
from .frlc import PlueckerMatrix

PairTuple = Tuple[int, ...]


def r_value(m: int) -> int:
    """The regularity index floor((m + 2) / 2) of the size-m configuration."""
    return (m + 2) // 2


class DecompositionError(Exception):
    """A structural claim about the block decomposition failed."""


class BlockEquivalenceError(DecompositionError):
    """A block does not match its atlas member under pair renumbering."""


@dataclass(frozen=True)
class IncidenceConfiguration:
    """Ground set of pair subsets plus one member set per row label."""

    m: int
    ground: Tuple[PairTuple, ...]
    members: Tuple[Tuple[PairTuple, Tuple[PairTuple, ...]], ...]


@dataclass
class IncidenceMatrix:
    """Dense 0/1 matrix with row and column labels (pair-index tuples)."""

    m: int
    bits: np.ndarray
    row_labels: Tuple[PairTuple, ...]
    col_labels: Tuple[PairTuple, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return tuple(self.bits.shape)

    @property
    def label(self) -> str:
        return f"L{r_value(self.m)}"

    def row_weights(self) -> List[int]:
        return [int(x) for x in self.bits.sum(axis=1)]

    def column_weights(self) -> List[int]:
        return [int(x) for x in self.bits.sum(axis=0)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IncidenceMatrix)
            and self.m == other.m
            and self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and np.array_equal(self.bits, other.bits)
        )


def incidence_configuration(m: int) -> IncidenceConfiguration:
    """Containment configuration of pair subsets for even m >= 2."""
    if m < 2 or m % 2:
        raise ValueError(f"need an even m >= 2, got {m}")
    ground = tuple(index_tuples(m // 2, m))
    members = []
    for alpha in index_tuples((m - 2) // 2, m):
        sup = set(alpha)
        members.append((alpha, tuple(beta for beta in ground if sup.issubset(beta))))
    return IncidenceConfiguration(m, ground, tuple(members))


def incidence_matrix(cfg: IncidenceConfiguration) -> IncidenceMatrix:
    """The 0/1 membership matrix of a configuration."""
    col_index = {beta: j for j, beta in enumerate(cfg.ground)}
    bits = np.zeros((len(cfg.members), len(cfg.ground)), dtype=np.int8)
    for i, (_, member) in enumerate(cfg.members):
        for beta in member:
            bits[i, col_index[beta]] = 1
    return IncidenceMatrix(cfg.m, bits, tuple(a for a, _ in cfg.members), cfg.ground)


def atlas(n: int) -> List[IncidenceMatrix]:
    """The family of block references for half-dimension n.

    One matrix per even m from the largest even integer <= n down to 2;
    consecutive half-dimensions n, n+1 with n even share it verbatim.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    start = n if n % 2 == 0 else n - 1
    return [incidence_matrix(incidence_configuration(m)) for m in range(start, 1, -2)]


@dataclass(frozen=True)
class RegularityReport:
    """Row/column weight, overlap and density checks for one atlas member."""

    m: int
    r: int
    shape: Tuple[int, int]
    row_weight: int
    column_weight: int
    max_overlap: int
    density: Fraction
    failures: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def check_regularity(mat: IncidenceMatrix) -> RegularityReport:
    """Verify the regularity and sparsity pattern of an incidence matrix."""
    r = r_value(mat.m)
    failures: List[str] = []
    for i, w in enumerate(mat.row_weights()):
        if w != r:
            failures.append(f"row {mat.row_labels[i]} has weight {w}, expected {r}")
    for j, w in enumerate(mat.column_weights()):
        if w != r - 1:
            failures.append(f"column {mat.col_labels[j]} has weight {w}, expected {r - 1}")
    overlap = 0
    nrows = mat.bits.shape[0]
    if nrows > 1:
        gram = mat.bits.astype(np.int64) @ mat.bits.astype(np.int64).T
        np.fill_diagonal(gram, 0)
        overlap = int(gram.max())
        if overlap > 1:
            i, j = np.unravel_index(int(gram.argmax()), gram.shape)
            failures.append(
                f"rows {mat.row_labels[int(i)]} and {mat.row_labels[int(j)]} share {overlap} columns"
            )
    density = Fraction(r, comb(mat.m, mat.m // 2))
    return RegularityReport(
        m=mat.m,
        r=r,
        shape=mat.shape,
        row_weight=r,
        column_weight=r - 1,
        max_overlap=overlap,
        density=density,
        failures=tuple(failures),
    )


def verify_block_equiv(block: IncidenceMatrix, reference: IncidenceMatrix) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Row and column permutations carrying the block onto the reference.

    The block's labels use original pair indices; the order-preserving
    renumbering of its surviving pairs onto 1..m is the only relabeling
    tried. Returns (row_perm, col_perm) with block[i, j] ==
    reference[row_perm[i], col_perm[j]]; raises BlockEquivalenceError
    otherwise.
    """
    if block.shape != reference.shape or block.m != reference.m:
        raise BlockEquivalenceError(
            f"shape mismatch: block {block.shape} (m={block.m}) vs reference "
            f"{reference.shape} (m={reference.m})"
        )
    lows = sorted({x for lbl in block.col_labels for x in lbl})
    if len(lows) != block.m:
        raise BlockEquivalenceError(f"block columns mention {len(lows)} pairs, expected {block.m}")
    renumber = {low: k + 1 for k, low in enumerate(lows)}
    ref_row_pos = {lbl: i for i, lbl in enumerate(reference.row_labels)}
    ref_col_pos = {lbl: j for j, lbl in enumerate(reference.col_labels)}
    try:
        row_perm = tuple(ref_row_pos[tuple(renumber[x] for x in lbl)] for lbl in block.row_labels)
        col_perm = tuple(ref_col_pos[tuple(renumber[x] for x in lbl)] for lbl in block.col_labels)
    except KeyError as exc:
        raise BlockEquivalenceError(f"relabeled subset {exc} missing from the reference") from exc
    for i in range(block.shape[0]):
        for j in range(block.shape[1]):
            if block.bits[i, j] != reference.bits[row_perm[i], col_perm[j]]:
                raise BlockEquivalenceError(
                    f"bit mismatch at block row {block.row_labels[i]}, column {block.col_labels[j]}"
                )
    return row_perm, col_perm


@dataclass
class Block:
    """One decomposition block: a relabeled copy of an atlas member."""

    free: IndexTuple
    m: int
    row_tuples: Tuple[IndexTuple, ...]
    col_tuples: Tuple[IndexTuple, ...]
    matrix: IncidenceMatrix
    row_perm: Tuple[int, ...]
    col_perm: Tuple[int, ...]

    @property
    def label(self) -> str:
        return f"L{r_value(self.m)}"


@dataclass
class BlockDecomposition:
    """Partition of the relation matrix into atlas blocks plus zero columns."""

    n: int
    blocks: List[Block]
    zero_columns: Tuple[IndexTuple, ...]

    def census(self) -> Dict[str, int]:
        """Multiplicity of each atlas label, largest first."""
        out: Dict[str, int] = {}
        for blk in sorted(self.blocks, key=lambda b: -b.m):
            out[blk.label] = out.get(blk.label, 0) + 1
        return out


def decompose(b: PlueckerMatrix) -> BlockDecomposition:
    """Split the relation matrix into its incidence blocks and verify each.

    Rows are grouped by the free part of their tuple; a class with free
    part of size t restricts to the columns it touches as a copy of the
    atlas member for m = n - t, checked bit for bit through the canonical
    pair renumbering. Every column left over must contain no complete
    pair.
    """
    n = b.n
    col_rank = {t: j for j, t in enumerate(b.col_tuples)}
    row_rank = {t: i for i, t in enumerate(b.row_tuples)}
    references: Dict[int, IncidenceMatrix] = {}
    blocks: List[Block] = []
    covered = set()
    for free, row_tuples in row_partition(n).items():
        m = n - len(free)
        if m not in references:
            references[m] = incidence_matrix(incidence_configuration(m))
        rows_idx = [row_rank[t] for t in row_tuples]
        col_idx = sorted({j for i in rows_idx for j in b.row_supports[i]})
        covered.update(col_idx)
        col_pos = {j: k for k, j in enumerate(col_idx)}
        bits = np.zeros((len(rows_idx), len(col_idx)), dtype=np.int8)
        for k, i in enumerate(rows_idx):
            for j in b.row_supports[i]:
                bits[k, col_pos[j]] = 1
        row_labels = tuple(
            tuple(p.low for p in split_free_pairs(t, n).pairs) for t in row_tuples
        )
        col_tuples = tuple(b.col_tuples[j] for j in col_idx)
        col_labels = tuple(
            tuple(p.low for p in split_free_pairs(t, n).pairs) for t in col_tuples
        )
        mat = IncidenceMatrix(m, bits, row_labels, col_labels)
        row_perm, col_perm = verify_block_equiv(mat, references[m])
        blocks.append(
            Block(
                free=free,
                m=m,
                row_tuples=tuple(row_tuples),
                col_tuples=col_tuples,
                matrix=mat,
                row_perm=row_perm,
                col_perm=col_perm,
            )
        )
    zero_cols = []
    for j, t in enumerate(b.col_tuples):
        if j in covered:
            continue
        if split_free_pairs(t, n).pairs:
            raise DecompositionError(f"uncovered column {t} contains a complete pair")
        zero_cols.append(t)
    return BlockDecomposition(n=n, blocks=blocks, zero_columns=tuple(zero_cols))
