from fractions import Fraction
from math import comb

import numpy as np
import pytest

from lgplucker import (
    BlockEquivalenceError,
    IncidenceMatrix,
    atlas,
    check_regularity,
    decompose,
    incidence_configuration,
    incidence_matrix,
    r_value,
    split_free_pairs,
    verify_block_equiv,
)
from conftest import bmatrix


class TestConfiguration:
    def test_m2(self):
        cfg = incidence_configuration(2)
        assert len(cfg.ground) == 2
        assert len(cfg.members) == 1
        assert cfg.members[0][0] == ()
        assert cfg.members[0][1] == cfg.ground

    def test_m4(self):
        cfg = incidence_configuration(4)
        assert len(cfg.ground) == 6
        assert len(cfg.members) == 4
        assert all(len(member) == r_value(4) for _, member in cfg.members)

    def test_m6(self):
        cfg = incidence_configuration(6)
        assert len(cfg.ground) == 20
        assert len(cfg.members) == 15
        assert all(len(member) == 4 for _, member in cfg.members)

    def test_odd_m_rejected(self):
        with pytest.raises(ValueError):
            incidence_configuration(3)


class TestIncidenceMatrix:
    def test_m2_row(self):
        mat = incidence_matrix(incidence_configuration(2))
        assert mat.bits.tolist() == [[1, 1]]

    def test_m4_weights(self):
        mat = incidence_matrix(incidence_configuration(4))
        assert mat.shape == (4, 6)
        assert mat.row_weights() == [3] * 4
        assert mat.column_weights() == [2] * 6

    def test_m6_weights(self):
        mat = incidence_matrix(incidence_configuration(6))
        assert mat.shape == (15, 20)
        assert mat.row_weights() == [4] * 15
        assert mat.column_weights() == [3] * 20


class TestAtlas:
    def test_n4(self):
        members = atlas(4)
        assert [m.shape for m in members] == [(4, 6), (1, 2)]
        assert [m.label for m in members] == ["L3", "L2"]

    def test_n5_same_as_n4(self):
        a4, a5 = atlas(4), atlas(5)
        assert len(a4) == len(a5)
        for x, y in zip(a4, a5):
            assert x == y

    def test_n2(self):
        members = atlas(2)
        assert [m.label for m in members] == ["L2"]

    def test_n6(self):
        members = atlas(6)
        assert [m.shape for m in members] == [(15, 20), (4, 6), (1, 2)]


class TestRegularity:
    def test_l3(self):
        report = check_regularity(incidence_matrix(incidence_configuration(4)))
        assert report.ok
        assert (report.row_weight, report.column_weight) == (3, 2)
        assert report.max_overlap == 1
        assert report.density == Fraction(3, 6)

    def test_l2(self):
        report = check_regularity(incidence_matrix(incidence_configuration(2)))
        assert report.ok
        assert (report.row_weight, report.column_weight) == (2, 1)
        assert report.density == 1

    def test_l4(self):
        report = check_regularity(incidence_matrix(incidence_configuration(6)))
        assert report.ok
        assert report.max_overlap == 1
        assert report.density == Fraction(4, 20)

    def test_corrupted_matrix_fails(self):
        mat = incidence_matrix(incidence_configuration(4))
        bad = IncidenceMatrix(mat.m, mat.bits.copy(), mat.row_labels, mat.col_labels)
        bad.bits[0, 0] ^= 1
        report = check_regularity(bad)
        assert not report.ok
        assert report.failures


class TestBlockEquivalence:
    def test_reference_is_self_equivalent(self):
        ref = incidence_matrix(incidence_configuration(4))
        row_perm, col_perm = verify_block_equiv(ref, ref)
        assert row_perm == tuple(range(4))
        assert col_perm == tuple(range(6))

    def test_corrupted_block_detected(self):
        ref = incidence_matrix(incidence_configuration(4))
        bad = IncidenceMatrix(ref.m, ref.bits.copy(), ref.row_labels, ref.col_labels)
        bad.bits[1, 2] ^= 1
        with pytest.raises(BlockEquivalenceError):
            verify_block_equiv(bad, ref)

    def test_shape_mismatch(self):
        with pytest.raises(BlockEquivalenceError):
            verify_block_equiv(
                incidence_matrix(incidence_configuration(2)),
                incidence_matrix(incidence_configuration(4)),
            )


EXPECTED_CENSUS = {
    2: {"L2": 1},
    3: {"L2": 6},
    4: {"L3": 1, "L2": 24},
    5: {"L3": 10, "L2": 80},
    6: {"L4": 1, "L3": 60, "L2": 240},
}

EXPECTED_ZERO_COLS = {2: 4, 3: 8, 4: 16, 5: 32, 6: 64}


class TestDecomposition:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_census(self, n):
        dec = decompose(bmatrix(n))
        assert dec.census() == EXPECTED_CENSUS[n]
        assert len(dec.zero_columns) == EXPECTED_ZERO_COLS[n]

    @pytest.mark.parametrize("n", [4, 6])
    def test_census_matches_tuple_ranges(self, n):
        # the number of copies of the m = n - 2k member equals the number
        # of 2k-tuples avoiding complementary pairs: C(n, 2k) * 2^(2k)
        dec = decompose(bmatrix(n))
        census = dec.census()
        for k in range(1, (n - 2) // 2 + 1):
            label = f"L{r_value(n - 2 * k)}"
            assert census[label] == comb(n, 2 * k) * 4**k

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_partition_totals(self, n):
        b = bmatrix(n)
        dec = decompose(b)
        assert sum(len(blk.row_tuples) for blk in dec.blocks) == b.shape[0]
        col_total = sum(len(blk.col_tuples) for blk in dec.blocks) + len(dec.zero_columns)
        assert col_total == b.shape[1]
        covered = [t for blk in dec.blocks for t in blk.col_tuples] + list(dec.zero_columns)
        assert len(set(covered)) == b.shape[1]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_zero_column_characterization(self, n):
        b = bmatrix(n)
        dec = decompose(b)
        zero = set(dec.zero_columns)
        for t in b.col_tuples:
            assert (t in zero) == (not split_free_pairs(t, n).pairs)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_blocks_pass_regularity(self, n):
        for blk in decompose(bmatrix(n)).blocks:
            report = check_regularity(blk.matrix)
            assert report.ok, report.failures

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_reassembly_block_diagonal(self, n):
        b = bmatrix(n)
        dec = decompose(b)
        row_order = [t for blk in dec.blocks for t in blk.row_tuples]
        col_order = [t for blk in dec.blocks for t in blk.col_tuples] + list(dec.zero_columns)
        row_pos = {t: i for i, t in enumerate(b.row_tuples)}
        col_pos = {t: j for j, t in enumerate(b.col_tuples)}
        dense = b.dense()
        permuted = dense[np.ix_([row_pos[t] for t in row_order], [col_pos[t] for t in col_order])]
        expected = np.zeros_like(permuted)
        r0 = c0 = 0
        for blk in dec.blocks:
            rr, cc = blk.matrix.shape
            expected[r0 : r0 + rr, c0 : c0 + cc] = blk.matrix.bits
            r0 += rr
            c0 += cc
        assert np.array_equal(permuted, expected)

    def test_block_matches_relation_entries(self, n=4):
        b = bmatrix(n)
        col_pos = {t: j for j, t in enumerate(b.col_tuples)}
        row_pos = {t: i for i, t in enumerate(b.row_tuples)}
        for blk in decompose(b).blocks:
            for bi, row_t in enumerate(blk.row_tuples):
                for bj, col_t in enumerate(blk.col_tuples):
                    assert blk.matrix.bits[bi, bj] == b.entry(row_pos[row_t], col_pos[col_t])
