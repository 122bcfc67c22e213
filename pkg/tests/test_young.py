import pytest
from hypothesis import given

import oracles
from conftest import partitions_st, staircase_partitions_st
from permdiag.errors import BadArgumentError
from permdiag.young import (
    EMPTY,
    Partition,
    conjugate,
    contains,
    corners,
    durfee_rank,
    fits_staircase,
    format_partition,
    parse_partition,
    partition_from_corners,
    staircase,
    staircase_partitions,
)


class TestPartition:
    def test_trailing_zeros_normalized(self):
        assert Partition((3, 1, 0, 0)) == Partition((3, 1))
        assert Partition((0, 0)) == EMPTY

    def test_not_decreasing(self):
        with pytest.raises(BadArgumentError):
            Partition((1, 2))

    def test_text_forms(self):
        lam = Partition((7, 7, 4, 3, 3, 3, 1, 1, 1))
        assert format_partition(lam) == "[7,7,4,3,3,3,1,1,1]"
        assert parse_partition("[7,7,4,3,3,3,1,1,1]") == lam
        assert parse_partition("[]") == EMPTY
        assert str(EMPTY) == "[]"

    def test_parse_garbage(self):
        with pytest.raises(BadArgumentError):
            parse_partition("7,7")
        with pytest.raises(BadArgumentError):
            parse_partition("[a]")

    def test_size_length_part(self):
        lam = Partition((3, 1))
        assert lam.size == 4 and lam.length == 2
        assert lam.part(1) == 3 and lam.part(2) == 1 and lam.part(3) == 0


class TestConjugate:
    def test_paper_shape(self):
        lam = Partition((7, 7, 4, 3, 3, 3, 1, 1, 1))
        expected = oracles.conjugate_by_grid(lam.parts)
        assert expected == (9, 6, 6, 3, 2, 2, 2)
        assert conjugate(lam).parts == expected

    def test_trivial(self):
        assert conjugate(EMPTY) == EMPTY
        assert conjugate(Partition((1, 1, 1))) == Partition((3,))

    @given(partitions_st())
    def test_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam

    @given(partitions_st())
    def test_matches_grid_oracle(self, lam):
        assert conjugate(lam).parts == oracles.conjugate_by_grid(lam.parts)


class TestDurfee:
    def test_examples(self):
        assert durfee_rank(Partition((7, 7, 4, 3, 3, 3, 1, 1, 1))) == 3
        assert durfee_rank(EMPTY) == 0
        assert durfee_rank(Partition((1,))) == 1

    @given(partitions_st())
    def test_definition(self, lam):
        r = durfee_rank(lam)
        assert all(lam.part(i) >= i for i in range(1, r + 1))
        assert lam.part(r + 1) < r + 1


class TestCorners:
    def test_paper_shape(self):
        lam = Partition((7, 7, 4, 3, 3, 3, 1, 1, 1))
        assert corners(lam) == ((2, 7), (3, 4), (6, 3), (9, 1))

    def test_trivial(self):
        assert corners(EMPTY) == ()
        assert corners(staircase(5)) == ((1, 4), (2, 3), (3, 2), (4, 1))

    @given(partitions_st())
    def test_monotone_and_invertible(self, lam):
        cs = corners(lam)
        rows = [r for r, _ in cs]
        cols = [c for _, c in cs]
        assert rows == sorted(rows) and len(set(rows)) == len(rows)
        assert cols == sorted(cols, reverse=True) and len(set(cols)) == len(cols)
        assert partition_from_corners(cs) == lam

    def test_bad_corner_list(self):
        with pytest.raises(BadArgumentError):
            partition_from_corners([(1, 2), (2, 2)])


class TestStaircase:
    def test_fits(self):
        assert fits_staircase(Partition((7, 7, 4, 3, 3, 3, 1, 1, 1)), 10)
        assert not fits_staircase(Partition((3, 1)), 3)
        assert fits_staircase(EMPTY, 1)

    def test_contains(self):
        assert contains(Partition((3, 1)), Partition((2, 1)))
        assert not contains(Partition((3,)), Partition((1, 1)))
        assert contains(EMPTY, EMPTY)

    def test_enumeration_count(self):
        assert sum(1 for _ in staircase_partitions(4)) == 14
        assert [lam.parts for lam in staircase_partitions(3)] == [
            (),
            (1,),
            (1, 1),
            (2,),
            (2, 1),
        ]

    def test_enumeration_lex_and_unique(self):
        for n in (5, 6):
            seen = [lam.parts for lam in staircase_partitions(n)]
            assert seen == sorted(seen)
            assert len(seen) == len(set(seen))
            assert all(fits_staircase(Partition(parts), n) for parts in seen)

    @given(staircase_partitions_st())
    def test_strategy_fits(self, case):
        n, lam = case
        assert fits_staircase(lam, n)
        assert fits_staircase(conjugate(lam), n)
