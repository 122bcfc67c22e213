import pytest
from hypothesis import given

import oracles
from conftest import all_perms, permutations_st
from permdiag.errors import (
    DuplicateValueError,
    EmptyPermutationError,
    OutOfRangeError,
)
from permdiag.perm import (
    Permutation,
    code,
    format_permutation,
    identity,
    inverse,
    left_to_right_minima,
    make_permutation,
    parse_permutation,
    right_to_left_maxima,
    statistics,
)


class TestMakePermutation:
    def test_paper_example(self):
        p = parse_permutation("4 2 8 3 6 9 7 5 1 10")
        assert p.n == 10
        assert p[1] == 4 and p[10] == 10

    def test_singleton(self):
        assert make_permutation([1]).values == (1,)

    def test_duplicate(self):
        with pytest.raises(DuplicateValueError):
            make_permutation([2, 2, 1])

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            make_permutation([1, 2, 4])
        with pytest.raises(OutOfRangeError):
            make_permutation([0, 1])

    def test_empty(self):
        with pytest.raises(EmptyPermutationError):
            make_permutation([])

    def test_parse_garbage(self):
        with pytest.raises(OutOfRangeError):
            parse_permutation("1 two 3")

    def test_format_roundtrip(self):
        text = "8 9 5 4 6 7 2 3 10 1"
        assert format_permutation(parse_permutation(text)) == text


class TestInverse:
    def test_three_cycle(self):
        assert str(inverse(parse_permutation("2 3 1"))) == "3 1 2"

    def test_paper_permutation(self):
        p = parse_permutation("8 9 5 4 6 7 2 3 10 1")
        expected = oracles.transpose_inverse(p.values)
        assert expected == (10, 7, 8, 4, 3, 5, 6, 1, 2, 9)
        assert inverse(p).values == expected

    def test_identity(self):
        assert inverse(identity(5)) == identity(5)

    @given(permutations_st())
    def test_involution(self, p):
        assert inverse(inverse(p)) == p

    @given(permutations_st())
    def test_defining_property(self, p):
        q = inverse(p)
        assert all(q[p[i]] == i for i in range(1, p.n + 1))


class TestCode:
    def test_dominant_example(self):
        p = parse_permutation("8 9 5 4 6 7 2 3 10 1")
        assert code(p) == (7, 7, 4, 3, 3, 3, 1, 1, 1, 0)

    def test_identity(self):
        assert code(identity(6)) == (0,) * 6

    def test_rank_example(self):
        p = parse_permutation("4 2 8 3 6 9 7 5 1 10")
        assert code(p) == (3, 1, 5, 1, 2, 3, 2, 1, 0, 0)
        assert sum(code(p)) == 18 == oracles.inversion_count(p.values)

    @given(permutations_st())
    def test_sum_is_inversions(self, p):
        assert sum(code(p)) == oracles.inversion_count(p.values)

    @given(permutations_st())
    def test_entry_bounds(self, p):
        c = code(p)
        assert all(c[i] <= p.n - (i + 1) for i in range(p.n))


class TestStatistics:
    def test_excedances_paper(self):
        s = statistics(parse_permutation("1 4 7 2 3 8 5 6 10 9"))
        assert s.excedances == (2, 3, 6, 9)
        assert s.excedance_letters == (4, 7, 8, 10)

    def test_descents_and_minima_paper(self):
        s = statistics(parse_permutation("8 9 5 4 6 7 2 3 10 1"))
        assert s.descents == (2, 3, 6, 9)
        assert s.ltr_minima == ((1, 8), (3, 5), (4, 4), (7, 2), (10, 1))

    def test_identity(self):
        s = statistics(identity(7))
        assert s.descents == () and s.excedances == ()
        assert s.inversions == 0

    def test_rtl_maxima(self):
        assert right_to_left_maxima(parse_permutation("8 9 5 4 6 7 2 3 10 1")) == (
            (9, 10),
            (10, 1),
        )

    @given(permutations_st())
    def test_minima_shape(self, p):
        mins = left_to_right_minima(p)
        assert mins[0][0] == 1
        positions = [q for q, _ in mins]
        values = [v for _, v in mins]
        assert positions == sorted(positions)
        assert values == sorted(values, reverse=True)
        assert values[-1] == 1

    @given(permutations_st())
    def test_inversions_match_code(self, p):
        s = statistics(p)
        assert s.inversions == sum(s.code)


def test_321_avoider_subwords_increasing():
    from permdiag.pattern import PATTERN_321, avoids

    for n in range(1, 7):
        for p in all_perms(n):
            if not avoids(p, PATTERN_321):
                continue
            exc = set(statistics(p).excedances)
            tops = [p[i] for i in range(1, n + 1) if i in exc]
            rest = [p[i] for i in range(1, n + 1) if i not in exc]
            assert tops == sorted(tops)
            assert rest == sorted(rest)
