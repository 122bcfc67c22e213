import pytest
from hypothesis import given

import oracles
from conftest import all_perms, permutations_st
from permdiag.diagram import (
    NotDominant,
    as_dict,
    build_diagram,
    count_132_by_rank,
    dominant_partition,
    from_dict,
    rank_diagram,
    render,
)
from permdiag.pattern import PATTERN_132, avoids, occurrences
from permdiag.perm import identity, inverse, parse_permutation, statistics
from permdiag.young import Partition, corners


class TestBuildDiagram:
    def test_paper_example_cell_count(self):
        p = parse_permutation("4 2 8 3 6 9 7 5 1 10")
        assert len(build_diagram(p).cells) == 18

    def test_identity_empty(self):
        assert build_diagram(identity(6)).cells == frozenset()

    def test_tiny_example(self):
        assert build_diagram(parse_permutation("1 3 2")).cells == {(2, 2)}

    def test_matches_shading_sweep(self):
        for n in range(1, 7):
            for p in all_perms(n):
                assert build_diagram(p).cells == oracles.shaded_diagram(p.values)

    @given(permutations_st())
    def test_cell_count_is_inversions(self, p):
        assert len(build_diagram(p).cells) == statistics(p).inversions

    @given(permutations_st())
    def test_row_lengths_are_code(self, p):
        rows = [0] * p.n
        for (i, _) in build_diagram(p).cells:
            rows[i - 1] += 1
        assert tuple(rows) == statistics(p).code

    @given(permutations_st(max_n=7))
    def test_inverse_transposes(self, p):
        cells = build_diagram(p).cells
        assert build_diagram(inverse(p)).cells == {(j, i) for (i, j) in cells}


class TestRankDiagram:
    def test_paper_rank_value(self):
        ranked = rank_diagram(parse_permutation("4 2 8 3 6 9 7 5 1 10"))
        assert ranked.rank[(6, 7)] == 4

    def test_identity(self):
        ranked = rank_diagram(identity(4))
        assert ranked.rank == {} and ranked.essential == frozenset()

    def test_essential_within_cells(self):
        for n in range(1, 7):
            for p in all_perms(n):
                ranked = rank_diagram(p)
                assert ranked.essential <= ranked.base.cells

    def test_rank_constant_on_components(self):
        for n in range(2, 7):
            for p in all_perms(n):
                ranked = rank_diagram(p)
                for (i, j) in ranked.base.cells:
                    for nb in ((i + 1, j), (i, j + 1)):
                        if nb in ranked.base.cells:
                            assert ranked.rank[nb] == ranked.rank[(i, j)]

    def test_essential_rows_are_descents(self):
        for n in range(1, 7):
            for p in all_perms(n):
                des = set(statistics(p).descents)
                assert all(i in des for (i, _) in rank_diagram(p).essential)

    def test_avoider_essential_cells_are_shape_corners(self):
        for n in range(1, 7):
            for p in all_perms(n):
                lam = dominant_partition(p)
                if isinstance(lam, Partition):
                    assert rank_diagram(p).essential == frozenset(corners(lam))


class TestDominant:
    def test_paper_example(self):
        lam = dominant_partition(parse_permutation("8 9 5 4 6 7 2 3 10 1"))
        assert lam == Partition((7, 7, 4, 3, 3, 3, 1, 1, 1))

    def test_identity(self):
        assert dominant_partition(identity(5)) == Partition(())

    def test_witness(self):
        res = dominant_partition(parse_permutation("1 3 2"))
        assert isinstance(res, NotDominant)
        assert res.witness == (2, 2)

    def test_matches_brute_force_classification(self):
        for n in range(1, 7):
            for p in all_perms(n):
                is_partition = isinstance(dominant_partition(p), Partition)
                assert is_partition == avoids(p, PATTERN_132)

    def test_witness_is_disconnected_cell(self):
        for n in range(3, 6):
            for p in all_perms(n):
                res = dominant_partition(p)
                if isinstance(res, NotDominant):
                    cells = build_diagram(p).cells
                    assert res.witness in cells


class TestCount132:
    def test_paper_count(self):
        assert count_132_by_rank(parse_permutation("4 2 8 3 6 9 7 5 1 10")) == 20

    def test_avoider_zero(self):
        assert count_132_by_rank(parse_permutation("8 9 5 4 6 7 2 3 10 1")) == 0

    def test_single_occurrence(self):
        assert count_132_by_rank(parse_permutation("1 3 2")) == 1

    def test_matches_oracle_exhaustive(self):
        for n in range(1, 7):
            for p in all_perms(n):
                assert count_132_by_rank(p) == occurrences(p, PATTERN_132)


class TestRendering:
    def test_plain_grid(self):
        assert render(parse_permutation("1 3 2")) == "o..\n.#o\n.o."

    def test_rank_grid(self):
        assert render(parse_permutation("2 3 1"), show_ranks=True) == "0o.\n0.o\no.."

    def test_dict_roundtrip(self):
        p = parse_permutation("4 2 8 3 6 9 7 5 1 10")
        rebuilt = from_dict(as_dict(p))
        assert rebuilt == rank_diagram(p)

    def test_dict_fields(self):
        d = as_dict(parse_permutation("1 3 2"))
        assert d == {
            "n": 3,
            "cells": [[2, 2]],
            "ranks": {"2,2": 1},
            "essential": [[2, 2]],
        }
