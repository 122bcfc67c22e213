"""Independent brute-force oracles the tests check the library against.

Everything here recomputes from first principles, staying away from the
code paths under test.
"""

import itertools
from functools import lru_cache


def contains_by_standardization(values, pattern):
    """Pattern containment by comparing standardizations of subsequences."""
    k = len(pattern)
    std_pat = standardize(pattern)
    return any(
        standardize(sub) == std_pat for sub in itertools.combinations(values, k)
    )


def count_by_standardization(values, pattern):
    k = len(pattern)
    std_pat = standardize(pattern)
    return sum(
        1 for sub in itertools.combinations(values, k) if standardize(sub) == std_pat
    )


def standardize(seq):
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def inversion_count(values):
    return sum(
        1
        for i in range(len(values))
        for j in range(i + 1, len(values))
        if values[i] > values[j]
    )


def transpose_inverse(values):
    """Inverse permutation via the positional transpose of the dot matrix."""
    n = len(values)
    dots = {(i, values[i - 1]) for i in range(1, n + 1)}
    flipped = {(j, i) for (i, j) in dots}
    return tuple(next(j for (i2, j) in flipped if i2 == i) for i in range(1, n + 1))


def conjugate_by_grid(parts):
    """Conjugate partition by literally transposing the cell grid."""
    cells = {(i, j) for i, p in enumerate(parts, 1) for j in range(1, p + 1)}
    flipped = {(j, i) for (i, j) in cells}
    out = []
    i = 1
    while any(c[0] == i for c in flipped):
        out.append(sum(1 for c in flipped if c[0] == i))
        i += 1
    return tuple(out)


def shaded_diagram(values):
    """The Rothe diagram by running the literal south/east shading sweep."""
    n = len(values)
    shaded = set()
    for i in range(1, n + 1):
        j = values[i - 1]
        shaded.add((i, j))
        for i2 in range(i + 1, n + 1):
            shaded.add((i2, j))
        for j2 in range(j + 1, n + 1):
            shaded.add((i, j2))
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if (i, j) not in shaded
    }


def start_heights(steps):
    """Prefix-sum heights, recomputed step by step."""
    out = []
    h = 0
    for ch in steps:
        out.append(h)
        h += 1 if ch == "U" else -1
    return tuple(out)


def nonnegative_path_counts(length):
    """ways[h] = paths of ``length`` up/down steps from 0 to h staying >= 0."""
    ways = {0: 1}
    for _ in range(length):
        nxt = {}
        for h, c in ways.items():
            for h2 in (h + 1, h - 1):
                if h2 >= 0:
                    nxt[h2] = nxt.get(h2, 0) + c
        ways = nxt
    return ways


@lru_cache(maxsize=None)
def catalan_by_recurrence(n):
    if n == 0:
        return 1
    return sum(
        catalan_by_recurrence(i) * catalan_by_recurrence(n - 1 - i) for i in range(n)
    )


def longest_increasing(values):
    import bisect

    tails = []
    for v in values:
        i = bisect.bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def longest_decreasing(values):
    return longest_increasing([-v for v in values])


def shifted_pattern_word(s, l):
    return tuple(range(s, l + 1)) + tuple(range(1, s))


def l_s_by_search(values, s):
    """Largest l with the shifted pattern s...l 1...(s-1) present; s-1 if none."""
    best = s - 1
    for l in range(s, len(values) + 1):
        if contains_by_standardization(values, shifted_pattern_word(s, l)):
            best = l
    return best


def durfee_counts_fast(n):
    """Durfee-rank census of Y_n without building partition objects."""
    counts = {}

    def rec(row, cap, rank):
        counts[rank] = counts.get(rank, 0) + 1
        top = min(cap, n - row)
        for v in range(1, top + 1):
            rec(row + 1, v, row if v >= row else rank)

    rec(1, n - 1, 0)
    return counts
