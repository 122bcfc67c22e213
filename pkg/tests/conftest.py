import itertools

from hypothesis import strategies as st

from permdiag.perm import Permutation
from permdiag.young import Partition


@st.composite
def permutations_st(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    vals = draw(st.permutations(tuple(range(1, n + 1))))
    return Permutation(tuple(vals))


@st.composite
def partitions_st(draw, max_part=9, max_len=9):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def staircase_partitions_st(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    raw = draw(st.lists(st.integers(0, n - 1), min_size=n - 1, max_size=n - 1))
    clamped = sorted((min(v, n - 1 - i) for i, v in enumerate(sorted(raw, reverse=True))), reverse=True)
    return n, Partition(tuple(clamped))


@st.composite
def dyck_steps_st(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    steps = []
    ups = downs = 0
    for bit in bits:
        can_up = ups < n
        can_down = downs < ups
        if bit and can_up or not can_down:
            steps.append("U")
            ups += 1
        else:
            steps.append("D")
            downs += 1
    return "".join(steps)


def all_perms(n):
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)
