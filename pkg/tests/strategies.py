"""Hypothesis strategies for partitions, patterns, words and indices."""

from hypothesis import strategies as st

from epsym.epsmat import EpsilonMatrix, make_epsilon
from epsym.partitions import SetPartition


@st.composite
def rgs_partitions(draw, max_k: int = 7, min_k: int = 0) -> SetPartition:
    k = draw(st.integers(min_k, max_k))
    word = []
    mx = -1
    for _ in range(k):
        v = draw(st.integers(0, mx + 1))
        word.append(v)
        mx = max(mx, v)
    blocks: list[list[int]] = [[] for _ in range(mx + 1)]
    for pos, v in enumerate(word, start=1):
        blocks[v].append(pos)
    return SetPartition.of(k, blocks)


@st.composite
def eps_matrices(draw, max_n: int = 5, min_n: int = 1) -> EpsilonMatrix:
    n = draw(st.integers(min_n, max_n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            bit = draw(st.integers(0, 1))
            rows[i][j] = rows[j][i] = bit
    return make_epsilon(n, rows)


@st.composite
def eps_with_index(draw, max_n: int = 4, max_k: int = 6):
    eps = draw(eps_matrices(max_n=max_n))
    k = draw(st.integers(0, max_k))
    i = tuple(draw(st.integers(1, eps.n)) for _ in range(k))
    return eps, i


@st.composite
def eps_with_word(draw, max_n: int = 5, max_len: int = 12):
    eps = draw(eps_matrices(max_n=max_n, min_n=2))
    length = draw(st.integers(0, max_len))
    w = tuple(draw(st.integers(1, eps.n)) for _ in range(length))
    return eps, w
