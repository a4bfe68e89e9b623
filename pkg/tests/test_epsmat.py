import pytest
from hypothesis import given, strategies as st

from epsym.epsmat import (EpsilonMatrix, Permutation, format_eps_text,
                          make_epsilon, parse_eps_text, preset, validate_index)
from epsym.partitions import SetPartition, kernel


def test_make_epsilon_smallest_commuting():
    eps = make_epsilon(2, [[0, 1], [1, 0]])
    assert eps[1, 2] == 1 and eps[2, 1] == 1 and eps[1, 1] == 0


def test_make_epsilon_rejects_asymmetric():
    with pytest.raises(ValueError, match="not symmetric"):
        make_epsilon(2, [[0, 1], [0, 0]])


def test_make_epsilon_rejects_nonzero_diagonal():
    with pytest.raises(ValueError, match="diagonal"):
        make_epsilon(2, [[1, 1], [1, 0]])


def test_make_epsilon_rejects_non_bits():
    with pytest.raises(ValueError, match="must be 0 or 1"):
        make_epsilon(2, [[0, 2], [2, 0]])


def test_make_epsilon_rejects_bad_shape():
    with pytest.raises(ValueError, match="2x2"):
        make_epsilon(2, [[0, 1, 0], [1, 0, 0]])


def test_ex_d_matrix_verbatim():
    eps = preset("ex-d")
    assert eps.entries == (
        (0, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 0, 1),
        (0, 0, 1, 0),
    )
    assert make_epsilon(4, eps.entries) == eps


def test_ex_e_matrix_verbatim():
    assert preset("ex-e").entries == (
        (0, 0, 1, 1),
        (0, 0, 1, 1),
        (1, 1, 0, 0),
        (1, 1, 0, 0),
    )


def test_ex_f_matrix_verbatim():
    assert preset("ex-f").entries == (
        (0, 0, 1, 1, 0),
        (0, 0, 0, 1, 1),
        (1, 0, 0, 0, 1),
        (1, 1, 0, 0, 0),
        (0, 1, 1, 0, 0),
    )


def test_trivial6_first_row():
    eps = preset("trivial6")
    assert eps.n == 6
    assert eps.row(1) == (0, 0, 1, 0, 0, 0)


def test_free_preset_is_zero():
    assert preset("free", 3).entries == ((0, 0, 0),) * 3


def test_comm_preset():
    eps = preset("comm", 3)
    assert all(eps[i, j] == (0 if i == j else 1)
               for i in range(1, 4) for j in range(1, 4))


def test_block_preset():
    eps = preset("block", 2, 2)
    assert eps.n == 4
    assert eps[1, 2] == 1
    assert eps[1, 3] == eps[3, 4] == eps[2, 4] == 0


def test_preset_aliases():
    assert preset("pairs-indep") == preset("ex-d")
    assert preset("pairs-free") == preset("ex-e")
    assert preset("cycle5") == preset("ex-f")


def test_preset_unknown_name():
    with pytest.raises(ValueError, match="unknown preset"):
        preset("nope")


@pytest.mark.parametrize("n", range(1, 11))
def test_comm_free_fixed_points_of_validation(n):
    for name in ("comm", "free"):
        eps = preset(name, n)
        assert make_epsilon(n, eps.entries) == eps


@pytest.mark.parametrize("name,params", [
    ("comm", (4,)), ("free", (4,)), ("block", (2, 3)),
    ("ex-d", ()), ("ex-e", ()), ("ex-f", ()), ("trivial6", ()),
])
def test_presets_satisfy_invariants(name, params):
    eps = preset(name, *params)
    for i in range(1, eps.n + 1):
        assert eps[i, i] == 0
        for j in range(1, eps.n + 1):
            assert eps[i, j] in (0, 1)
            assert eps[i, j] == eps[j, i]


# --- kernels ---------------------------------------------------------------

def test_kernel_examples():
    assert kernel((3, 1, 3)) == SetPartition.of(3, [(1, 3), (2,)])
    assert kernel((1, 1, 1, 1)) == SetPartition.of(4, [(1, 2, 3, 4)])
    assert kernel((1, 2, 1, 2)) == SetPartition.of(4, [(1, 3), (2, 4)])
    assert kernel(()) == SetPartition.of(0, [])


@given(st.lists(st.integers(1, 5), max_size=8),
       st.lists(st.integers(1, 3), min_size=5, max_size=5))
def test_kernel_refines_under_value_merging(values, merge_to):
    # j = f(i) for a value map f can only coarsen the kernel
    i = tuple(values)
    j = tuple(merge_to[v - 1] for v in i)
    assert kernel(i).refines(kernel(j))


# --- text format -----------------------------------------------------------

def test_eps_text_round_trip():
    for name, params in [("ex-f", ()), ("comm", (4,)), ("trivial6", ())]:
        eps = preset(name, *params)
        assert parse_eps_text(format_eps_text(eps)) == eps


def test_eps_text_parse_error_reports_line_and_column():
    with pytest.raises(ValueError, match=r"line 2, column 3"):
        parse_eps_text("2\n0 x\n0 0\n")
    with pytest.raises(ValueError, match=r"line 3"):
        parse_eps_text("2\n0 1\n")
    with pytest.raises(ValueError, match=r"line 1"):
        parse_eps_text("two\n")


def test_validate_index():
    assert validate_index((1, 2, 3), 3) == (1, 2, 3)
    with pytest.raises(ValueError):
        validate_index((0,), 3)
    with pytest.raises(ValueError):
        validate_index((4,), 3)


# --- permutations ----------------------------------------------------------

def test_permutation_basics():
    s = Permutation(3, (2, 3, 1))
    assert s(1) == 2 and s(3) == 1
    assert s.compose(s.inverse()) == Permutation.identity(3)
    assert s.inverse().compose(s) == Permutation.identity(3)


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))
