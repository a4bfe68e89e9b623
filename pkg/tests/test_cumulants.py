import json
from fractions import Fraction
from itertools import product

import pytest

import oracles
from epsym.cumulants import (CumulantSpec, check_eps_exchangeability,
                             kappa_pi, moment, parse_fraction)
from epsym.epsmat import preset
from epsym.partitions import Category, SetPartition, parse_partition

SEMI = CumulantSpec.semicircle


def test_kappa_pi_single_pair():
    spec = CumulantSpec.of([(0, 1)])
    assert kappa_pi(parse_partition("{1,2}"), (1, 1), spec) == 1


def test_kappa_pi_centered_singletons():
    spec = CumulantSpec.of([(0,), (0,)])
    assert kappa_pi(parse_partition("{1}{2}"), (1, 2), spec) == 0


def test_kappa_pi_crossing_pairs():
    spec = SEMI(2)
    assert kappa_pi(parse_partition("{1,3}{2,4}"), (1, 2, 1, 2), spec) == 1


def test_kappa_pi_rejects_mixed_blocks():
    with pytest.raises(ValueError, match="refine"):
        kappa_pi(parse_partition("{1,2}"), (1, 2), SEMI(2))


def test_kappa_pi_rational_values():
    spec = CumulantSpec.of([(Fraction(1, 2), Fraction(3, 4))])
    assert kappa_pi(parse_partition("{1,2}{3}"), (1, 1, 1), spec) == \
        Fraction(3, 4) * Fraction(1, 2)


# --- moments -----------------------------------------------------------------

def test_moment_alternating_commuting():
    assert moment((1, 2, 1, 2), preset("comm", 2), SEMI(2)) == 1


def test_moment_alternating_free():
    assert moment((1, 2, 1, 2), preset("free", 2), SEMI(2)) == 0


def test_moment_fourth_is_catalan2():
    for eps in (preset("comm", 2), preset("free", 2), preset("ex-f")):
        assert moment((1, 1, 1, 1), eps, SEMI(eps.n)) == 2


def test_moment_empty_word_is_one():
    assert moment((), preset("free", 2), SEMI(2)) == 1


def test_moment_matches_classical_factorisation():
    # all-commuting pattern against the independent-variables oracle
    spec3 = CumulantSpec.of([(1, 1), (Fraction(1, 2), 2), (0, 1, 1)])
    for n in (1, 2, 3):
        eps = preset("comm", n)
        for k in range(6):
            for i in product(range(1, n + 1), repeat=k):
                assert moment(i, eps, spec3) == \
                    oracles.classical_moment(i, spec3), i


def test_moment_matches_free_oracle():
    spec3 = CumulantSpec.of([(1, 1, 1), (Fraction(2, 3), 1), (0, 1)])
    for n in (1, 2, 3):
        eps = preset("free", n)
        for k in range(7):
            for i in product(range(1, n + 1), repeat=k):
                assert moment(i, eps, spec3) == \
                    oracles.free_moment(i, spec3), i


def test_moment_distinct_labels_factorise_into_means():
    spec = CumulantSpec.of([(2,), (3,), (Fraction(1, 2),)])
    eps = preset("comm", 3)
    assert moment((1, 2, 3), eps, spec) == 2 * 3 * Fraction(1, 2)
    assert moment((2, 1), eps, spec) == 6


def test_moment_commuting_pair_word():
    # two distinct commuting labels: only the all-singleton refinement
    # survives the kernel condition
    spec = CumulantSpec.of([(2, 5), (3, 7)])
    eps = preset("comm", 2)
    assert moment((1, 2), eps, spec) == 6


def test_single_variable_moments_do_not_depend_on_pattern():
    spec_rows = [(1, 1, 1), (0, 1), (Fraction(1, 3), Fraction(1, 2), 1, 1)]
    for n in (2, 3, 4):
        pats = [preset("comm", n), preset("free", n), preset("block", 1, n - 1)]
        if n == 4:
            pats += [preset("ex-d"), preset("ex-e")]
        spec = CumulantSpec.of([spec_rows[0]] * n)
        for v in range(1, n + 1):
            for k in range(1, 9):
                i = (v,) * k
                vals = {moment(i, eps, spec) for eps in pats}
                assert len(vals) == 1


def test_semicircle_even_moments_are_catalan():
    eps = preset("free", 2)
    for m in range(5):  # words up to length 8
        assert moment((1,) * (2 * m), eps, SEMI(2)) == oracles.catalan(m)
        if m:
            assert moment((1,) * (2 * m - 1), eps, SEMI(2)) == 0


def test_moment_restricted_families():
    # restricting the family drops the partitions outside it
    eps = preset("comm", 2)
    spec = CumulantSpec.constant(2, (1, 1))
    full = moment((1, 1), eps, spec)
    pair_only = moment((1, 1), eps, spec, Category.PAIR)
    assert full == 2 and pair_only == 1


# --- exchangeability ----------------------------------------------------------

def test_exchangeability_ex_d_semicircle():
    assert check_eps_exchangeability(preset("ex-d"), SEMI(4), 4).passed


def test_exchangeability_free_is_full():
    spec = CumulantSpec.constant(3, (1, Fraction(1, 2), 3))
    assert check_eps_exchangeability(preset("free", 3), spec, 4).passed


def test_exchangeability_comm():
    spec = CumulantSpec.constant(3, (1, 1))
    assert check_eps_exchangeability(preset("comm", 3), spec, 3).passed


def test_exchangeability_requires_identical_rows():
    spec = CumulantSpec.of([(1,), (2,)])
    with pytest.raises(ValueError, match="identically"):
        check_eps_exchangeability(preset("free", 2), spec, 2)


def test_exchangeability_other_presets():
    assert check_eps_exchangeability(preset("ex-e"), SEMI(4), 3).passed
    assert check_eps_exchangeability(preset("ex-f"), SEMI(5), 3).passed
    assert check_eps_exchangeability(
        preset("block", 2, 1), CumulantSpec.constant(3, (1, 1)), 3).passed


# --- the spec table -----------------------------------------------------------

def test_spec_normalises_trailing_zeros():
    spec = CumulantSpec.of([(1, 0), (1,)])
    assert spec.identically_distributed
    assert spec.kappa(1, 2) == 0
    assert spec.kappa(1, 99) == 0


def test_spec_json_round_trip():
    spec = CumulantSpec.of([(Fraction(1, 2), 1), (0, Fraction(-2, 3))])
    data = json.loads(json.dumps(spec.to_json()))
    assert CumulantSpec.from_json(data) == spec
    assert data["kappas"][0] == ["1/2", "1"]


def test_parse_fraction():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction("5") == 5
    assert parse_fraction(7) == 7
