import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings

import oracles
from strategies import eps_matrices, eps_with_word
from epsym.epsmat import EpsilonMatrix, Permutation, make_epsilon, preset
from epsym.groups import (_I2, _m2mul, automorphism_group, check_coxeter_rep,
                          coxeter_rep, entries_commute, perm_representation,
                          permutation_satisfies_R_eps,
                          projection_pair_representation, rep_check,
                          word_equal, word_reduce)

PRESETS_N6 = [
    ("comm2", preset("comm", 2)), ("comm4", preset("comm", 4)),
    ("comm6", preset("comm", 6)), ("free3", preset("free", 3)),
    ("free6", preset("free", 6)), ("block-2-2", preset("block", 2, 2)),
    ("block-3-3", preset("block", 3, 3)), ("ex-d", preset("ex-d")),
    ("ex-e", preset("ex-e")), ("ex-f", preset("ex-f")),
    ("trivial6", preset("trivial6")),
]


# --- the automorphism group ----------------------------------------------------

def test_group_orders_from_fixed_patterns():
    assert automorphism_group(preset("ex-d")).order == 8
    assert automorphism_group(preset("ex-e")).order == 8
    assert automorphism_group(preset("trivial6")).order == 1
    assert automorphism_group(preset("comm", 4)).order == 24
    assert automorphism_group(preset("free", 4)).order == 24


def test_ex_d_group_is_the_dihedral_one():
    group = automorphism_group(preset("ex-d"))
    images = {g.images for g in group.elements}
    assert (2, 1, 3, 4) in images          # swap inside the first pair
    assert (1, 2, 4, 3) in images          # swap inside the second pair
    assert (3, 4, 1, 2) in images          # swap the two pairs
    assert (2, 3, 4, 1) not in images      # a plain 4-cycle breaks the pattern


def test_group_structure_validates():
    for name, eps in [("ex-d", preset("ex-d")), ("ex-f", preset("ex-f")),
                      ("trivial6", preset("trivial6"))]:
        automorphism_group(eps).validate()


def test_group_bound():
    with pytest.raises(ValueError, match="bound"):
        automorphism_group(preset("free", 10))
    # a ten-vertex path: only the identity and the end-to-end flip
    rows = [[0] * 10 for _ in range(10)]
    for i in range(9):
        rows[i][i + 1] = rows[i + 1][i] = 1
    path = make_epsilon(10, rows)
    assert automorphism_group(path, bound=10).order == 2


def test_generators_generate():
    group = automorphism_group(preset("ex-e"))
    gens = group.generators()
    span = {Permutation.identity(4)}
    frontier = list(span)
    while frontier:
        x = frontier.pop()
        for h in gens:
            y = x.compose(h)
            if y not in span:
                span.add(y)
                frontier.append(y)
    assert span == set(group.elements)


def test_group_json():
    data = automorphism_group(preset("ex-d")).to_json()
    assert data["order"] == 8 and len(data["elements"]) == 8
    assert data["elements"] == sorted(data["elements"])


def test_full_symmetric_group_iff_constant_pattern():
    # exhaustive over all patterns with n <= 5
    import math
    for n in range(2, 6):
        pair_positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pair_positions)):
            rows = [[0] * n for _ in range(n)]
            for b, (i, j) in enumerate(pair_positions):
                if mask >> b & 1:
                    rows[i][j] = rows[j][i] = 1
            eps = make_epsilon(n, rows)
            full = automorphism_group(eps).order == math.factorial(n)
            constant = mask == 0 or mask == (1 << len(pair_positions)) - 1
            assert full == constant, (n, mask)


# --- the permutation-matrix relation route --------------------------------------

def test_identity_satisfies_relations():
    for name, eps in PRESETS_N6:
        assert permutation_satisfies_R_eps(Permutation.identity(eps.n), eps)


def test_swap_of_commuting_pair_on_ex_d():
    assert permutation_satisfies_R_eps(Permutation(4, (2, 1, 3, 4)), preset("ex-d"))


def test_edge_to_nonedge_fails_with_delta_contradiction():
    # sends the commuting pair {1,2} onto the free pair {1,3}
    sigma = Permutation(4, (1, 3, 2, 4))
    assert not permutation_satisfies_R_eps(sigma, preset("ex-d"))


def test_relation_route_equals_membership():
    for name, eps in PRESETS_N6:
        group = {g.images for g in automorphism_group(eps).elements}
        for images in permutations(range(1, eps.n + 1)):
            sigma = Permutation(eps.n, images)
            assert permutation_satisfies_R_eps(sigma, eps) == (images in group), \
                (name, images)


# --- the reflection representation ----------------------------------------------

def test_two_free_generators_do_not_commute():
    rep = coxeter_rep(preset("free", 2))
    a = rep.generator(1)[0]
    b = rep.generator(2)[0]
    assert _m2mul(a, b) == ((0, -1), (1, 0))
    assert _m2mul(a, b) != _m2mul(b, a)


def test_comm_pattern_generators_all_commute():
    rep = coxeter_rep(preset("comm", 3))
    for i in range(1, 4):
        for j in range(i + 1, 4):
            for gi, gj in zip(rep.generator(i), rep.generator(j)):
                assert _m2mul(gi, gj) == _m2mul(gj, gi)


def test_cycle5_commutations_match_pattern():
    eps = preset("ex-f")
    rep = coxeter_rep(eps)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            commute = all(_m2mul(a, b) == _m2mul(b, a)
                          for a, b in zip(rep.generator(i), rep.generator(j)))
            assert commute == (eps[i, j] == 1)


@pytest.mark.parametrize("name,eps", PRESETS_N6)
def test_coxeter_check_passes_on_presets(name, eps):
    report = check_coxeter_rep(eps)
    assert report.passed, "\n".join(report.lines())


# --- the word problem -------------------------------------------------------------

def test_word_reduce_examples():
    eps = preset("ex-d")
    assert word_reduce((1, 1), eps) == ()
    assert word_reduce((1, 2, 1), eps) == (2,)
    assert word_reduce((1, 3, 1), eps) == (1, 3, 1)


def test_word_reduce_picks_lex_least():
    eps = preset("comm", 3)
    assert word_reduce((3, 2, 1), eps) == (1, 2, 3)
    eps0 = preset("free", 3)
    assert word_reduce((3, 2, 1), eps0) == (3, 2, 1)


def test_word_equal_examples():
    eps = preset("ex-d")
    assert word_equal((1, 2), (2, 1), eps)
    assert not word_equal((1, 3), (3, 1), eps)
    assert word_equal((1, 2, 2, 1), (), eps)


def test_word_letters_validated():
    with pytest.raises(ValueError):
        word_reduce((0,), preset("free", 2))
    with pytest.raises(ValueError):
        word_reduce((3,), preset("free", 2))


def _random_legal_move(rng, w, eps):
    """Insert a square, delete an adjacent square, or swap an adjacent
    commuting pair; all preserve the group element."""
    w = list(w)
    choices = ["insert"]
    squares = [p for p in range(len(w) - 1) if w[p] == w[p + 1]]
    swaps = [p for p in range(len(w) - 1)
             if w[p] != w[p + 1] and eps[w[p], w[p + 1]] == 1]
    if squares:
        choices.append("delete")
    if swaps:
        choices.append("swap")
    move = rng.choice(choices)
    if move == "insert":
        pos = rng.randint(0, len(w))
        a = rng.randint(1, eps.n)
        w[pos:pos] = [a, a]
    elif move == "delete":
        p = rng.choice(squares)
        del w[p:p + 2]
    else:
        p = rng.choice(swaps)
        w[p], w[p + 1] = w[p + 1], w[p]
    return tuple(w)


@given(eps_with_word())
@settings(max_examples=120, deadline=None)
def test_word_equal_is_move_invariant(ew):
    eps, w = ew
    rng = random.Random(hash((eps.entries, w)) & 0xFFFF)
    moved = w
    for _ in range(4):
        moved = _random_legal_move(rng, moved, eps)
    assert word_equal(w, moved, eps)
    assert word_reduce(w, eps) == word_reduce(moved, eps)


@given(eps_with_word())
@settings(max_examples=120, deadline=None)
def test_normal_form_sound_against_reflection_rep(ew):
    eps, w = ew
    rep = coxeter_rep(eps)
    assert rep.word_blocks(w) == rep.word_blocks(word_reduce(w, eps))


def test_normal_form_idempotent():
    eps = preset("ex-f")
    rng = random.Random(5)
    for _ in range(200):
        w = tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 12)))
        nf = word_reduce(w, eps)
        assert word_reduce(nf, eps) == nf


# --- relation checking on block matrices -----------------------------------------

def test_projection_pair_representation_passes():
    u = projection_pair_representation()
    report = rep_check(u, preset("ex-d"), ["magic", "Rring_eps"])
    assert report.passed, "\n".join(report.lines())


def test_projection_pair_noncommutativity_witness():
    u = projection_pair_representation()
    assert not entries_commute(u, 1, 1, 3, 3)


def test_projection_pair_fails_against_wrong_pattern():
    u = projection_pair_representation()
    report = rep_check(u, preset("ex-e"), ["Rring_eps"])
    assert not report.passed


def test_permutation_matrices_pass_relations():
    for name, eps in [("ex-d", preset("ex-d")), ("ex-f", preset("ex-f")),
                      ("comm4", preset("comm", 4))]:
        for sigma in automorphism_group(eps).elements:
            u = perm_representation(sigma)
            report = rep_check(u, eps, ["magic", "R_eps", "R_aut", "orthogonal"])
            assert report.passed, (name, sigma.images, "\n".join(report.lines()))


def test_non_member_fails_R_eps():
    eps = preset("ex-d")
    sigma = Permutation(4, (1, 3, 2, 4))
    report = rep_check(perm_representation(sigma), eps, ["R_eps"])
    assert not report.passed


def test_summed_exchange_relations_on_automorphisms():
    # the refined vanishing products: for eps_ij = 1, eps_kl = 0, k != l
    # the product u[i,k]u[j,l] vanishes on every pattern automorphism
    eps = preset("ex-d")
    for sigma in automorphism_group(eps).elements:
        u = perm_representation(sigma)
        report = rep_check(u, eps, ["Rprime_eps"])
        assert report.passed
        for i, j, k, l in product(range(1, 5), repeat=4):
            if eps[i, j] == 1 and eps[k, l] == 0 and k != l:
                prod_val = u.entry(i, k)[0][0] * u.entry(j, l)[0][0]
                assert prod_val == 0


def test_rep_check_unknown_tag():
    with pytest.raises(ValueError, match="unknown relation"):
        rep_check(projection_pair_representation(), preset("ex-d"), ["bogus"])


def test_rep_check_size_mismatch():
    with pytest.raises(ValueError, match="size"):
        rep_check(projection_pair_representation(), preset("free", 3), ["magic"])
