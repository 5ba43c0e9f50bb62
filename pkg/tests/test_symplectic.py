import itertools
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spweil.generators import weil_generators
from spweil.heisenberg import pi_map
from spweil.operators import WeilParams, identity_op
from spweil.symplectic import (GenToken, NotSymplectic, SpMatrix, decompose,
                               evaluate_word, gen_images, group_order,
                               random_element, sp_assignment, sp_form,
                               symplectic_pairing, weil_assignment, weil_image)


def brute_force_sp2(r):
    """Oracle: all 2x2 matrices over GF(r) with determinant 1."""
    out = []
    for a, b, c, d in itertools.product(range(r), repeat=4):
        if (a * d - b * c) % r == 1:
            out.append(SpMatrix(r, [[a, b], [c, d]]))
    return out


def bfs_closure(mats, ell, r):
    """Oracle: breadth-first closure of SpMatrix generators."""
    ident = SpMatrix.identity(ell, r)
    seen = {ident.rows}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in mats:
            nm = m * g
            if nm.rows not in seen:
                seen.add(nm.rows)
                queue.append(nm)
    return len(seen)


def test_gen_images_l1():
    imgs = gen_images(1, 3)
    assert imgs[GenToken("C", 1)].rows == ((0, 1), (2, 0))
    assert imgs[GenToken("U", 1)].rows == ((1, 1), (0, 1))


def test_gen_images_D():
    imgs = gen_images(2, 5)
    d = imgs[GenToken("D", 2, 1)]
    # f_2 -> f_2 + e_1 and f_1 -> f_1 + e_2, others fixed
    cols = list(zip(*d.rows))
    assert cols[3] == (1, 0, 0, 1)  # image of f_2
    assert cols[1] == (0, 1, 1, 0)  # image of f_1
    assert cols[0] == (1, 0, 0, 0)
    assert cols[2] == (0, 0, 1, 0)


@pytest.mark.parametrize("ell,r", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 3)])
def test_gen_images_are_symplectic(ell, r):
    J = sp_form(ell, r)
    for m in gen_images(ell, r).values():
        assert m.transpose() * J * m == J
        assert m.is_symplectic()


def test_symplectic_pairing_hyperbolic():
    # b(e_i, f_j) = delta_ij in the interleaved ordering
    e1, f1, e2, f2 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    assert symplectic_pairing(e1, f1, 5) == 1
    assert symplectic_pairing(f1, e1, 5) == 4
    assert symplectic_pairing(e1, e2, 5) == 0
    assert symplectic_pairing(e1, f2, 5) == 0


def test_evaluate_word_empty_and_orders():
    ident = SpMatrix.identity(1, 3)
    assign = sp_assignment(1, 3)
    assert evaluate_word([], assign, ident) == ident
    assert evaluate_word([GenToken("C", 1, None, 4)], assign, ident) == ident
    word = [GenToken("C", 1), GenToken("C", 1), GenToken("C", 1), GenToken("C", 1)]
    assert evaluate_word(word, assign, ident) == ident


def test_free_reduction_invariance():
    # a word and an unreduced variant evaluate identically
    assign = sp_assignment(2, 3)
    ident = SpMatrix.identity(2, 3)
    word = [GenToken("U", 1, None, 2), GenToken("D", 2, 1, 1), GenToken("C", 2, None, 3)]
    padded = [GenToken("U", 1, None, 2), GenToken("C", 1, None, 2),
              GenToken("C", 1, None, 2), GenToken("D", 2, 1, 1),
              GenToken("U", 2, None, 1), GenToken("U", 2, None, 2),
              GenToken("C", 2, None, 3)]
    assert evaluate_word(word, assign, ident) == evaluate_word(padded, assign, ident)


def test_decompose_identity_is_empty():
    assert decompose(SpMatrix.identity(2, 5)) == []


def test_decompose_generator_roundtrip():
    u = SpMatrix(3, [[1, 1], [0, 1]])
    word = decompose(u)
    got = evaluate_word(word, sp_assignment(1, 3), SpMatrix.identity(1, 3))
    assert got == u


def test_decompose_rejects_non_symplectic():
    with pytest.raises(NotSymplectic):
        decompose(SpMatrix(3, [[1, 1], [1, 1]]))
    with pytest.raises(NotSymplectic):
        decompose(SpMatrix(5, [[2, 0], [0, 2]]))


def test_decompose_exhaustive_sp2_3():
    assign = sp_assignment(1, 3)
    ident = SpMatrix.identity(1, 3)
    for g in brute_force_sp2(3):
        word = decompose(g)
        assert evaluate_word(word, assign, ident) == g
        # emitted exponents are normalised
        for tok in word:
            assert 1 <= tok.exp < tok.order(3)


@pytest.mark.parametrize("ell,r", [(1, 5), (1, 7), (2, 3), (2, 5), (3, 3), (2, 7)])
def test_decompose_roundtrip_random(ell, r):
    assign = sp_assignment(ell, r)
    ident = SpMatrix.identity(ell, r)
    bound = 8 * ell * ell * r
    for seed in range(100):
        g = random_element(ell, r, seed)
        word = decompose(g)
        assert evaluate_word(word, assign, ident) == g
        assert len(word) <= bound


@given(seed=st.integers(0, 10 ** 9))
@settings(max_examples=40, deadline=None)
def test_decompose_roundtrip_hypothesis(seed):
    g = random_element(2, 3, seed)
    word = decompose(g)
    got = evaluate_word(word, sp_assignment(2, 3), SpMatrix.identity(2, 3))
    assert got == g


def test_random_element_deterministic_and_symplectic():
    a = random_element(2, 5, 123)
    b = random_element(2, 5, 123)
    assert a == b
    assert a.is_symplectic()
    assert random_element(2, 5, 124) != a


def test_random_element_hits_all_of_sp2_3():
    all_sp = {m.rows for m in brute_force_sp2(3)}
    seen = set()
    for seed in range(10000):
        seen.add(random_element(1, 3, seed).rows)
        if len(seen) == 24:
            break
    assert seen == all_sp


def test_group_order_formula_vs_closure():
    # independent closure oracle over the projected generators
    assert group_order(1, 3) == 24 == bfs_closure(list(gen_images(1, 3).values()), 1, 3)
    assert group_order(1, 5) == 120 == bfs_closure(list(gen_images(1, 5).values()), 1, 5)
    assert group_order(2, 3) == 51840 == bfs_closure(list(gen_images(2, 3).values()), 2, 3)
    assert group_order(1, 7) == 336


def test_weil_image_identity(gf7):
    params = WeilParams(3, 1, gf7)
    gens = weil_generators(params)
    from spweil.linalg import DenseMatrix
    assert weil_image(SpMatrix.identity(1, 3), gens) == DenseMatrix.identity(gf7, 3)


def test_weil_image_unique_preimages(gf7):
    params = WeilParams(3, 1, gf7)
    gens = weil_generators(params)
    # pi(U) pulls back to U, pi(lam C) to lam C (= 3 C over GF(7))
    assert weil_image(SpMatrix(3, [[1, 1], [0, 1]]), gens) == gens.U[0].materialize()
    assert weil_image(SpMatrix(3, [[0, 1], [2, 0]]), gens) == gens.lamC[0].materialize()


def test_weil_image_homomorphism(gf7):
    params = WeilParams(3, 2, gf7)
    gens = weil_generators(params)
    for seed in range(10):
        g = random_element(2, 3, seed)
        h = random_element(2, 3, seed + 1000)
        assert weil_image(g * h, gens) == weil_image(g, gens) * weil_image(h, gens)


def test_weil_image_word_independent(gf7):
    # evaluating a different word for the same element gives the same matrix
    params = WeilParams(3, 1, gf7)
    gens = weil_generators(params)
    ident = identity_op(params)
    g = SpMatrix(3, [[1, 1], [0, 1]])
    word1 = decompose(g)
    # an artificially padded word for the same group element
    word2 = [GenToken("C", 1, None, 2), GenToken("C", 1, None, 2)] + word1
    m1 = evaluate_word(word1, weil_assignment(gens), ident).materialize()
    m2 = evaluate_word(word2, weil_assignment(gens), ident).materialize()
    assert m1 == m2


def test_weil_image_independent_factorizations(gf7, gf11):
    # factor g as h * (h^-1 g): two genuinely different words, one Weil matrix
    for r, ell, ctx in [(3, 2, gf7), (5, 2, gf11)]:
        params = WeilParams(r, ell, ctx)
        gens = weil_generators(params)
        ident = identity_op(params)
        assign = weil_assignment(gens)
        for seed in range(5):
            g = random_element(ell, r, seed)
            h = random_element(ell, r, seed + 777)
            word_direct = decompose(g)
            word_split = decompose(h) + decompose(h.inverse() * g)
            assert word_direct != word_split
            m1 = evaluate_word(word_direct, assign, ident).materialize()
            m2 = evaluate_word(word_split, assign, ident).materialize()
            assert m1 == m2


def test_word_serialization_roundtrip():
    from spweil.serialize import parse_word, serialize_word
    word = [GenToken("C", 1, None, 3), GenToken("D", 2, 1, 4),
            GenToken("U", 2, None, 1)]
    records = serialize_word(word)
    assert records[1] == {"gen": "D", "t": 2, "s": 1, "exp": 4}
    assert "s" not in records[0]
    assert parse_word(records) == word


def test_pi_weil_image_roundtrip(gf7):
    params = WeilParams(3, 2, gf7)
    gens = weil_generators(params)
    for seed in range(25):
        g = random_element(2, 3, seed)
        assert pi_map(weil_image(g, gens), params) == g
