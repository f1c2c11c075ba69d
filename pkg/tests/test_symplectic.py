import numpy as np
import pytest

from siegelchi import (BadShape, IndexOutOfRange, NotSymplectic, commutator,
                       diag_vector, generator, identity, inverse, is_igusa48,
                       is_level2, is_level4, make_matrix, matrix_power,
                       multiply, random_igusa48, random_word, word,
                       word_to_matrix)

from util import random_level2, seeded


# ---------------------------------------------------------------------------
# Construction and validation
# ---------------------------------------------------------------------------

def test_identity_accepted():
    for g in (1, 2, 3):
        m = make_matrix(np.eye(2 * g, dtype=int))
        assert m.g == g
        assert is_level2(m) and is_level4(m) and is_igusa48(m)


def test_b11_accepted():
    m = make_matrix([[1, 2], [0, 1]])
    assert m.entries.tolist() == [[1, 2], [0, 1]]
    assert m.a.tolist() == [[1]] and m.b.tolist() == [[2]]


def test_symplectic_but_not_level2():
    m = make_matrix([[1, 1], [0, 1]])
    assert not is_level2(m)
    lower = make_matrix([[1, 0], [1, 1]])
    assert not is_level2(lower)


def test_scalar_two_rejected():
    with pytest.raises(NotSymplectic):
        make_matrix([[2, 0], [0, 2]])


def test_bad_shapes():
    with pytest.raises(BadShape):
        make_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(BadShape):
        make_matrix([[1, 0], [0, 1], [0, 0]])
    with pytest.raises(BadShape):
        make_matrix([[1.5, 0], [0, 1]])


def test_asymmetric_ab_rejected():
    # upper unipotent with non-symmetric b block
    bad = [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    with pytest.raises(NotSymplectic):
        make_matrix(bad)


def test_diag_vector():
    assert diag_vector([[1, 0], [0, 1]]) == (1, 1)
    assert diag_vector([[0, 2], [2, 0]]) == (0, 0)
    assert diag_vector([[5, 2], [2, 1]]) == (5, 1)
    with pytest.raises(BadShape):
        diag_vector([[1, 2, 3], [4, 5, 6]])


# ---------------------------------------------------------------------------
# Products and inverses
# ---------------------------------------------------------------------------

def test_b11_times_c11():
    prod = multiply(generator("B", 1, 1, 1), generator("C", 1, 1, 1))
    assert prod.entries.tolist() == [[5, 2], [2, 1]]


def test_inverse_roundtrip():
    rng = seeded(101)
    for g in (1, 2, 3):
        for _ in range(10):
            m = random_level2(g, rng)
            assert multiply(m, inverse(m)) == identity(g)
            assert multiply(inverse(m), m) == identity(g)


def test_a12_power_cancellation():
    a12 = generator("A", 1, 2, 2)
    assert multiply(matrix_power(a12, 5), matrix_power(a12, -5)) == identity(2)


def test_block_inverse_matches_adjugate():
    # independent oracle: exact rational inverse via sympy
    sympy = pytest.importorskip("sympy")
    rng = seeded(202)
    for g in (1, 2, 3):
        for _ in range(5):
            m = random_level2(g, rng)
            expected = sympy.Matrix(m.entries.tolist()).inv()
            assert inverse(m).entries.tolist() == [
                [int(expected[i, j]) for j in range(2 * g)] for i in range(2 * g)]


def test_transpose_relations_hold():
    # membership forces b^T d and a^T c symmetric as well
    rng = seeded(303)
    for g in (1, 2, 3):
        for _ in range(20):
            m = random_level2(g, rng)
            bd = m.b.T @ m.d
            ac = m.a.T @ m.c
            assert np.array_equal(bd, bd.T)
            assert np.array_equal(ac, ac.T)


# ---------------------------------------------------------------------------
# Membership predicates
# ---------------------------------------------------------------------------

def test_b11_membership():
    b11 = generator("B", 1, 1, 1)
    assert is_level2(b11) and not is_level4(b11) and not is_igusa48(b11)


def test_translation_by_eight():
    m = make_matrix([[1, 8], [0, 1]])
    assert is_level2(m) and is_level4(m) and is_igusa48(m)


def test_membership_chain():
    rng = seeded(404)
    for g in (1, 2):
        for k in range(25):
            m = random_igusa48(g, rng.randint(0, 10**9))
            assert is_igusa48(m) and is_level4(m) and is_level2(m)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def test_generator_values_degree_one():
    assert generator("B", 1, 1, 1).entries.tolist() == [[1, 2], [0, 1]]
    assert generator("C", 1, 1, 1).entries.tolist() == [[1, 0], [2, 1]]
    assert generator("A", 1, 1, 1).entries.tolist() == [[-1, 0], [0, -1]]


def test_generator_a12_blocks():
    m = generator("A", 1, 2, 2)
    assert m.a.tolist() == [[1, 2], [0, 1]]
    assert m.b.tolist() == [[0, 0], [0, 0]]
    assert m.c.tolist() == [[0, 0], [0, 0]]
    assert m.d.tolist() == [[1, 0], [-2, 1]]


def test_generator_c_is_transpose_of_b():
    for g in (1, 2, 3):
        for i in range(1, g + 1):
            for j in range(i, g + 1):
                b = generator("B", i, j, g)
                c = generator("C", i, j, g)
                assert np.array_equal(c.entries, b.entries.T)


def test_generator_index_errors():
    with pytest.raises(IndexOutOfRange):
        generator("B", 2, 1, 2)  # B needs i <= j
    with pytest.raises(IndexOutOfRange):
        generator("A", 0, 1, 2)
    with pytest.raises(IndexOutOfRange):
        generator("A", 1, 3, 2)
    with pytest.raises(IndexOutOfRange):
        generator("D", 1, 1, 2)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def test_empty_word_is_identity():
    assert word_to_matrix(word(2, [])) == identity(2)


def test_word_product_example():
    w = word(1, [("B", 1, 1, 1), ("C", 1, 1, 1)])
    assert word_to_matrix(w).entries.tolist() == [[5, 2], [2, 1]]


def test_word_single_a12():
    m = word_to_matrix(word(2, [("A", 1, 2, 1)]))
    assert m == generator("A", 1, 2, 2)


def test_words_land_in_level2():
    for g in (1, 2, 3):
        for s in range(15):
            assert is_level2(word_to_matrix(random_word(g, 8, s)))


def test_random_word_deterministic():
    w1 = random_word(2, 12, 99)
    w2 = random_word(2, 12, 99)
    assert w1 == w2
    assert len(w1) == 12
    assert all(e in (-1, 1) for _, _, _, e in w1.letters)
    assert random_word(2, 12, 100) != w1


def test_word_validates_letters():
    with pytest.raises(IndexOutOfRange):
        word(2, [("B", 2, 1, 1)])


# ---------------------------------------------------------------------------
# Commutators and subgroup sampling
# ---------------------------------------------------------------------------

def test_commutator_with_self():
    m = word_to_matrix(random_word(2, 4, 5))
    assert commutator(m, m) == identity(2)


def test_commutator_of_b_and_c():
    k = commutator(generator("B", 1, 1, 1), generator("C", 1, 1, 1))
    assert is_igusa48(k)


def test_fourth_power_of_b11():
    m = matrix_power(generator("B", 1, 1, 1), 4)
    assert m.entries.tolist() == [[1, 8], [0, 1]]
    assert is_igusa48(m)


def test_commutators_land_in_igusa_group():
    # level-2 commutators always satisfy the mod-4 / diagonal-mod-8 conditions
    rng = seeded(505)
    for g in (1, 2, 3):
        for _ in range(70):
            m1 = random_level2(g, rng, max_length=4)
            m2 = random_level2(g, rng, max_length=4)
            assert is_igusa48(commutator(m1, m2))


def test_random_igusa48_always_in_subgroup():
    for g in (1, 2, 3):
        for s in range(30):
            assert is_igusa48(random_igusa48(g, s))
