import cmath
import math

import numpy as np
import pytest

from siegelchi import (Characteristic, NonPositiveTolerance, NotLevel2,
                       NotUpperHalfSpace, TooFewUsable,
                       characteristic, det_sqrt_factor, enumerate_even_mod2,
                       generator, identity, make_matrix, mobius, multiply,
                       parity, random_word, shift, siegel_point,
                       sign_shift_exponent, theta_constant, truncation_radius,
                       verify_character, verify_igusa_product,
                       verify_transformation_general, word_to_matrix)

from util import random_sp, random_tau, seeded

TAU_I = siegel_point([[1j]])


def oracle_theta_at_i(a, b, radius=12):
    """Sum exp(i pi ((p + a/2)^2 i + (p + a/2) b)) by direct loop."""
    total = 0.0 + 0.0j
    for p in range(-radius, radius + 1):
        v = p + a / 2.0
        total += cmath.exp(1j * math.pi * (v * v * 1j + v * b))
    return total


# ---------------------------------------------------------------------------
# Point validation
# ---------------------------------------------------------------------------

def test_point_validation():
    good = siegel_point([[0.3 + 1j, 0.1], [0.1, 2j]])
    assert good.g == 2
    with pytest.raises(NotUpperHalfSpace):
        siegel_point([[1j, 0.5], [0.0, 1j]])           # not symmetric
    with pytest.raises(NotUpperHalfSpace):
        siegel_point([[-1j]])                          # Im not positive definite
    with pytest.raises(NotUpperHalfSpace):
        siegel_point([[1j, 0.0]])                      # not square


def test_non_positive_tolerance():
    with pytest.raises(NonPositiveTolerance):
        theta_constant(characteristic(0, 0), TAU_I, tail_tol=0.0)


# ---------------------------------------------------------------------------
# Theta constants against independent sums
# ---------------------------------------------------------------------------

def test_classical_value_at_i():
    # reference 1.0864348112... from the direct Gaussian sum
    oracle = oracle_theta_at_i(0, 0, radius=10)
    value = theta_constant(characteristic(0, 0), TAU_I)
    assert abs(value - oracle) < 1e-9
    assert abs(value - 1.0864348112133080) < 1e-9
    assert abs(value.imag) < 1e-12


def test_half_shift_values_agree_at_i():
    v10 = theta_constant(characteristic(1, 0), TAU_I)
    v01 = theta_constant(characteristic(0, 1), TAU_I)
    assert abs(v10 - oracle_theta_at_i(1, 0)) < 1e-10
    assert abs(v01 - oracle_theta_at_i(0, 1)) < 1e-10
    assert abs(v10 - v01) < 1e-10            # specific to tau = i
    assert abs(v10 - 0.9135791381561168) < 1e-10


def test_odd_characteristic_vanishes():
    assert abs(theta_constant(characteristic(1, 1), TAU_I)) < 1e-10
    rng = seeded(61)
    for g in (1, 2):
        for _ in range(10):
            point = random_tau(g, rng)
            m = Characteristic.from_vector([rng.randint(-2, 2) for _ in range(2 * g)])
            if parity(m) == "odd":
                assert abs(theta_constant(m, point)) < 2e-12


def test_truncation_radius_doubling():
    rng = seeded(62)
    for g in (1, 2):
        for _ in range(8):
            point = random_tau(g, rng)
            m = Characteristic.from_vector([rng.randint(-1, 1) for _ in range(2 * g)])
            r = truncation_radius(m, point, 1e-12)
            a = theta_constant(m, point, radius=r)
            b = theta_constant(m, point, radius=2 * r)
            assert abs(a - b) < 1e-12


def test_shift_sign_rule():
    rng = seeded(63)
    for g in (1, 2):
        for _ in range(12):
            point = random_tau(g, rng)
            m = Characteristic.from_vector([rng.randint(0, 1) for _ in range(2 * g)])
            bump = Characteristic.from_vector([rng.randint(-3, 3) for _ in range(2 * g)])
            lhs = theta_constant(shift(m, bump), point)
            rhs = (-1) ** sign_shift_exponent(m, bump) * theta_constant(m, point)
            assert abs(lhs - rhs) < 2e-12


def test_degree_three_runs():
    point = random_tau(3, seeded(64))
    value = theta_constant(Characteristic.from_vector([0] * 6), point)
    assert abs(value) > 0.1


# ---------------------------------------------------------------------------
# Mobius action and the square-root factor
# ---------------------------------------------------------------------------

def test_mobius_identity():
    point = random_tau(2, seeded(71))
    moved = mobius(identity(2), point)
    assert np.allclose(moved.tau, point.tau)


def test_mobius_c11_at_i():
    moved = mobius(generator("C", 1, 1, 1), TAU_I)
    assert moved.tau[0, 0] == pytest.approx((2 + 1j) / 5)   # i / (2i + 1)


def test_mobius_preserves_upper_half_space():
    rng = seeded(72)
    for g in (1, 2):
        for _ in range(100):
            mat = random_sp(g, rng)
            point = random_tau(g, rng)
            moved = mobius(mat, point)          # revalidates on construction
            assert moved.im_min_eig > 0


def test_mobius_left_action():
    rng = seeded(73)
    for g in (1, 2):
        for _ in range(20):
            m1 = random_sp(g, rng, length=2)
            m2 = random_sp(g, rng, length=2)
            point = random_tau(g, rng)
            a = mobius(multiply(m1, m2), point)
            b = mobius(m1, mobius(m2, point))
            assert np.max(np.abs(a.tau - b.tau)) < 1e-9


def test_det_sqrt_factor_values():
    assert det_sqrt_factor(identity(1), TAU_I) == pytest.approx(1.0)
    assert det_sqrt_factor(generator("B", 1, 1, 1), TAU_I) == pytest.approx(1.0)
    root = det_sqrt_factor(generator("C", 1, 1, 1), TAU_I)
    assert root == pytest.approx(1.272019649514069 + 0.7861513777574233j)
    assert -math.pi / 2 < cmath.phase(root) <= math.pi / 2


def test_det_sqrt_branch_is_principal():
    rng = seeded(74)
    for g in (1, 2):
        for _ in range(40):
            root = det_sqrt_factor(random_sp(g, rng), random_tau(g, rng))
            assert -math.pi / 2 < cmath.phase(root) <= math.pi / 2 + 1e-15


# ---------------------------------------------------------------------------
# Verification sweeps
# ---------------------------------------------------------------------------

def test_verify_character_identity():
    report = verify_character(identity(1), TAU_I)
    assert report.passed
    assert all(abs(r - 1) < 1e-12 for r in report.ratios)


def test_verify_character_b11_at_i():
    report = verify_character(generator("B", 1, 1, 1), TAU_I, tol=1e-6)
    assert report.passed
    assert len(report.m_list) == 3
    assert report.max_deviation < 1e-9


def test_verify_character_random_words():
    rng = seeded(81)
    for s in range(50):
        mat = word_to_matrix(random_word(1, rng.randint(1, 4), s))
        report = verify_character(mat, random_tau(1, rng))
        assert report.passed, (s, report.max_deviation)


def test_verify_character_requires_level2():
    with pytest.raises(NotLevel2):
        verify_character(make_matrix([[1, 1], [0, 1]]), TAU_I)


def test_verify_general_identity():
    report = verify_transformation_general(
        identity(2), enumerate_even_mod2(2), random_tau(2, seeded(82)))
    assert report.passed
    assert all(abs(r - 1) < 1e-10 for r in report.ratios)


def test_verify_general_full_group():
    # cross terms in the phase only matter off the level-2 group
    rng = seeded(83)
    for g in (1, 2):
        for _ in range(12):
            mat = random_sp(g, rng)
            report = verify_transformation_general(
                mat, enumerate_even_mod2(g), random_tau(g, rng), tol=1e-6)
            assert report.passed, report.max_deviation
            assert abs(report.estimated_unit ** 8 - 1) < 1e-5


def test_verify_general_agrees_with_character_sweep():
    rng = seeded(84)
    for _ in range(10):
        mat = word_to_matrix(random_word(1, rng.randint(1, 4), rng.randint(0, 10**9)))
        point = random_tau(1, rng)
        a = verify_character(mat, point)
        b = verify_transformation_general(mat, enumerate_even_mod2(1), point)
        assert a.passed and b.passed
        assert abs(a.estimated_unit - b.estimated_unit) < 1e-9


def test_verify_general_too_few_usable():
    with pytest.raises(TooFewUsable):
        verify_transformation_general(identity(1), [characteristic(1, 1)], TAU_I)


def test_verify_igusa_product_identity():
    report = verify_igusa_product(characteristic(0, 0), characteristic(1, 0),
                                  identity(1), TAU_I)
    assert report.passed
    assert all(abs(r - 1) < 1e-10 for r in report.ratios)


def test_verify_igusa_product_b11_at_i():
    report = verify_igusa_product(characteristic(0, 0), characteristic(1, 0),
                                  generator("B", 1, 1, 1), TAU_I, tol=1e-6)
    assert report.passed
    assert report.max_deviation < 1e-9
    assert abs(report.estimated_unit ** 4 - 1) < 1e-6


def test_verify_igusa_product_requires_even():
    with pytest.raises(TooFewUsable):
        verify_igusa_product(characteristic(1, 1), characteristic(0, 0),
                             identity(1), TAU_I)


def test_unit_estimates_are_eighth_roots():
    rng = seeded(85)
    for _ in range(10):
        mat = word_to_matrix(random_word(2, rng.randint(1, 4), rng.randint(0, 10**9)))
        report = verify_character(mat, random_tau(2, rng))
        assert report.passed
        assert abs(abs(report.estimated_unit) - 1) < 1e-9
        assert abs(report.estimated_unit ** 8 - 1) < 1e-8
