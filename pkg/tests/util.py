"""Shared helpers for the test suite: samplers for the full symplectic group
(beyond the level-2 alphabet) and random upper-half-space points."""

import random

import numpy as np

from siegelchi import SiegelPoint, make_matrix, multiply, random_word, word_to_matrix


def random_level2(g, rng, max_length=6):
    """Random level-2 element via a random generator word."""
    return word_to_matrix(random_word(g, rng.randint(0, max_length), rng.randint(0, 10**9)))


def _j_matrix(g):
    eye = np.eye(g, dtype=object)
    zero = np.zeros((g, g), dtype=object)
    return make_matrix(np.block([[zero, -eye], [eye, zero]]))


def _translation(g, rng):
    s = np.zeros((g, g), dtype=object)
    for i in range(g):
        for j in range(i, g):
            v = rng.randint(-2, 2)
            s[i, j] = v
            s[j, i] = v
    eye = np.eye(g, dtype=object)
    zero = np.zeros((g, g), dtype=object)
    return make_matrix(np.block([[eye, s], [zero, eye]]))


def _gl_part(g, rng):
    u = np.eye(g, dtype=object)
    if g > 1:
        i = rng.randint(0, g - 2)
        u[i, i + 1] = rng.randint(-1, 1)
    d = np.eye(g, dtype=object)
    if g > 1:
        d[i + 1, i] = -u[i, i + 1]
    zero = np.zeros((g, g), dtype=object)
    return make_matrix(np.block([[u, zero], [zero, d]]))


def random_sp(g, rng, length=4):
    """Random symplectic matrix mixing non-level-2 factors (J, odd translations,
    GL blocks) with level-2 generators."""
    out = make_matrix(np.eye(2 * g, dtype=object))
    for _ in range(length):
        kind = rng.choice("JTUW")
        if kind == "J":
            factor = _j_matrix(g)
        elif kind == "T":
            factor = _translation(g, rng)
        elif kind == "U":
            factor = _gl_part(g, rng)
        else:
            factor = random_level2(g, rng, max_length=2)
        out = multiply(out, factor)
    return out


def random_tau(g, rng):
    """Random symmetric point with well-conditioned positive-definite imaginary part."""
    re = np.array([[rng.uniform(-0.4, 0.4) for _ in range(g)] for _ in range(g)])
    re = (re + re.T) / 2.0
    w = np.array([[rng.uniform(-0.3, 0.3) for _ in range(g)] for _ in range(g)])
    im = (0.6 + rng.uniform(0.0, 0.4)) * np.eye(g) + w @ w.T
    return SiegelPoint.make(re + 1j * im)


def seeded(seed):
    return random.Random(seed)
