"""Exact integer symplectic matrices of degree g and the level-2 generator alphabet.

Matrices are stored as (2g, 2g) numpy arrays of dtype=object holding Python
ints, so all products stay exact no matter how long a generator word gets.
The four g x g corners are written a (top left), b (top right), c (bottom
left), d (bottom right).
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BadShape, DegreeMismatch, IndexOutOfRange, NotSymplectic

GENERATOR_KINDS = ("A", "B", "C")


def _int_matrix(entries) -> np.ndarray:
    """Copy arbitrary nested input into an object array of Python ints.

    Entries must be true integers; floats are rejected rather than truncated.
    """
    try:
        mat = np.array([[operator.index(x) for x in row] for row in entries],
                       dtype=object)
    except (TypeError, ValueError) as exc:
        raise BadShape(f"matrix entries must be integers: {exc}") from exc
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise BadShape(f"matrix must be square, got shape {mat.shape}")
    return mat


def _identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def _zeros(n: int) -> np.ndarray:
    return np.zeros((n, n), dtype=object)


def congruent_to_identity(entries: np.ndarray, modulus: int) -> bool:
    """True when every entry of (entries - I) is divisible by modulus."""
    n = entries.shape[0]
    return bool(((entries - _identity(n)) % modulus == 0).all())


def diag_vector(s) -> tuple:
    """Diagonal of a square matrix, in natural order, as a tuple of ints."""
    mat = s.entries if isinstance(s, SymplecticMatrix) else _int_matrix(s)
    return tuple(int(mat[i, i]) for i in range(mat.shape[0]))


def _diag_col(s: np.ndarray) -> np.ndarray:
    """Diagonal of a square object array as an object vector."""
    return np.array([s[i, i] for i in range(s.shape[0])], dtype=object)


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """Validated element of the degree-g integral symplectic group."""

    g: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)

    @property
    def a(self) -> np.ndarray:
        return self.entries[: self.g, : self.g]

    @property
    def b(self) -> np.ndarray:
        return self.entries[: self.g, self.g :]

    @property
    def c(self) -> np.ndarray:
        return self.entries[self.g :, : self.g]

    @property
    def d(self) -> np.ndarray:
        return self.entries[self.g :, self.g :]

    def ab_diag(self) -> np.ndarray:
        """(a b^T)_0 as an object column vector."""
        return _diag_col(self.a @ self.b.T)

    def cd_diag(self) -> np.ndarray:
        """(c d^T)_0 as an object column vector."""
        return _diag_col(self.c @ self.d.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return self.g == other.g and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.g, tuple(int(x) for x in self.entries.ravel())))

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return multiply(self, other)

    def __repr__(self):
        return f"SymplecticMatrix(g={self.g}, entries={self.entries.tolist()})"


def make_matrix(entries) -> SymplecticMatrix:
    """Validate a (2g, 2g) integer matrix against the symplectic block relations.

    Raises BadShape for a non-square or odd-dimension input, NotSymplectic
    when a d^T - b c^T != I or a b^T, c d^T fail to be symmetric.
    """
    mat = _int_matrix(entries)
    n = mat.shape[0]
    if n % 2 != 0 or n == 0:
        raise BadShape(f"symplectic matrices have even dimension, got {n}")
    g = n // 2
    a, b = mat[:g, :g], mat[:g, g:]
    c, d = mat[g:, :g], mat[g:, g:]
    if not np.array_equal(a @ d.T - b @ c.T, _identity(g)):
        raise NotSymplectic("a d^T - b c^T != I")
    ab = a @ b.T
    if not np.array_equal(ab, ab.T):
        raise NotSymplectic("a b^T is not symmetric")
    cd = c @ d.T
    if not np.array_equal(cd, cd.T):
        raise NotSymplectic("c d^T is not symmetric")
    return SymplecticMatrix(g=g, entries=mat)


def identity(g: int) -> SymplecticMatrix:
    return SymplecticMatrix(g=g, entries=_identity(2 * g))


def _check_same_degree(m1: SymplecticMatrix, m2: SymplecticMatrix):
    if m1.g != m2.g:
        raise DegreeMismatch(f"degrees differ: {m1.g} vs {m2.g}")


def multiply(m1: SymplecticMatrix, m2: SymplecticMatrix) -> SymplecticMatrix:
    """Exact product, revalidated."""
    _check_same_degree(m1, m2)
    return make_matrix(m1.entries @ m2.entries)


def inverse(m: SymplecticMatrix) -> SymplecticMatrix:
    """Exact inverse via the block formula (d^T, -b^T; -c^T, a^T)."""
    top = np.hstack([m.d.T, -m.b.T])
    bot = np.hstack([-m.c.T, m.a.T])
    return make_matrix(np.vstack([top, bot]))


def matrix_power(m: SymplecticMatrix, k: int) -> SymplecticMatrix:
    """m**k for any integer k, exact."""
    if k < 0:
        return matrix_power(inverse(m), -k)
    out = identity(m.g)
    for _ in range(k):
        out = multiply(out, m)
    return out


# ---------------------------------------------------------------------------
# Congruence subgroup membership
# ---------------------------------------------------------------------------

def is_level2(m: SymplecticMatrix) -> bool:
    """M = I mod 2."""
    return congruent_to_identity(m.entries, 2)


def is_level4(m: SymplecticMatrix) -> bool:
    """M = I mod 4."""
    return congruent_to_identity(m.entries, 4)


def is_igusa48(m: SymplecticMatrix) -> bool:
    """M = I mod 4 with the diagonals of a b^T and c d^T divisible by 8."""
    if not is_level4(m):
        return False
    return bool((m.ab_diag() % 8 == 0).all() and (m.cd_diag() % 8 == 0).all())


def is_igusa48_up_to_sign(m: SymplecticMatrix) -> bool:
    """True when M or -M lies in the mod-4, diagonal-mod-8 subgroup.

    The theta-constant character cannot see the difference between M and -M
    on even characteristics, so this is the exact membership detected by
    constancy of the character over even classes.
    """
    if is_igusa48(m):
        return True
    neg = SymplecticMatrix(g=m.g, entries=-m.entries)
    return is_igusa48(neg)


# ---------------------------------------------------------------------------
# Generator alphabet and words
# ---------------------------------------------------------------------------

def _check_indices(kind: str, i: int, j: int, g: int):
    if kind not in GENERATOR_KINDS:
        raise IndexOutOfRange(f"unknown generator kind {kind!r}")
    if not (1 <= i <= g and 1 <= j <= g):
        raise IndexOutOfRange(f"{kind}_{i}{j} out of range for g={g}")
    if kind in ("B", "C") and i > j:
        raise IndexOutOfRange(f"{kind} generators need i <= j, got ({i}, {j})")


def generator(kind: str, i: int, j: int, g: int) -> SymplecticMatrix:
    """One of the standard level-2 generators, with 1-based indices.

    A(i, j): block diag(a, a^-T) where a is I with entry (i, j) set to 2 for
    i != j, or entry (i, i) set to -1.  B(i, j): upper unipotent with b the
    symmetric matrix carrying 2 at (i, j) and (j, i).  C(i, j) is the
    transpose of B(i, j).
    """
    _check_indices(kind, i, j, g)
    i0, j0 = i - 1, j - 1
    eye = _identity(g)
    zero = _zeros(g)
    if kind == "A":
        a = eye.copy()
        d = eye.copy()
        if i0 == j0:
            a[i0, i0] = -1
            d[i0, i0] = -1
        else:
            a[i0, j0] = 2
            d[j0, i0] = -2  # a^-T for a = I + 2 E_ij
        return make_matrix(np.block([[a, zero], [zero, d]]))
    b = zero.copy()
    b[i0, j0] = 2
    b[j0, i0] = 2
    if kind == "B":
        return make_matrix(np.block([[eye, b], [zero, eye]]))
    return make_matrix(np.block([[eye, zero], [b, eye]]))


@dataclass(frozen=True)
class GeneratorWord:
    """Ordered product of generator powers, kept symbolically."""

    g: int
    letters: tuple  # of (kind, i, j, exponent)

    def __post_init__(self):
        for kind, i, j, _ in self.letters:
            _check_indices(kind, i, j, self.g)

    def __len__(self):
        return len(self.letters)


def word(g: int, letters: Iterable[Sequence]) -> GeneratorWord:
    """Build a word from an iterable of (kind, i, j, exponent) items."""
    try:
        normalized = tuple((str(k), operator.index(i), operator.index(j),
                            operator.index(e)) for k, i, j, e in letters)
    except (TypeError, ValueError) as exc:
        raise BadShape(f"word letters must be (kind, i, j, exponent): {exc}") from exc
    return GeneratorWord(g=g, letters=normalized)


def word_to_matrix(w: GeneratorWord) -> SymplecticMatrix:
    """Ordered product of the word's generator powers; lands in the level-2 group."""
    out = identity(w.g)
    for kind, i, j, e in w.letters:
        out = multiply(out, matrix_power(generator(kind, i, j, w.g), e))
    return out


def alphabet(g: int) -> list:
    """All legal (kind, i, j) triples for degree g, in a fixed order."""
    letters = [("A", i, j) for i in range(1, g + 1) for j in range(1, g + 1)]
    letters += [("B", i, j) for i in range(1, g + 1) for j in range(i, g + 1)]
    letters += [("C", i, j) for i in range(1, g + 1) for j in range(i, g + 1)]
    return letters


def random_word(g: int, length: int, seed: int) -> GeneratorWord:
    """Uniform letters with exponents +-1; deterministic for a fixed seed."""
    rng = random.Random(seed)
    return _random_word(g, length, rng)


def _random_word(g: int, length: int, rng: random.Random) -> GeneratorWord:
    letters = []
    pool = alphabet(g)
    for _ in range(length):
        kind, i, j = rng.choice(pool)
        letters.append((kind, i, j, rng.choice((-1, 1))))
    return GeneratorWord(g=g, letters=tuple(letters))


def commutator(m1: SymplecticMatrix, m2: SymplecticMatrix) -> SymplecticMatrix:
    """m1 m2 m1^-1 m2^-1."""
    _check_same_degree(m1, m2)
    return multiply(multiply(m1, m2), multiply(inverse(m1), inverse(m2)))


def random_igusa48(g: int, seed: int) -> SymplecticMatrix:
    """Random element of the mod-4, diagonal-mod-8 subgroup.

    Built as a product of commutators of random level-2 words, fourth powers
    of B/C generators and squares of A generators; the membership predicate
    is asserted on the result.
    """
    return _random_igusa48(g, random.Random(seed))


def _random_igusa48(g: int, rng: random.Random) -> SymplecticMatrix:
    out = identity(g)
    for _ in range(rng.randint(1, 3)):
        w1 = word_to_matrix(_random_word(g, rng.randint(1, 4), rng))
        w2 = word_to_matrix(_random_word(g, rng.randint(1, 4), rng))
        out = multiply(out, commutator(w1, w2))
    for _ in range(rng.randint(0, 3)):
        kind, i, j = rng.choice(alphabet(g))
        power = 2 if kind == "A" else 4
        out = multiply(out, matrix_power(generator(kind, i, j, g), power))
    assert is_igusa48(out), "construction must land in the subgroup"
    return out
