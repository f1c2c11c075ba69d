"""Theta characteristics: parity, the affine matrix action and its exact inverse.

A characteristic is an integer vector of length 2g split into halves
(m', m'').  Values are never reduced mod 2 automatically; the exact integer
representative matters for the character formula, so reduction is always an
explicit caller choice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegreeMismatch, ParityMismatch
from .symplectic import SymplecticMatrix


@dataclass(frozen=True)
class Characteristic:
    """Integer vector in Z^(2g), stored as the two halves."""

    g: int
    m_prime: tuple
    m_double: tuple

    def __post_init__(self):
        if len(self.m_prime) != self.g or len(self.m_double) != self.g:
            raise DegreeMismatch(
                f"halves must have length g={self.g}, got "
                f"{len(self.m_prime)} and {len(self.m_double)}")

    @classmethod
    def from_vector(cls, vec) -> "Characteristic":
        vec = [int(x) for x in vec]
        if len(vec) % 2 != 0 or not vec:
            raise DegreeMismatch(f"characteristic vector must have even length, got {len(vec)}")
        g = len(vec) // 2
        return cls(g=g, m_prime=tuple(vec[:g]), m_double=tuple(vec[g:]))

    def vector(self) -> tuple:
        return self.m_prime + self.m_double

    def mod2(self) -> "Characteristic":
        return Characteristic(
            g=self.g,
            m_prime=tuple(x % 2 for x in self.m_prime),
            m_double=tuple(x % 2 for x in self.m_double))

    def __repr__(self):
        return f"Characteristic({list(self.vector())})"


def characteristic(*entries) -> Characteristic:
    """Shorthand: characteristic(1, 0) is the vector (1, 0)."""
    return Characteristic.from_vector(entries)


def parity(m: Characteristic) -> str:
    """'even' when the pairing m'.m'' is even, 'odd' otherwise."""
    return "even" if is_even(m) else "odd"


def is_even(m: Characteristic) -> bool:
    return sum(p * q for p, q in zip(m.m_prime, m.m_double)) % 2 == 0


def enumerate_even_mod2(g: int) -> list:
    """All even representatives in {0,1}^(2g), lexicographic by (m', m'').

    There are 2^(g-1) (2^g + 1) of them.
    """
    out = []
    for bits in itertools.product((0, 1), repeat=2 * g):
        m = Characteristic(g=g, m_prime=bits[:g], m_double=bits[g:])
        if is_even(m):
            out.append(m)
    return out


def _check_degree(mat: SymplecticMatrix, m: Characteristic):
    if mat.g != m.g:
        raise DegreeMismatch(f"matrix degree {mat.g} != characteristic degree {m.g}")


def _col(half) -> np.ndarray:
    return np.array([int(x) for x in half], dtype=object)


def act(mat: SymplecticMatrix, m: Characteristic) -> Characteristic:
    """Affine action: (d m' - c m'' + (c d^T)_0, -b m' + a m'' + (a b^T)_0).

    Exact over the integers; mod 2 it is a group action.
    """
    _check_degree(mat, m)
    mp, mpp = _col(m.m_prime), _col(m.m_double)
    top = mat.d @ mp - mat.c @ mpp + mat.cd_diag()
    bot = -mat.b @ mp + mat.a @ mpp + mat.ab_diag()
    return Characteristic(g=m.g, m_prime=tuple(int(x) for x in top),
                          m_double=tuple(int(x) for x in bot))


def solve_preimage(mat: SymplecticMatrix, m: Characteristic) -> Characteristic:
    """The unique n with act(mat, n) == m, by the closed block-transpose form."""
    _check_degree(mat, m)
    mp, mpp = _col(m.m_prime), _col(m.m_double)
    cd0, ab0 = mat.cd_diag(), mat.ab_diag()
    top = mat.a.T @ mp + mat.c.T @ mpp - mat.a.T @ cd0 - mat.c.T @ ab0
    bot = mat.b.T @ mp + mat.d.T @ mpp - mat.b.T @ cd0 - mat.d.T @ ab0
    n = Characteristic(g=m.g, m_prime=tuple(int(x) for x in top),
                       m_double=tuple(int(x) for x in bot))
    assert act(mat, n) == m, "closed-form preimage must invert the action"
    return n


def delta(m: Characteristic, n: Characteristic) -> Characteristic:
    """Componentwise (n - m) / 2; exact, so the halves must agree mod 2."""
    if m.g != n.g:
        raise DegreeMismatch(f"degrees differ: {m.g} vs {n.g}")
    diff = [b - a for a, b in zip(m.vector(), n.vector())]
    if any(x % 2 for x in diff):
        raise ParityMismatch("characteristics differ by an odd vector")
    half = [x // 2 for x in diff]
    return Characteristic.from_vector(half)


def sign_shift_exponent(m: Characteristic, n: Characteristic) -> int:
    """Exponent bit of the sign relating the theta constant at m + 2n to the one at m."""
    if m.g != n.g:
        raise DegreeMismatch(f"degrees differ: {m.g} vs {n.g}")
    return sum(p * q for p, q in zip(m.m_prime, n.m_double)) % 2


def shift(m: Characteristic, n: Characteristic) -> Characteristic:
    """m + 2n, exact."""
    if m.g != n.g:
        raise DegreeMismatch(f"degrees differ: {m.g} vs {n.g}")
    return Characteristic.from_vector(
        [a + 2 * b for a, b in zip(m.vector(), n.vector())])
