"""The eighth-root-valued character of the level-2 group attached to a characteristic.

Everything here is exact: characters are exponents mod 8 (value e(k/8) with
e(x) = exp(2 pi i x)), phases are integer multiples of 1/8, and no floating
point enters.  The additive encoding used throughout is

    (-1)^A  ->  exponent 4A mod 8,        e(-B/4)  ->  exponent -2B mod 8.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DegreeMismatch, InterpolationInconsistent, NotLevel2
from .characteristics import (Characteristic, delta, enumerate_even_mod2,
                              solve_preimage)
from .symplectic import (GeneratorWord, SymplecticMatrix, _check_indices,
                         is_level2)

_SYMBOLS = ("1", "ζ8", "i", "iζ8", "-1", "-ζ8", "-i", "-iζ8")


@dataclass(frozen=True)
class EighthRoot:
    """Element of the group of eighth roots of unity, stored as an exponent mod 8."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 8)

    def __mul__(self, other: "EighthRoot") -> "EighthRoot":
        return EighthRoot(self.k + other.k)

    def __pow__(self, n: int) -> "EighthRoot":
        return EighthRoot(self.k * n)

    def inverse(self) -> "EighthRoot":
        return EighthRoot(-self.k)

    @property
    def value(self) -> complex:
        """Numerical value exp(2 pi i k / 8)."""
        return cmath.exp(2j * cmath.pi * self.k / 8)

    @property
    def symbol(self) -> str:
        """Human-readable name, with z8 the primitive eighth root e(1/8)."""
        return _SYMBOLS[self.k]

    def __repr__(self):
        return f"EighthRoot(k={self.k})"


ONE = EighthRoot(0)


@dataclass(frozen=True, eq=False)
class PhaseValue:
    """Exact phase from the theta transformation formula, a multiple of 1/8.

    The full value is -raw_numerator/8.  Equality and hashing only see the
    class mod 1; the unreduced numerator stays available for diagnostics.
    """

    raw_numerator: int

    @property
    def eighths(self) -> int:
        """Residue t in {0..7} with the phase congruent to t/8 mod 1."""
        return (-self.raw_numerator) % 8

    def as_fraction(self) -> Fraction:
        return Fraction(self.eighths, 8)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseValue):
            return NotImplemented
        return self.eighths == other.eighths

    def __hash__(self):
        return hash(self.eighths)

    def __str__(self):
        return f"{self.eighths}/8"

    def __repr__(self):
        return f"PhaseValue(raw_numerator={self.raw_numerator})"


def _halves(m: Characteristic):
    mp = np.array([int(x) for x in m.m_prime], dtype=object)
    mpp = np.array([int(x) for x in m.m_double], dtype=object)
    return mp, mpp


def _check_degree(m: Characteristic, mat: SymplecticMatrix):
    if m.g != mat.g:
        raise DegreeMismatch(f"characteristic degree {m.g} != matrix degree {mat.g}")


def phase_full(m: Characteristic, mat: SymplecticMatrix) -> PhaseValue:
    """Transformation phase for an arbitrary symplectic matrix.

    -1/8 ( m'.(b^T d).m' + m''.(a^T c).m'' - 2 m'.(b^T c).m''
           - 2 (a b^T)_0 . (d m' - c m'') ).
    """
    _check_degree(m, mat)
    mp, mpp = _halves(m)
    ab0 = mat.ab_diag()
    num = (mp @ (mat.b.T @ mat.d) @ mp
           + mpp @ (mat.a.T @ mat.c) @ mpp
           - 2 * (mp @ (mat.b.T @ mat.c) @ mpp)
           - 2 * (ab0 @ (mat.d @ mp - mat.c @ mpp)))
    return PhaseValue(raw_numerator=int(num))


def phase_level2(m: Characteristic, mat: SymplecticMatrix) -> PhaseValue:
    """Simplified phase valid on the level-2 group; agrees with phase_full mod 1 there."""
    _check_degree(m, mat)
    if not is_level2(mat):
        raise NotLevel2("phase_level2 needs M = I mod 2")
    mp, mpp = _halves(m)
    num = (mp @ (mat.b.T @ mat.d) @ mp
           + mpp @ (mat.a.T @ mat.c) @ mpp
           - 2 * (mat.ab_diag() @ (mat.d @ mp)))
    return PhaseValue(raw_numerator=int(num))


def delta_sign_bit(m: Characteristic, mat: SymplecticMatrix) -> int:
    """Bit s with (-1)^s the correction sign in the character formula.

    s = m' . delta'' mod 2 where delta = (n - m)/2 and n is the exact
    preimage of m under the affine action of mat.
    """
    n = solve_preimage(mat, m)
    d = delta(m, n)
    return sum(p * q for p, q in zip(m.m_prime, d.m_double)) % 2


def chi(m: Characteristic, mat: SymplecticMatrix) -> EighthRoot:
    """Character value e(phase) * (-1)^(m'.delta'') at a level-2 matrix.

    Defined for every integer characteristic, odd ones included; the formula
    is purely algebraic.
    """
    _check_degree(m, mat)
    if not is_level2(mat):
        raise NotLevel2("character defined on the level-2 group only")
    t = phase_level2(m, mat)
    return EighthRoot(t.eighths + 4 * delta_sign_bit(m, mat))


def chi_generator(m: Characteristic, kind: str, i: int, j: int) -> EighthRoot:
    """Closed-form character value at a single generator.

    A(i,j): (-1)^(m'_i m''_j)   (the same form covers i == j),
    B(i,j), i<j: (-1)^(m'_i m'_j),    B(i,i): (-1)^(m'_i) e(-(m'_i)^2 / 4),
    C(i,i): e(-(m''_i)^2 / 4),        C(i,j), i<j: (-1)^(m''_i m''_j).
    """
    _check_indices(kind, i, j, m.g)
    mp, mpp = m.m_prime, m.m_double
    i0, j0 = i - 1, j - 1
    if kind == "A":
        return EighthRoot(4 * (mp[i0] * mpp[j0] % 2))
    if kind == "B":
        if i == j:
            return EighthRoot(4 * (mp[i0] % 2) - 2 * mp[i0] ** 2)
        return EighthRoot(4 * (mp[i0] * mp[j0] % 2))
    if i == j:
        return EighthRoot(-2 * mpp[i0] ** 2)
    return EighthRoot(4 * (mpp[i0] * mpp[j0] % 2))


def chi_word(m: Characteristic, w: GeneratorWord) -> EighthRoot:
    """Product of generator values along a word; equals chi of the word's matrix."""
    if m.g != w.g:
        raise DegreeMismatch(f"characteristic degree {m.g} != word degree {w.g}")
    out = ONE
    for kind, i, j, e in w.letters:
        out = out * chi_generator(m, kind, i, j) ** e
    return out


# ---------------------------------------------------------------------------
# Exponent tables: evaluation and recovery by character interpolation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianExponents:
    """Generator multiplicities mod the commutator subgroup, reduced to the
    moduli the character can see: p and off-diagonal q, r mod 2, diagonal
    q, r mod 4."""

    g: int
    p: tuple          # g x g rows, mod 2
    q_diag: tuple     # length g, mod 4
    q_off: tuple      # g x g rows, strict upper part meaningful, mod 2
    r_diag: tuple     # length g, mod 4
    r_off: tuple      # g x g rows, strict upper part meaningful, mod 2

    @classmethod
    def make(cls, g, p, q_diag, q_off, r_diag, r_off) -> "AbelianExponents":
        def rows(mat, modulus, strict_upper):
            out = []
            for i in range(g):
                row = []
                for j in range(g):
                    keep = j > i if strict_upper else True
                    row.append(int(mat[i][j]) % modulus if keep else 0)
                out.append(tuple(row))
            return tuple(out)

        return cls(g=g,
                   p=rows(p, 2, strict_upper=False),
                   q_diag=tuple(int(x) % 4 for x in q_diag),
                   q_off=rows(q_off, 2, strict_upper=True),
                   r_diag=tuple(int(x) % 4 for x in r_diag),
                   r_off=rows(r_off, 2, strict_upper=True))

    @classmethod
    def zero(cls, g: int) -> "AbelianExponents":
        z = [[0] * g for _ in range(g)]
        return cls.make(g, z, [0] * g, z, [0] * g, z)


def chi_from_exponents(m: Characteristic, exps: AbelianExponents) -> EighthRoot:
    """Evaluate the character from an exponent table: (-1)^A e(-B/4) with

    A = sum p_ij m'_i m''_j + sum_{i<=j} q_ij m'_i m'_j + sum_{i<j} r_ij m''_i m''_j,
    B = sum q_ii (m'_i)^2 + sum r_ii (m''_i)^2.
    """
    if m.g != exps.g:
        raise DegreeMismatch(f"characteristic degree {m.g} != table degree {exps.g}")
    g = m.g
    mp, mpp = m.m_prime, m.m_double
    a = sum(exps.p[i][j] * mp[i] * mpp[j] for i in range(g) for j in range(g))
    a += sum(exps.q_diag[i] * mp[i] * mp[i] for i in range(g))
    a += sum(exps.q_off[i][j] * mp[i] * mp[j]
             for i in range(g) for j in range(i + 1, g))
    a += sum(exps.r_off[i][j] * mpp[i] * mpp[j]
             for i in range(g) for j in range(i + 1, g))
    b = sum(exps.q_diag[i] * mp[i] ** 2 for i in range(g))
    b += sum(exps.r_diag[i] * mpp[i] ** 2 for i in range(g))
    return EighthRoot(4 * a - 2 * b)


def _basis_char(g, prime_ones=(), double_ones=()):
    mp = tuple(1 if i in prime_ones else 0 for i in range(g))
    mpp = tuple(1 if i in double_ones else 0 for i in range(g))
    return Characteristic(g=g, m_prime=mp, m_double=mpp)


def extract_abelian_exponents(mat: SymplecticMatrix) -> AbelianExponents:
    """Recover the exponent table of a level-2 matrix by character interpolation.

    Probes chi at unit and two-unit characteristics and inverts the closed
    form.  Any residual that is not divisible by the expected power of two
    would falsify the closed form, so it aborts loudly instead of guessing.
    """
    if not is_level2(mat):
        raise NotLevel2("exponent extraction needs M = I mod 2")
    g = mat.g

    def probe(mp_ones, mpp_ones):
        return chi(_basis_char(g, mp_ones, mpp_ones), mat).k

    def quarter(residual, what):
        if residual % 4 != 0:
            raise InterpolationInconsistent(
                f"probe residual {residual} for {what} is not a multiple of 4")
        return (residual // 4) % 2

    q_diag = []
    for i in range(g):
        k = probe((i,), ())
        if k % 2 != 0:
            raise InterpolationInconsistent(f"odd exponent {k} at diagonal q probe {i}")
        q_diag.append((k // 2) % 4)
    r_diag = []
    for i in range(g):
        k = probe((), (i,))
        if k % 2 != 0:
            raise InterpolationInconsistent(f"odd exponent {k} at diagonal r probe {i}")
        r_diag.append((-(k // 2)) % 4)

    p = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(g):
            k = probe((i,), (j,))
            p[i][j] = quarter((k - 2 * q_diag[i] + 2 * r_diag[j]) % 8, f"p[{i}][{j}]")
    q_off = [[0] * g for _ in range(g)]
    r_off = [[0] * g for _ in range(g)]
    for i in range(g):
        for j in range(i + 1, g):
            k = probe((i, j), ())
            q_off[i][j] = quarter((k - 2 * q_diag[i] - 2 * q_diag[j]) % 8,
                                  f"q[{i}][{j}]")
            k = probe((), (i, j))
            r_off[i][j] = quarter((k + 2 * r_diag[i] + 2 * r_diag[j]) % 8,
                                  f"r[{i}][{j}]")

    out = AbelianExponents.make(g, p, q_diag, q_off, r_diag, r_off)
    # Postcondition: the table reproduces every probe value.
    for mp_ones, mpp_ones in _probe_points(g):
        m = _basis_char(g, mp_ones, mpp_ones)
        assert chi_from_exponents(m, out).k == chi(m, mat).k
    return out


def _probe_points(g):
    for i in range(g):
        yield (i,), ()
        yield (), (i,)
    for i in range(g):
        for j in range(g):
            yield (i,), (j,)
    for i in range(g):
        for j in range(i + 1, g):
            yield (i, j), ()
            yield (), (i, j)


def word_exponents(w: GeneratorWord) -> AbelianExponents:
    """Letter-count sums of a word, reduced to the stored moduli."""
    g = w.g
    p = [[0] * g for _ in range(g)]
    q = [[0] * g for _ in range(g)]
    r = [[0] * g for _ in range(g)]
    for kind, i, j, e in w.letters:
        {"A": p, "B": q, "C": r}[kind][i - 1][j - 1] += e
    return AbelianExponents.make(g, p, [q[i][i] for i in range(g)], q,
                                 [r[i][i] for i in range(g)], r)


# ---------------------------------------------------------------------------
# Product character and the constancy criterion
# ---------------------------------------------------------------------------

def igusa_product_character(m: Characteristic, n: Characteristic,
                            mat: SymplecticMatrix) -> EighthRoot:
    """Character of the product of the theta constants at m and n: chi_m chi_n."""
    return chi(m, mat) * chi(n, mat)


def chi_even_values(mat: SymplecticMatrix) -> dict:
    """Character exponents over all even mod-2 representatives."""
    return {m: chi(m, mat).k for m in enumerate_even_mod2(mat.g)}


def is_chi_constant_over_even(mat: SymplecticMatrix) -> bool:
    """True when chi takes a single value over the even mod-2 classes.

    The character only depends on the characteristic mod 2, so the finite
    sweep decides constancy over all even integer characteristics.  Note the
    constant is necessarily 1 (the zero characteristic gives 1), and that
    constancy holds on -M whenever it holds on M: this predicate detects
    membership of M up to sign in the mod-4, diagonal-mod-8 subgroup, see
    is_igusa48_up_to_sign.
    """
    if not is_level2(mat):
        raise NotLevel2("constancy test defined on the level-2 group only")
    values = set(chi_even_values(mat).values())
    return len(values) == 1
