"""
Congruence membership and exponent recovery
===========================================

Three nested phenomena around the level-2 group:

1. membership chains: elements of the mod-4 / diagonal-mod-8 subgroup are
   also level-4 and level-2;
2. recovery of generator multiplicities (mod the commutator subgroup) purely
   from character values, without ever decomposing the matrix;
3. the boundary of what the character can see: it is blind to the global
   sign, so constancy over even classes detects membership only up to sign.
"""

from siegelchi import (chi_even_values, chi_from_exponents, commutator,
                       enumerate_even_mod2, extract_abelian_exponents,
                       is_chi_constant_over_even, is_igusa48,
                       is_igusa48_up_to_sign, is_level2, is_level4,
                       random_word, word, word_exponents, word_to_matrix)

# 1. a commutator of random level-2 words lands in the small subgroup
g = 2
w1 = random_word(g, 4, seed=11)
w2 = random_word(g, 4, seed=12)
k = commutator(word_to_matrix(w1), word_to_matrix(w2))
print("commutator of two random level-2 words:")
print(f"  level2={is_level2(k)}  level4={is_level4(k)}  subgroup={is_igusa48(k)}")

# 2. character interpolation recovers the word's letter counts
w = random_word(g, 6, seed=99)
mat = word_to_matrix(w)
recovered = extract_abelian_exponents(mat)
counted = word_exponents(w)
print()
print(f"word letters: {w.letters}")
print(f"recovered q_diag (mod 4): {recovered.q_diag}, from letters: {counted.q_diag}")
print(f"recovered r_diag (mod 4): {recovered.r_diag}, from letters: {counted.r_diag}")
assert recovered == counted
checks = sum(chi_from_exponents(m, recovered).k for m in enumerate_even_mod2(g))
print(f"table reproduces the character at all probes (checksum {checks})")

# 3. the sign boundary: -I has constant character over even classes but is
# not congruent to I mod 4
minus_one = word_to_matrix(word(1, [("A", 1, 1, 1)]))
print()
print(f"-I: even-class character values {sorted(set(chi_even_values(minus_one).values()))}")
print(f"    constant over even classes: {is_chi_constant_over_even(minus_one)}")
print(f"    strict subgroup membership: {is_igusa48(minus_one)}")
print(f"    membership up to sign:      {is_igusa48_up_to_sign(minus_one)}")
