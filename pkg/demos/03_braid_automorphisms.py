"""Automorphisms of F_n: Artin's braids, basis conjugations and their relations."""

from foxforge.autom import (
    braid_membership,
    builtin_pair,
    commutes,
    compose,
    eps,
    image_of_word,
    pure_braid_generator,
    sigma,
    verify_homomorphism,
)
from foxforge.presentation import braid, mccool, pure_braid

# sigma_i swaps x_i and x_{i+1} up to conjugation and fixes x1 x2 ... xn.
s1 = sigma(1, 3)
print("sigma_1 on F_3:", s1.to_text())
print("Artin conditions:", braid_membership(s1).is_candidate)

# eps_ij conjugates x_i by x_j. It is an IA-automorphism but not a braid.
e = eps(2, 1, 3)
print("eps_21 on F_3:", e.to_text(), "| braid?", braid_membership(e).is_candidate,
      "|", braid_membership(e).reason)


def assignment(p, n):
    assign, inv = {}, {}
    for g in p.alphabet.names:
        kind, *idx = g.split("_")
        name = {"e": "eps", "a": "a"}.get(kind, "sigma")
        args = map(int, idx) if idx else [int(g[1:])]
        assign[g], inv[g] = builtin_pair(name, *args, n)
    return assign, inv


# Every relator of each presentation must map to the identity automorphism.
for p, n in ((mccool(3), 3), (mccool(4), 4), (braid(5), 5), (pure_braid(4), 4)):
    print(f"{p.name:>14}:", verify_homomorphism(p, *assignment(p, n)).summary())

# Words in the generators act letter by letter, first letter first. Read
# that way, a_13 is s2 s1^2 s2^-1.
B4 = braid(4)
assign, inv = assignment(B4, 4)
a13 = image_of_word(B4.word("s2 s1 s1 s2^-1"), assign, inv)
print("s2 s1^2 s2^-1 == a_13:", a13 == pure_braid_generator(1, 3, 4))

# The full twist in P_4 is central.
P4 = pure_braid(4)
assign, inv = assignment(P4, 4)
twist = image_of_word(P4.word("a_1_2 a_1_3 a_2_3 a_1_4 a_2_4 a_3_4"), assign, inv)
print("full twist central in P_4:", all(commutes(twist, assign[g]) for g in P4.alphabet.names))

# eps21 eps31 eps41 is conjugation by x1. It commutes with every eps_ij
# that fixes x1, and with none of eps12, eps13, eps14.
z = compose(compose(eps(2, 1, 4), eps(3, 1, 4)), eps(4, 1, 4))
for i in range(1, 5):
    row = ["  ." if i == j else ("yes" if commutes(z, eps(i, j, 4)) else " no") for j in range(1, 5)]
    print(f"  commutes with eps{i}j:", " ".join(row))
