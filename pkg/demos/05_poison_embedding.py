"""Embedding the poison group of F_2 into Aut(F_3).

poison(G) is the HNN extension <G x G', t | t (g, g') t^-1 = (g, 1)>. For
G = F_2 we send the first copy to maps x3 -> x3 * a_i^-1 (x3 * a_i when
words act right to left), and the primed copy and t to conjugations, with
a1 = [x1,x2], a2 = [x1,x2^-1], a3 = x3.
"""

from foxforge.autom import LEFT_TO_RIGHT, RIGHT_TO_LEFT, poison_assignment, verify_homomorphism
from foxforge.presentation import free, poison
from foxforge.words import Alphabet

X = Alphabet(["x1", "x2", "x3"])
a1, a2, a3 = X.word("[x1,x2]"), X.word("[x1,x2^-1]"), X.word("x3")

P = poison(free(2))
print(P)
for r in P.relators:
    print("  ", r)

for order in (LEFT_TO_RIGHT, RIGHT_TO_LEFT):
    assign, inv = poison_assignment(a1, a2, a3, order=order)
    print(f"\nwords acting {order}:")
    for g in P.alphabet.names:
        print(f"  {g:>3} -> {assign[g].to_text()}")
    print(" ", verify_homomorphism(P, assign, inv, order=order).summary())

# Swapping the roles of the two copies breaks the relators involving t.
assign, inv = poison_assignment(a1, a2, a3)
for g in ("x1", "x2"):
    assign[g], assign[g + "'"] = assign[g + "'"], assign[g]
    inv[g], inv[g + "'"] = inv[g + "'"], inv[g]
print("\nroles swapped:", verify_homomorphism(P, assign, inv).summary())
