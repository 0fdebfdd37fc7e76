"""Cubic forms attached to class-2 nilpotent Lie algebras.

For a nilpotent algebra with x-basis x_1..x_n and central y-basis, the
alternating sum of all ordered products of the x_i in U(L) lands in the
centre. Its class up to scaling and linear change of variables is an
isomorphism invariant, and the Hessian gives a cheap way to compare classes.
"""

from foxforge.cli import SEC33_DISPLAYED
from foxforge.poly import MultiPoly, hessian
from foxforge.scheuneman import (
    CASE_ALPHAS,
    analyse,
    build_L_alpha,
    distinguish_algebras,
    distinguish_forms,
    heisenberg,
    scheuneman_invariant,
)

Y6 = tuple(f"y{i}" for i in range(1, 7))

# Warm-up: the Heisenberg algebra. x1 x2 - x2 x1 = y1.
H = heisenberg()
print("Heisenberg invariant:", scheuneman_invariant(H))

# Six x generators t1..t3, u1..u3 and six central y's. The three brackets
# [t_i, u_i] are chosen by alpha; everything else is fixed.
for case, alphas in CASE_ALPHAS.items():
    rep = analyse(build_L_alpha(*alphas))
    print(f"\ncase {case}: alpha = {alphas}")
    print("  central part:", rep.central)
    print("  Hessian     :", rep.hessian)
    print("  signature   :", rep.signature)

L1, L2 = (build_L_alpha(*CASE_ALPHAS[c]) for c in ("a1", "a2"))
print("\nalgebras a1 vs a2:", distinguish_algebras(L1, L2).value)

# The same comparison for the three hand-written normal forms.
forms = [MultiPoly.parse(f, Y6) for _, f, _, _ in SEC33_DISPLAYED]
for f in forms:
    print(f"\n{f}\n  Hessian: {hessian(f)}")
for i in range(3):
    for j in range(i + 1, 3):
        print(f"forms {i + 1} vs {j + 1}:", distinguish_forms(forms[i], forms[j])[0].value)
