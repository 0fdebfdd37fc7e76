"""A short tour of Fox derivatives on a free group of rank two."""

from foxforge import Alphabet, fox_derivative, fox_gradient, specialize
from foxforge.fox import GroupRingElement, augment, fundamental_check

X = Alphabet(["x1", "x2"])

# Commutators follow [a,b] = a^-1 b^-1 a b.
c = X.word("[x1,x2]")
print("commutator:", c)

# The derivative peels off letters from the left.
for g in X.names:
    print(f"d/d{g} [x1,x2] =", fox_derivative(c, g))

# Fundamental formula: sum_j (dv/dx_j)(x_j - 1) = v - augment(v).
print("fundamental formula holds:", fundamental_check(c))

# Sending both generators to t lands in Z[t, t^-1]; the augmentation of a
# derivative is the exponent sum of w in that generator.
w = X.word("x1^2 x2 x1^-1 x2^-2")
for g, d in zip(X.names, fox_gradient(w)):
    print(f"d/d{g} w -> {specialize(d)}   (augmentation {augment(d)})")

# Weighted specialisation: x1 -> t^2, x2 -> t.
print("weighted:", specialize(fox_derivative(w, "x1"), {"x1": 2, "x2": 1}))

# Group-ring elements can be added and multiplied directly.
u = GroupRingElement.of(X.word("x1")) - GroupRingElement.of(X.word("x2"))
print("(x1 - x2)^2 =", u * u)
