"""Fox calculus, Alexander polynomials, free-group automorphisms and
Scheuneman invariants of class-2 nilpotent Lie algebras."""

from .alexander import Verdict, alexander_matrix, alexander_polynomial, distinguish, minors_gcd
from .autom import Endomorphism, compose, verify_homomorphism
from .fox import GroupRingElement, fox_derivative, fox_gradient, specialize
from .poly import LaurentPoly, MultiPoly, hessian, laurent_gcd, normalize
from .presentation import Presentation, builtin, parse
from .scheuneman import NilLie2, build_L_alpha, scheuneman_invariant
from .words import Alphabet, Word

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Word",
    "Presentation",
    "parse",
    "builtin",
    "GroupRingElement",
    "fox_derivative",
    "fox_gradient",
    "specialize",
    "LaurentPoly",
    "MultiPoly",
    "normalize",
    "laurent_gcd",
    "hessian",
    "alexander_matrix",
    "alexander_polynomial",
    "minors_gcd",
    "distinguish",
    "Verdict",
    "Endomorphism",
    "compose",
    "verify_homomorphism",
    "NilLie2",
    "build_L_alpha",
    "scheuneman_invariant",
]
