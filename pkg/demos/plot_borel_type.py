"""
Three ways to say "Borel type"
==============================

Saturations, associated primes and the stable truncation agree on every
monomial ideal.  Here are a few where they all say yes and a few where they
all say no.
"""

from borelreg import MonomialIdeal, check_char_theorem, associated_primes, irreducible_decomposition

samples = {
    "(x1^2, x1*x2)": MonomialIdeal(2, [(2, 0), (1, 1)]),
    "(x2)": MonomialIdeal(2, [(0, 1)]),
    "(x1*x3, x2^2)": MonomialIdeal(3, [(1, 0, 1), (0, 2, 0)]),
    "(x1^2, x2^2, x1*x3^3, x2*x3^2)": MonomialIdeal(3, [(2, 0, 0), (0, 2, 0), (1, 0, 3), (0, 1, 2)]),
    "(x1^3, x1*x2^2, x2^3*x3)": MonomialIdeal(3, [(3, 0, 0), (1, 2, 0), (0, 3, 1)]),
}

for name, I in samples.items():
    r = check_char_theorem(I)
    print(f"{name:34s} borel={r.is_borel_type!s:5s} prefix={r.ass_all_prefix!s:5s} "
          f"stable@q={r.truncation_stable!s:5s} q={r.q_used}")
    print("   components:", " ∩ ".join(str(c) for c in irreducible_decomposition(I)))
    print("   Ass:", ", ".join(str(p) for p in associated_primes(I)))
