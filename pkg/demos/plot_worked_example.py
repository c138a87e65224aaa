"""
Truncating (x1^2, x2^2)
=======================

The smallest ideal of Borel type whose regularity is bigger than its degree.
"""

from borelreg import MonomialIdeal, stats, truncate, is_stable, compute_regularity

I = MonomialIdeal(2, [(2, 0), (0, 2)])
print(I, stats(I))

# degree 2 truncation is I itself, and x1*x2 is missing
for e in (2, 3):
    T = truncate(I, e)
    print(f"I>={e} =", T, "stable:", is_stable(T))

# the Betti oracle confirms reg = q = 3
r = compute_regularity(I)
print("reg =", r.value, "via", r.method)
print(r.table.grid())
