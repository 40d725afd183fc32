"""Exact Laurent arithmetic and the closed forms behind trivial links.

Everything in this package is computed over Z[y, y^-1] (one variable)
and Z[y^±1, z^±1] (two variables) with Python ints, so every printed
value is exact.
"""

from kauffpoly import BivariatePoly, LaurentPoly, monotone_coeff, unlink_factor

y = LaurentPoly.monomial(1)
y_inv = LaurentPoly.monomial(-1)
loop = y + y_inv

print("The loop value y + y^-1 and its powers:")
for k in range(4):
    print(f"  (y + y^-1)^{k} = {loop**k}")

print()
print("Coefficient closed form for descending diagrams:")
print("  entry n of an r-component unlink is (-1)^n C(r-1,n) (y+y^-1)^(r-n-1)")
for r in (1, 2, 3):
    row = ", ".join(f"n={n}: {monotone_coeff(0, n, r)}" for n in range(r))
    print(f"  r={r}:  {row}")

print()
d = unlink_factor()
print(f"The unlink factor d = {d}")
print("Resumming the closed form reproduces its powers:")
for r in range(1, 5):
    series = BivariatePoly.zero()
    for n in range(r):
        series = series + BivariatePoly.from_laurent(
            monotone_coeff(0, n, r), z_exp=n + 1 - r
        )
    print(f"  r={r}:  sum_n entry_n * z^(n+1-r) = {series}")
    assert series == d ** (r - 1)
print("  ... each equals d^(r-1), as the disjoint-union law demands.")
