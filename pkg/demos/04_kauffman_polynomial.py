"""Assembling the Kauffman polynomial and checking its defining laws.

The generating series L(y, z) = z^(1-r) * sum_n entry_n * z^n of a
coefficient table satisfies the four-term skein relation, scales by
y^±1 under kinks, and is multiplicative under connected sum.  The
writhe normalization F = y^(-w) L is an invariant of oriented links.
An independent whole-polynomial evaluator recomputes L from scratch.
"""

from kauffpoly import (
    check_L_skein,
    check_product_laws,
    connected_sum,
    kauffman_F,
    kauffman_L,
    oracle_L,
    parse_pd,
    uniqueness_check,
)

hopf = parse_pd("X(1,4,2,3) X(3,2,4,1)")
trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
figure8 = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")

print("Regular-isotopy polynomials:")
for name, d in [("hopf", hopf), ("trefoil", trefoil), ("figure8", figure8)]:
    print(f"  L({name}) = {kauffman_L(d)}")

print()
print("Normalized invariants (orientation all +):")
for name, d in [("trefoil", trefoil), ("figure8", figure8)]:
    f = kauffman_F(d, (1,) * d.r)
    print(f"  F({name}) = {f}")
print("  figure-eight is amphichiral:",
      kauffman_F(figure8, (1,)) == kauffman_F(figure8, (1,)).subst_y_inverse())
print("  trefoil is chiral:",
      kauffman_F(trefoil, (1,)) != kauffman_F(trefoil, (1,)).subst_y_inverse())

print()
print("Four-term skein relation at every trefoil crossing:",
      all(check_L_skein(trefoil, p) for p in range(trefoil.c)))

print("Product laws for trefoil # hopf over every pair of cut edges:",
      check_product_laws(trefoil, hopf))
granny = connected_sum(trefoil, trefoil)
print("L(trefoil # trefoil) = L(trefoil)^2:",
      kauffman_L(granny) == kauffman_L(trefoil) ** 2)

print()
print("Independent evaluator agreement:")
for name, d in [("hopf", hopf), ("trefoil", trefoil), ("granny", granny)]:
    print(f"  {name}: pipelines agree = {uniqueness_check(d)}")
print(f"  (oracle value for the trefoil: {oracle_L(trefoil)})")
