"""
The zeta transform and the star product
=======================================

Z(s) is the sum of everything below s in <<.  Transporting the semigroup
product along Z gives a new product on the same basis.
"""

from ecomdet import StarTable, appendix_table, build_profile, check_diamond, epsilon, sharp
from ecomdet.star import drop, format_vec, sharp_vec

S = appendix_table("S9")
p = build_profile(S)
T = StarTable(p)
L = S.labels


def show(v):
    return format_vec(drop(v, [S.zero]), L)


print("Z(w) =", show(T.Z.columns[S.index("w")]))
print("Z(q) =", show(T.Z.columns[S.index("q")]))

# star table on the non-zero basis (the zero element only ever multiplies to 0)
basis = T.contracted_basis
print("     " + " ".join(f"{L[b]:>4}" for b in basis))
for a in basis:
    print(f"{L[a]:>4} " + " ".join(f"{show(T.entry(a, b)) if T.entry(a, b) else '.':>4}" for b in basis))

# products of Z-images are Z-images of products
q, w = S.index("q"), S.index("w")
print("Z(q) * Z(w) =", show(T.mul(T.Z.columns[q], T.Z.columns[w])), " = Z(qw)")

# products across different idempotents vanish here
print("diamond holds:", check_diamond(T)[0])

# the stabilised idempotent of a pair, and its iteration
s, t = S.index("u"), S.index("t")
r = epsilon(p, s, t)
print("epsilon(u, t) =", L[r.eps], "after", r.steps, "steps")

# the guarded product is not associative in general
S8 = appendix_table("S8")
p8 = build_profile(S8)
u, t, w = (S8.index(x) for x in "utw")
print("u#t =", sharp(p8, u, t) or 0, "  u#(t#w) =",
      format_vec(sharp_vec(p8, {u: 1}, sharp(p8, t, w)), S8.labels))
