"""
Idempotent stabilisers and the order <<
========================================

For each element s, the idempotents fixing s on the right (left) have a
least element s^{+r} (s^{+l}).  Everything structural is read off these
two maps.
"""

from ecomdet import appendix_table, build_profile
from ecomdet.structure import cycle_notation

S = appendix_table("S6")
p = build_profile(S)
L = S.labels
for s in S.elements:
    print(f"{L[s]:>2}: +r = {L[p.plusR[s]]}, +l = {L[p.plusL[s]]}")

# classes of equal +r (these index the rows of the block factorisation)
for block in p.tilde_classes["r"]:
    print("same +r:", sorted(L[s] for s in block))

# s << t  iff  s = s^{+l} t s^{+r}
below = {L[t]: [L[s] for s in p.ll_below(t)] for t in S.elements}
print("down-sets of <<:", below)

# slices of elements whose + value sits strictly below an idempotent
v = S.index("v")
print("I^r_v =", sorted(L[s] for s in p.i_slice(v, "right")))
print("I^l_v =", sorted(L[s] for s in p.i_slice(v, "left")))

# elements whose two + values differ, and a permutation matching them up
found = p.sigma_search()
sp, sigma = found
print("S' =", [L[s] for s in sp], "sigma =", cycle_notation(sigma))
