"""
Semigroup determinants
======================

Build a semigroup from its multiplication table, form the Cayley matrix
with entries x_{st}, and take its determinant three ways.
"""

from ecomdet import build_table, cayley, contracted_cayley, det, det_bareiss, det_laplace, det_probe
from ecomdet.det import theta_from_contracted

# elements 0, y, z, u, t; 0 is the zero, t acts as an identity on y and z
labels = ["0", "y", "z", "u", "t"]
S = build_table([
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 0, 2, 2],
    [0, 1, 0, 3, 3],
    [0, 1, 2, 3, 4],
], labels)
print("zero element:", S.labels[S.zero])
print("idempotents:", [S.labels[e] for e in S.idempotents])

# the contracted table drops the zero row and column
M = contracted_cayley(S)
print(M.format(S.labels))
small = det_laplace(M)
print("contracted determinant:", small.format(S.labels))

# the full determinant is x_0 times the contracted one at y_s = x_s - x_0
full = det_laplace(cayley(S))
print("full determinant:      ", full.format(S.labels))
print("recovered from contracted:", theta_from_contracted(S, small) == full)

# Bareiss elimination gives the same polynomial
print("bareiss agrees:", det_bareiss(cayley(S)) == full)

# for big tables only the verdict matters: evaluate mod a 62-bit prime
print("probe:", det_probe(cayley(S), seed=1))
print("auto method on a 5x5 table returns a", type(det(cayley(S))).__name__)
