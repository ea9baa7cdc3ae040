"""
Block factorisation
===================

When the star product kills every pair whose + values do not match, the
star Cayley table splits into square blocks, one per idempotent, and the
determinant is non-zero exactly when every block is.
"""

from ecomdet import appendix_table, build_table, factor_central_idempotent, factor_main_theorem, theta_exact

S = appendix_table("S9")
rep = factor_main_theorem(S)
print(rep.summary())
print("sign of the block rearrangement:", rep.sign)
print("signed product equals the contracted determinant:", rep.product_y == rep.direct)

# keeping the zero adds a 1x1 block and gives the full determinant
full = factor_main_theorem(S, contracted=False)
print("full mode matches theta:", full.product_y == theta_exact(S))

# with central idempotents there is an older product formula over local pieces
band = build_table([[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]], ["0", "a", "b", "1"])
print("band, product formula:", factor_central_idempotent(band).format(band.labels))
print("band, direct:         ", theta_exact(band).format(band.labels))
