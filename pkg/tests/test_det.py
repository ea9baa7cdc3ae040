import random

import pytest
import sympy

from ecomdet.det import (PRIME, PolyMatrix, cayley, contracted_cayley, det, det_bareiss, det_laplace, det_probe,
                         theta, theta_exact, theta_from_contracted, theta_tilde, theta_via_contracted)
from ecomdet.errors import NoZeroElement, NotSquare
from ecomdet.generate import random_corpus
from ecomdet.poly import Poly
from conftest import C2, CHAIN2, TRIVIAL, xvars


def sympy_det(M: PolyMatrix, labels):
    syms = sympy.symbols([f"x_{lab}" for lab in labels])

    def conv(p):
        return sum(c * sympy.prod([s**e for s, e in zip(syms, ex)]) for ex, c in p.items())

    return sympy.expand(sympy.Matrix([[conv(p) for p in row] for row in M.rows]).det(method="berkowitz")), syms


def poly_to_sympy(p: Poly, syms):
    return sympy.expand(sum(c * sympy.prod([s**e for s, e in zip(syms, ex)]) for ex, c in p.items()))


def test_chain_cayley_and_det():
    e, f = xvars(CHAIN2, "e f")
    M = cayley(CHAIN2)
    assert M.rows == [[e, e], [e, f]]
    assert det(M) == e * f - e * e


def test_cyclic_group():
    a, b = xvars(C2, "a b")
    assert det(cayley(C2)) == a * a - b * b


def test_trivial():
    M = cayley(TRIVIAL)
    assert M.rows == [[Poly.var(1, 0)]]
    assert theta(TRIVIAL) == Poly.var(1, 0)


def test_contracted_s1_matrix(appendix):
    S = appendix["S1"]
    M = contracted_cayley(S)
    assert M.row_ids == [1, 2, 3, 4]
    for i, s in enumerate(M.row_ids):
        for j, t in enumerate(M.col_ids):
            st = S.prod[s][t]
            assert M[i, j] == (Poly.zero(S.n) if st == S.zero else Poly.var(S.n, st))


def test_contracted_needs_zero():
    with pytest.raises(NoZeroElement):
        contracted_cayley(C2)


def test_not_square():
    M = PolyMatrix([[Poly.var(2, 0), Poly.var(2, 1)]], [0], [0, 1], 2)
    for fn in (det_laplace, det_bareiss, det_probe):
        with pytest.raises(NotSquare):
            fn(M)


def test_s5_sign(appendix):
    # the forced permutation y->v, z->w, u->t, t->u, w->z, v->y is odd
    S = appendix["S5"]
    y, z = xvars(S, "y z")
    assert theta_tilde(S) == -(y**3) * z**3


@pytest.mark.parametrize("name", ["S1", "S2", "S3", "S4", "S5", "S6", "S8", "S9"])
def test_contracted_against_sympy(appendix, name):
    S = appendix[name]
    M = contracted_cayley(S)
    ref, syms = sympy_det(M, S.labels)
    assert poly_to_sympy(det_laplace(M), syms) == ref


def test_full_against_sympy_small(appendix):
    S = appendix["S1"]
    M = cayley(S)
    ref, syms = sympy_det(M, S.labels)
    assert poly_to_sympy(det_laplace(M), syms) == ref


def test_contracted_identity(appendix):
    for name, S in appendix.items():
        if S.n <= 9:
            assert theta(S, "laplace") == theta_from_contracted(S, theta_tilde(S)), name
        assert theta_via_contracted(S) == theta_exact(S)


def test_laplace_equals_bareiss_random():
    for S in random_corpus(11, 60, 6):
        for M in [cayley(S)] + ([contracted_cayley(S)] if S.zero is not None and S.n > 1 else []):
            a = det_laplace(M)
            assert a == det_bareiss(M)
            assert det_probe(M).nonzero == (not a.is_zero())


def test_random_against_sympy():
    for S in random_corpus(5, 8, 5):
        M = cayley(S)
        ref, syms = sympy_det(M, S.labels)
        assert poly_to_sympy(det_laplace(M), syms) == ref


def test_probe_verdicts(appendix):
    v = det_probe(cayley(appendix["S9"]), seed=1)
    assert v.nonzero and str(v) == "NONZERO" and v.error_bound == 0.0
    z = det_probe(cayley(appendix["S3"]), seed=1)
    assert not z.nonzero and z.trials == 20 and z.prime == PRIME
    assert z.error_bound == (z.degree_bound / PRIME) ** 20
    assert str(z).startswith("ZERO(p_err <= ")
    assert det_probe(cayley(appendix["S3"]), seed=1) == z


def test_auto_method(appendix):
    assert isinstance(det(cayley(appendix["S1"])), Poly)
    big = cayley(appendix["S7"])
    assert not det(big).nonzero  # 16 x 16 goes to the probe
    assert theta_exact(appendix["S7"]).is_zero()


def test_prime_is_62_bit():
    assert sympy.isprime(PRIME) and PRIME < 2**62 and sympy.nextprime(PRIME) > 2**62
