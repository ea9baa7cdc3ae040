import pytest

from ecomdet.corpus import load_appendix
from ecomdet.generate import standard_corpus
from ecomdet.poly import Poly
from ecomdet.semigroup import MulTable


@pytest.fixture(scope="session")
def appendix() -> dict[str, MulTable]:
    return {r.id: r.table for r in load_appendix()}


@pytest.fixture(scope="session")
def corpus():
    return standard_corpus()


def xvars(S: MulTable, names: str):
    """Poly variables x_<name> of S for each space-separated name."""
    return [Poly.var(S.n, S.index(lab)) for lab in names.split()]


# small fixed semigroups
TRIVIAL = MulTable([[0]], ["e"])
CHAIN2 = MulTable([[0, 0], [0, 1]], ["e", "f"])  # e < f
C2 = MulTable([[0, 1], [1, 0]], ["a", "b"])  # cyclic group, identity a
LEFT_ZERO = MulTable([[0, 0], [1, 1]], ["a", "b"])
NULL2 = MulTable([[0, 0], [0, 0]], ["0", "a"])
