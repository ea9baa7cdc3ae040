"""Exception hierarchy.

``InputError`` subclasses reject a user-supplied semigroup or file.
``TheoryViolation`` subclasses signal that a proved identity failed on an
input inside the theory's scope, i.e. a bug or an input the theory does not
cover; the CLI maps them to exit code 2.
"""


class EcomError(Exception):
    pass


class InputError(EcomError):
    pass


class OutOfRange(InputError):
    pass


class NotAssociative(InputError):
    def __init__(self, triple, msg=None):
        self.triple = triple
        a, b, c = triple
        super().__init__(msg or f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")


class CorpusSyntaxError(InputError):
    pass


class NotAPoset(InputError):
    pass


class NotReflexive(NotAPoset):
    pass


class NotAntisymmetric(NotAPoset):
    pass


class NotTransitive(NotAPoset):
    pass


class NoZeroElement(InputError):
    pass


class NotSquare(InputError):
    pass


class NotEcom(InputError):
    pass


class EmptyPhi(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class NotCentral(InputError):
    pass


class TheoryViolation(EcomError, AssertionError):
    pass


class MeetOutsidePhi(TheoryViolation):
    pass


class NonTermination(TheoryViolation):
    pass


class StarMismatch(TheoryViolation):
    pass


class BlockNotSquare(TheoryViolation):
    pass


class OffBlockNonzero(TheoryViolation):
    pass
