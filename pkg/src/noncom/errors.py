"""Domain exceptions shared across the package."""


class GroupError(Exception):
    """Base class for every error this package raises deliberately."""


# -- multiplication-table validation ----------------------------------------

class NotLatinSquare(GroupError):
    """A row or column of the table repeats an entry."""


class NoIdentity(GroupError):
    """No element acts as a two-sided identity."""


class NotAssociative(GroupError):
    """Associativity fails; the message names the first bad triple."""


class NoInverse(GroupError):
    """Some element has no two-sided inverse."""


# -- construction ------------------------------------------------------------

class OrderCapExceeded(GroupError):
    """A construction would exceed the configured group-order cap."""


class NotPrime(GroupError):
    pass


class PrimesEqual(GroupError):
    pass


class SearchSpaceExceeded(GroupError):
    """The polynomial search space is larger than the cap allows."""


# -- structural preconditions ------------------------------------------------

class NotASubgroup(GroupError):
    pass


class PrimeDoesNotDivideOrder(GroupError):
    pass


class NotNormal(GroupError):
    pass


class TrivialSubgroup(GroupError):
    pass


class NotMinimalNonAbelian(GroupError):
    pass


class StructureViolation(GroupError):
    """A structural guarantee failed on input that satisfied its hypotheses.

    This always indicates an implementation bug, never a property of the
    input group, so it is raised loudly instead of being folded into a
    boolean report.
    """


class DecompositionMismatch(GroupError):
    """A decomposition object does not belong to the group it was used with."""


class IsPGroup(GroupError):
    """The operation needs a two-prime group but got a prime-power one."""


# -- graph / omega -----------------------------------------------------------

class AbelianGroup(GroupError):
    """The non-commuting graph of an abelian group would be empty."""


class EmptyGraph(GroupError):
    pass


class NotACGroup(GroupError):
    """Some non-central element has a non-abelian centralizer."""


class NoCover(GroupError):
    """The distinct proper centralizers do not cover the group."""


# -- input parsing -----------------------------------------------------------

class ParseError(GroupError):
    pass
