"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class GroupSpecError(ValueError):
    """A group spec string or parameter set is malformed or out of range."""


class ClosureSizeError(RuntimeError):
    """Generator closure grew past the configured element cap."""


class PreconditionError(RuntimeError):
    """The constructive Hamiltonian algorithm cannot start on this group.

    ``orders`` lists every element order d with a single cyclic class.
    """

    def __init__(self, message, orders=()):
        super().__init__(message)
        self.orders = tuple(orders)


class TheoremViolation(RuntimeError):
    """A junction vertex that should exist by the descent argument was not found."""
