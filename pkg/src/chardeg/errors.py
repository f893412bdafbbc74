"""Exception taxonomy shared by all modules.

Every precondition failure raises one of these instead of returning a
sentinel, so callers can tell a mathematical "no" (a check that fails and
is reported) from misuse of an operation (an error that propagates).
"""
from __future__ import annotations


class ChardegError(Exception):
    """Base class for all library errors."""


class NotAGroup(ChardegError):
    """A multiplication table violates one of the group axioms.

    `axiom` names the failed axiom and `witness` is a tuple of element
    indices demonstrating the failure (e.g. a non-associative triple).
    """

    def __init__(self, message: str, axiom: str, witness: tuple[int, ...] = ()):
        super().__init__(f"{message} (axiom={axiom}, witness={witness})")
        self.axiom = axiom
        self.witness = witness


class NotNormal(ChardegError):
    """A subgroup that must be normal is not."""


class NotAnAction(ChardegError):
    """The maps supplied to a semidirect product are not a homomorphism
    into the automorphism group."""


class NotPrime(ChardegError):
    """An argument required to be prime is not."""


class NotPrimePower(ChardegError):
    """An argument required to be a prime power is not."""


class OrderBoundExceeded(ChardegError):
    """A group is larger than the configured order bound for an
    enumeration-heavy operation."""


class UnsupportedOrder(ChardegError):
    """The small-group catalog does not cover the requested order."""


class UnsupportedE(ChardegError):
    """Complete classification is only implemented for e <= 3."""


class GroupMismatch(ChardegError):
    """Two objects that must live over the same group do not."""


class InternalInconsistency(ChardegError):
    """An internal cross-check failed; indicates a bug, never a bad input."""


class PreconditionViolated(ChardegError):
    """A documented operation precondition does not hold for the input."""
