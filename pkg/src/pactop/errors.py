"""Exception taxonomy for the engine.

Every exception carries a ``witness`` tuple pinpointing the offending
element, pair or triple, so callers can report exactly what broke.
"""

from __future__ import annotations


class PactopError(Exception):
    """Base class; ``witness`` holds the offending indices, if any."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class NotAssociative(PactopError):
    """Multiplication table fails associativity at the witness triple."""


class NoIdentity(PactopError):
    """Multiplication table has no two-sided identity element."""


class NoInverse(PactopError):
    """Witness element has no inverse in the multiplication table."""


class InvalidOrder(PactopError):
    """Requested group order is not a positive integer."""


class InvalidSubset(PactopError):
    """A set argument contains points outside the carrier."""


class NotAnAction(PactopError):
    """A claimed total action breaks an action or continuity axiom."""


class NotASubgroup(PactopError):
    """Element set is not closed under the group operations."""


class AxiomViolation(PactopError):
    """A construction needed a valid partial action and did not get one."""


class InvalidOpenSet(PactopError):
    """A transform was asked to localize on the empty group part."""


class NotOpen(PactopError):
    """The open-set fast path received a non-open argument set."""


class ParseError(PactopError):
    """Input document is not syntactically valid JSON."""


class SchemaError(PactopError):
    """Input document is valid JSON but violates the action schema.

    ``witness`` holds a JSON-pointer-ish path such as ``("/maps/1/v",)``.
    """
