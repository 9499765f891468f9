"""Exception hierarchy shared by the whole package.

Every domain error carries a stable ``code`` string that the CLI emits in
structured diagnostics.  Plain Python exceptions (``ZeroDivisionError``,
``TypeError``) are used where the builtin meaning is exactly right.
"""

from __future__ import annotations


class CotoeplitzError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"


class ContextMismatch(CotoeplitzError):
    """Operands belong to different coalgebras."""

    code = "context-mismatch"


class WrongCoalgebra(CotoeplitzError):
    """A basis key of the wrong kind was used with a coalgebra."""

    code = "wrong-coalgebra"


class KeyOutOfRange(CotoeplitzError):
    """A basis key index violates the range of its coalgebra."""

    code = "key-out-of-range"


class StarUndefined(CotoeplitzError):
    """The coalgebra does not define a star operation."""

    code = "star-undefined"


class Unclassified(CotoeplitzError):
    """The coalgebra does not define holomorphic classes."""

    code = "unclassified"


class NoDegree(CotoeplitzError):
    """The coalgebra does not define a degree grading."""

    code = "no-degree"


class NotInSubcoalgebra(CotoeplitzError):
    """An element has support outside the projection subset."""

    code = "not-in-subcoalgebra"

    def __init__(self, message, keys=()):
        super().__init__(message)
        self.keys = tuple(keys)


class NotHermitian(CotoeplitzError):
    """A matrix expected to be hermitian is not."""

    code = "not-hermitian"


class NotDiagonal(CotoeplitzError):
    """Eigenvalues were requested for a matrix that is not diagonal."""

    code = "not-diagonal"


class UnknownSpec(CotoeplitzError):
    """A spec string does not name any known coalgebra, form, or weight."""

    code = "unknown-spec"


class InvalidParameter(CotoeplitzError):
    """A spec string carries an invalid or missing parameter."""

    code = "invalid-parameter"


class InvalidWeightDomain(CotoeplitzError):
    """A weight family is not defined on the coalgebra's index domain."""

    code = "invalid-weight-domain"


class FormMismatch(CotoeplitzError):
    """A form spec was bound to a coalgebra of the wrong kind."""

    code = "form-mismatch"


class ParseError(CotoeplitzError):
    """Syntax error in element or spec text, annotated with a byte offset."""

    code = "syntax-error"

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
