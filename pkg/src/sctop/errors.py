"""Exception types shared across the package."""


class SctopError(Exception):
    """Base class for all package errors."""


class PosetAxiomError(SctopError):
    """A relation failed a partial-order axiom.

    Carries the violated axiom name and a witness pair of indices.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"not a partial order: {axiom} fails at {witness}")


class TopologyError(SctopError):
    """An open-set family is not a topology (missing sets or not closed)."""


class T0Violation(SctopError):
    """Two points cannot be separated by any open set."""

    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"points {a} and {b} are topologically indistinguishable")


class CapExceeded(SctopError):
    """An enumeration was requested beyond the configured size cap."""

    def __init__(self, size, cap, what="enumeration"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} over {size} elements exceeds cap {cap}")


class SpaceMismatch(SctopError):
    """Operands were built over different spaces/carriers."""


class NotSIPlusContinuous(SctopError):
    """The map is not both continuous and SI-continuous."""


class NotStronglyComplete(SctopError):
    """The space has an irreducible subset without a supremum."""


class UnsupportedDescriptor(SctopError):
    """The irreducible-set descriptor is not admissible for this catalog entry."""


class UnsupportedForm(SctopError):
    """The open/closed form is not admissible for this catalog entry."""


class UnsupportedCompletion(SctopError):
    """This catalog entry does not ship a completion builder."""


class ParseError(SctopError):
    """Syntax error in a DSL document, with line/column positions."""

    def __init__(self, line, col, expected, found):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        super().__init__(f"{line}:{col}: expected {expected}, found {found}")


class SemanticError(SctopError):
    """Well-formed DSL document with an invalid meaning (named witness)."""

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


class SchemaError(SctopError):
    """Invalid JSON interchange document; path is a JSON pointer."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")
