"""Exception taxonomy for the whole package.

Every failure mode that callers are expected to handle has its own class;
witness data rides on the exception instance so test suites and the CLI can
report exactly what broke.
"""


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class EmptyFamily(MatroidError):
    """A basis family must contain at least one subset."""


class UnequalCardinality(MatroidError):
    """All bases must have the same number of elements."""


class ExchangeFailure(MatroidError):
    """Basis exchange failed; carries the witness pair and element."""

    def __init__(self, b1: int, b2: int, i: int):
        self.b1, self.b2, self.i = b1, b2, i
        super().__init__(
            f"exchange fails for bases {b1:#x}, {b2:#x} at element {i}"
        )


class AxiomViolation(MatroidError):
    """A cryptomorphic axiom system failed validation."""

    def __init__(self, kind: str, witness, message: str = ""):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{kind} axiom violated ({message}): witness {witness!r}")


class InternalError(MatroidError):
    """A consistency check that can only fail on a package bug."""


class GroundSetTooLarge(MatroidError):
    """Operation not available above its ground-set cap."""


class CapExceeded(MatroidError):
    """An exhaustive loop was requested above the configured cap."""


class BoundsViolation(MatroidError):
    """Numeric argument outside its documented range."""


class EmptyGroundSet(MatroidError):
    """Deletion may not remove the entire ground set."""


class NotCircuitHyperplane(MatroidError):
    """Relaxation requires a circuit that is also a rank-d flat."""


class NotModularCut(MatroidError):
    """Flat family fails the modular-cut conditions; carries a witness."""

    def __init__(self, witness, message: str = ""):
        self.witness = witness
        super().__init__(f"not a modular cut ({message}): witness {witness!r}")


class NotAFlat(MatroidError):
    """Argument must be a flat of the matroid."""


class NotAnRPartition(MatroidError):
    """Hyperplane parts fail the partition property; carries a witness subset."""

    def __init__(self, witness: int, message: str = ""):
        self.witness = witness
        super().__init__(f"not a valid partition ({message}): witness {witness:#x}")


class LoopPresent(MatroidError):
    """Operation requires a loopless matroid."""


class NonzeroRemainder(MatroidError):
    """Exact polynomial division left a remainder (signals a bug)."""


class MixedCardinality(MatroidError):
    """Lattice points must share a common coordinate sum."""


class NotBalanced(MatroidError):
    """Weight fails the balancing condition; carries the witness flag."""

    def __init__(self, flag, residual, message: str = ""):
        self.flag = flag
        self.residual = residual
        super().__init__(
            f"balancing fails at flag {flag!r} ({message}): residual {residual!r}"
        )


class WrongDimension(MatroidError):
    """Weight has the wrong dimension for the requested operation."""


class FlatCountTooLarge(MatroidError):
    """Quadruple loop over flats refused above the cap."""


class NonPrimeModulus(MatroidError):
    """Finite fields here are GF(p) with p prime."""


class ParseError(MatroidError):
    """Malformed input text; carries line and column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")
