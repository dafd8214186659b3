"""Exception taxonomy shared by every dphls module."""


class DphlsError(Exception):
    """Base class for all errors raised by this package."""


# --- sequence / parameter errors -------------------------------------------

class EmptySequence(DphlsError):
    pass


class InvalidCharacter(DphlsError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class ProfileLengthMismatch(DphlsError):
    def __init__(self, position: int, width: int):
        self.position = position
        self.width = width
        super().__init__(
            f"profile column {position} has {width} entries, expected 5"
        )


class SpecValidationError(DphlsError):
    """Raised when a kernel spec fails validation; carries all violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


# --- engine errors ----------------------------------------------------------

class InvalidConfig(DphlsError):
    pass


class SequenceTooLong(DphlsError):
    def __init__(self, which: str, length: int, maximum: int):
        self.which = which
        self.length = length
        self.maximum = maximum
        super().__init__(f"{which} length {length} exceeds maximum {maximum}")


class TracebackOutOfBounds(DphlsError):
    def __init__(self, coord):
        self.coord = coord
        super().__init__(f"traceback walker left the valid region at {coord}")


class NonTerminating(DphlsError):
    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"traceback did not terminate within {steps} steps")


# --- oracle guards ----------------------------------------------------------

class OracleSizeExceeded(DphlsError):
    pass


class EnumerationSizeExceeded(DphlsError):
    pass


class TraceSizeExceeded(DphlsError):
    pass


# --- host-side I/O errors ---------------------------------------------------

class MalformedFasta(DphlsError):
    def __init__(self, line_no: int, reason: str = ""):
        self.line_no = line_no
        msg = f"malformed FASTA at line {line_no}"
        super().__init__(msg + (f": {reason}" if reason else ""))


class EmptyFile(DphlsError):
    pass


class MatrixShapeMismatch(DphlsError):
    pass


class UnknownResidue(DphlsError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"unknown residue label {letter!r}")


class MalformedSample(DphlsError):
    def __init__(self, line_no: int, reason: str = ""):
        self.line_no = line_no
        msg = f"malformed sample at line {line_no}"
        super().__init__(msg + (f": {reason}" if reason else ""))


class TilingStalled(DphlsError):
    pass
