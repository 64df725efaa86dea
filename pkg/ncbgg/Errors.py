from typing import Optional



class NcbggError(Exception):
    """
    Base class of all errors raised by the workbench. The attribute
    exit_code is what the command line returns for this kind of failure.
    """
    exit_code: int = 1


class ParseError(NcbggError):
    exit_code = 2


class PreconditionError(NcbggError):
    exit_code = 3


class InvalidFieldError(PreconditionError):
    pass


class DimensionMismatchError(PreconditionError):
    pass


class PresentationMismatchError(PreconditionError):
    pass


class UnsupportedAlgebraError(PreconditionError):
    pass


class NotFiniteError(PreconditionError):
    pass


class UnsupportedInputError(PreconditionError):
    pass


class NoAutomorphismError(PreconditionError):
    pass


class NotAPointError(PreconditionError):
    def __init__(self, message: str, degree: int) -> None:
        super().__init__(message)
        self.degree = degree


class WindowTooSmallError(NcbggError):
    exit_code = 4

    def __init__(self, message: str, needed: tuple[int, int], truncation: Optional[int]=None) -> None:
        if not truncation is None:
            message = f'{message} (increase N to >= {truncation})'
        super().__init__(message)
        self.needed = needed
        self.truncation = truncation


class InconclusiveError(NcbggError):
    exit_code = 5
