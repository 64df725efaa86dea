from dataclasses import dataclass
from typing import Optional
from typing_extensions import Self
from strongtyping.strong_typing import match_typing
from ncbgg.Errors import ParseError, PreconditionError
from ncbgg.Window import Window

COMMANDS = ('dual', 'truncate', 'resolve', 'bgg', 'points', 'probe')
FORMATS = ('json', 'table')


def parse_window(text: Optional[str]) -> Optional[Window]:
    """
    Read "lo:hi" into a Window.
    """
    if text is None:
        return None
    try:
        lo, hi = (int(t) for t in text.split(':'))
    except ValueError:
        raise ParseError(f'A window is given as lo:hi, got "{text}"')
    return Window(name='window', lower_bound=lo, upper_bound=hi)


@dataclass
class RunConfig:
    command: str
    input: str = None
    dual_input: str = None
    module: str = None
    output: str = None
    N: int = 6
    window: Window = None
    steps: int = 6
    seed: int = 0
    trials: int = 32
    bound: int = 10
    point: str = None
    format: str = 'json'
    verbose: bool = False

    def __post_init__(self) -> None:
        if not self.command in COMMANDS:
            raise ParseError(f'Unknown command "{self.command}", expected one of {", ".join(COMMANDS)}')
        if not self.format in FORMATS:
            raise ParseError(f'Unknown output format "{self.format}", expected json or table')
        if self.N < 2:
            raise PreconditionError(f'The truncation degree N must be at least 2, got {self.N}')
        if self.steps < 1 or self.trials < 1 or self.bound < 1:
            raise PreconditionError('steps, trials and bound must be positive')

    @property
    def window_bounds(self) -> tuple[int, int]:
        return (None, None) if self.window is None else self.window.bounds

    @window_bounds.setter
    @match_typing
    def window_bounds(self, value: tuple[int, int]) -> Self:
        self.window = Window(name='window', lower_bound=value[0], upper_bound=value[1])
        return self

    def require_input(self) -> str:
        if self.input is None:
            raise ParseError(f'The command "{self.command}" needs --input')
        return self.input

    def require_module(self) -> str:
        if self.module is None:
            raise ParseError(f'The command "{self.command}" needs --module')
        return self.module
