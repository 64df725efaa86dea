from typing import Iterator
from typing_extensions import Self
from strongtyping.strong_typing import match_typing
from dataclasses import dataclass

@dataclass
class Window:
    name: str
    lower_bound: int = None
    upper_bound: int = None

    @property
    def bounds(self) -> tuple[int, int]:
        return (self.lower_bound, self.upper_bound)

    @bounds.setter
    @match_typing
    def bounds(self, value: tuple[int, int]) -> Self:
        self.lower_bound = value[0]
        self.upper_bound = value[1]
        return self

    @property
    def is_empty(self) -> bool:
        lb, ub = self.bounds
        if lb is None or ub is None:
            raise Exception('Cannot check an unbounded window for emptiness')
        return ub < lb

    def contains(self, lo: int, hi: int=None) -> bool:
        hi = lo if hi is None else hi
        lb, ub = self.bounds
        if lb is None or ub is None:
            raise Exception(f'Window {self.name} has no bounds set')
        return lo >= lb and hi <= ub

    def degrees(self) -> Iterator[int]:
        return iter(range(self.lower_bound, self.upper_bound + 1))

    def intersect(self, other: 'Window') -> 'Window':
        return Window(name=self.name, lower_bound=max(self.lower_bound, other.lower_bound),
            upper_bound=min(self.upper_bound, other.upper_bound))

    def __str__(self) -> str:
        return f'{self.name}[{self.lower_bound}:{self.upper_bound}]'
