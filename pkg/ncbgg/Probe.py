from abc import ABC, abstractmethod
from typing import Any



class Probe(ABC):
    def __init__(self) -> None:
        super().__init__()

    @abstractmethod
    def evaluate(self) -> dict[str, Any]:
        """
        Run all necessary computations and return the report as a plain
        dictionary (JSON-compatible values only).
        """
        pass

    def __call__(self) -> dict[str, Any]:
        """
        Wrapper for evaluate().
        """
        return self.evaluate()
