from abc import ABC, abstractmethod
from ncbgg.Errors import WindowTooSmallError
from ncbgg.Window import Window


class Windowed(ABC):

    @property
    @abstractmethod
    def window(self) -> Window:
        pass

    @property
    def truncation(self) -> int:
        """
        The truncation degree to suggest when a read falls outside the
        window; objects that stem from a truncated algebra override this.
        """
        return None

    def require(self, lo: int, hi: int) -> None:
        if not self.window.contains(lo, hi):
            w = self.window
            needed_top = None
            if not self.truncation is None and hi > w.upper_bound:
                needed_top = self.truncation + (hi - w.upper_bound)
            raise WindowTooSmallError(
                f'Degrees {lo}..{hi} were requested but only {w} is valid',
                needed=(min(lo, w.lower_bound), max(hi, w.upper_bound)), truncation=needed_top)
