from abc import ABC, abstractmethod
from enum import Enum, auto
from fractions import Fraction
from typing import Any, Union
import numpy as np
from nptyping import NDArray, Shape
from sympy import isprime
from ncbgg.Errors import InvalidFieldError, ParseError

Scalar = Union[int, Fraction]
Entries = NDArray[Shape["*, ..."], Any]



class FieldKind(Enum):
    PRIME = auto()
    RATIONAL = auto()




class Field(ABC):
    """
    A field together with the numpy representation of its elements. All
    arithmetic on arrays goes through reduce(), so results are always
    normalized (residues in [0, p) or reduced fractions).
    """
    def __init__(self, kind: FieldKind) -> None:
        self.kind = kind

    @property
    @abstractmethod
    def characteristic(self) -> int:
        pass

    @property
    @abstractmethod
    def dtype(self) -> Any:
        pass

    @abstractmethod
    def coerce(self, values: Any) -> Entries:
        pass

    @abstractmethod
    def reduce(self, arr: Entries) -> Entries:
        pass

    @abstractmethod
    def inv(self, x: Scalar) -> Scalar:
        pass

    @abstractmethod
    def parse(self, token: Any) -> Scalar:
        pass

    @abstractmethod
    def random(self, rng: np.random.Generator, shape: tuple[int, ...]) -> Entries:
        pass

    @abstractmethod
    def to_json(self) -> Any:
        pass

    def zeros(self, shape: tuple[int, ...]) -> Entries:
        return self.coerce(np.zeros(shape, dtype=np.int64))

    def eye(self, n: int) -> Entries:
        return self.coerce(np.eye(n, dtype=np.int64))

    def matmul(self, a: Entries, b: Entries) -> Entries:
        return self.reduce(a @ b)

    def kron(self, a: Entries, b: Entries) -> Entries:
        ra, ca = a.shape
        rb, cb = b.shape
        out = a[:, None, :, None] * b[None, :, None, :]
        return self.reduce(out.reshape(ra * rb, ca * cb))

    def scalar_to_json(self, x: Scalar) -> Union[int, str]:
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'
        return int(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.kind == other.kind and self.characteristic == other.characteristic

    def __hash__(self) -> int:
        return hash((self.kind, self.characteristic))




class PrimeField(Field):
    def __init__(self, p: int) -> None:
        super().__init__(kind=FieldKind.PRIME)
        if not isinstance(p, (int, np.integer)) or p < 2 or p >= 2**31:
            raise InvalidFieldError(f'The prime must be an integer in [2, 2^31), got {p}')
        if not isprime(int(p)):
            raise InvalidFieldError(f'{p} is not a prime')
        self.p = int(p)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def dtype(self) -> Any:
        return np.int64

    def coerce(self, values: Any) -> Entries:
        arr = np.asarray(values)
        if arr.dtype.kind in "OUS":
            arr = np.vectorize(self.parse, otypes=[np.int64])(arr) if arr.size > 0 else arr.astype(np.int64)
        return np.mod(arr.astype(np.int64), self.p)

    def reduce(self, arr: Entries) -> Entries:
        return np.mod(arr, self.p)

    def matmul(self, a: Entries, b: Entries) -> Entries:
        # int64 accumulation overflows once inner * (p-1)^2 reaches 2^63
        inner = a.shape[-1] if a.ndim > 0 else 1
        if inner * (self.p - 1) ** 2 < 2**62:
            return np.mod(a @ b, self.p)
        return np.mod(a.astype(object) @ b.astype(object), self.p).astype(np.int64)

    def inv(self, x: Scalar) -> Scalar:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError('Zero has no inverse')
        return pow(x, -1, self.p)

    def parse(self, token: Any) -> int:
        if isinstance(token, str):
            if '/' in token:
                num, den = token.split('/', 1)
                if self.parse(den) == 0:
                    raise ParseError(f'Zero denominator in "{token}"')
                return (self.parse(num) * self.inv(self.parse(den))) % self.p
            try:
                return int(token.strip()) % self.p
            except ValueError:
                raise ParseError(f'Cannot read "{token}" as an element of F_{self.p}')
        if isinstance(token, Fraction):
            if token.denominator % self.p == 0:
                raise ParseError(f'{token} has no image in F_{self.p}')
            return (token.numerator * self.inv(token.denominator)) % self.p
        if isinstance(token, (bool, float)):
            raise ParseError(f'Field elements must be integers or "a/b" strings, got {token!r}')
        try:
            return int(token) % self.p
        except (TypeError, ValueError):
            raise ParseError(f'Cannot read {token!r} as an element of F_{self.p}')

    def random(self, rng: np.random.Generator, shape: tuple[int, ...]) -> Entries:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def to_json(self) -> Any:
        return {'prime': self.p}

    def __repr__(self) -> str:
        return f'F_{self.p}'




class RationalField(Field):
    def __init__(self) -> None:
        super().__init__(kind=FieldKind.RATIONAL)

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def dtype(self) -> Any:
        return object

    def coerce(self, values: Any) -> Entries:
        arr = np.asarray(values, dtype=object)
        if arr.size == 0:
            return arr
        return np.vectorize(self.parse, otypes=[object])(arr)

    def reduce(self, arr: Entries) -> Entries:
        return arr

    def kron(self, a: Entries, b: Entries) -> Entries:
        return super().kron(a.astype(object), b.astype(object))

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError('Zero has no inverse')
        return Fraction(1) / x

    def parse(self, token: Any) -> Fraction:
        if isinstance(token, Fraction):
            return token
        if isinstance(token, (bool, float)):
            raise ParseError(f'Field elements must be integers or "a/b" strings, got {token!r}')
        try:
            return Fraction(token) if not isinstance(token, np.integer) else Fraction(int(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f'Cannot read "{token}" as a rational number')

    def random(self, rng: np.random.Generator, shape: tuple[int, ...]) -> Entries:
        return self.coerce(rng.integers(-9, 10, size=shape))

    def to_json(self) -> Any:
        return 'rational'

    def __repr__(self) -> str:
        return 'Q'


def field_from_json(data: Any) -> Field:
    if data == 'rational':
        return RationalField()
    if isinstance(data, dict) and 'prime' in data:
        p = data['prime']
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError(f'"prime" must be an integer, got {p!r}')
        return PrimeField(p)
    raise ParseError(f'Unknown field {data!r}; use {{"prime": p}} or "rational"')
