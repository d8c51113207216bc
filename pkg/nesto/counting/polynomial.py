from dataclasses import dataclass
from math import comb
from typing import Iterable, Union

import numpy as np

from ..errors import CoefficientOverflow

_INT64 = np.iinfo(np.int64)


def normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    """Strip trailing zero coefficients."""
    items = [int(c) for c in coeffs]
    n = len(items)
    while n and items[n - 1] == 0:
        n -= 1
    return tuple(items[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in t; coeffs[k] is the coefficient of t^k.

    The zero polynomial has no coefficients and degree -1 (standing in for -inf).
    Every coefficient must fit a signed 64-bit integer.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = normalize(self.coeffs)
        for c in trimmed:
            if c < _INT64.min or c > _INT64.max:
                raise CoefficientOverflow(c)
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def of(cls, *coeffs: int) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def binomial(cls, a: int, k: int) -> "IntPolynomial":
        """(t + a)^k expanded directly."""
        return cls(tuple(comb(k, j) * a ** (k - j) for j in range(k + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _lift(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return other if isinstance(other, IntPolynomial) else IntPolynomial.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] += a * b
        return IntPolynomial(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        """Evaluate at an integer (Horner)."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def shift(self, a: int) -> "IntPolynomial":
        """p(t + a)."""
        result = IntPolynomial()
        for k, c in enumerate(self.coeffs):
            if c:
                result = result + IntPolynomial.binomial(a, k) * c
        return result

    def reverse(self, d: int) -> "IntPolynomial":
        """t^d p(1/t); requires degree <= d."""
        if self.degree > d:
            raise ValueError(f"degree {self.degree} exceeds {d}")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return IntPolynomial(tuple(reversed(padded)))

    def divide_by_monomial(self, k: int) -> "IntPolynomial":
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by t^{k}")
        return IntPolynomial(self.coeffs[k:])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs) if self.coeffs else [0]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


T = IntPolynomial.monomial(1)
ONE = IntPolynomial.constant(1)
ZERO = IntPolynomial()


@dataclass(frozen=True)
class RationalInT:
    """numerator / (sign * t^exponent), kept unreduced.

    Equality is decided by cross-multiplying, so no polynomial gcd is ever needed.
    """

    numerator: IntPolynomial
    sign: int = 1
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("denominator sign must be +1 or -1")

    @property
    def denominator(self) -> IntPolynomial:
        return IntPolynomial.monomial(self.exponent, self.sign)

    def __add__(self, other: "RationalInT") -> "RationalInT":
        exponent = max(self.exponent, other.exponent)
        sign = self.sign * other.sign
        # a/(s1 t^e1) + b/(s2 t^e2) over s1 s2 t^e
        left = self.numerator * IntPolynomial.monomial(exponent - self.exponent, other.sign)
        right = other.numerator * IntPolynomial.monomial(exponent - other.exponent, self.sign)
        return RationalInT(left + right, sign, exponent)

    def scale(self, p: IntPolynomial) -> "RationalInT":
        return RationalInT(self.numerator * p, self.sign, self.exponent)

    def __neg__(self) -> "RationalInT":
        return RationalInT(-self.numerator, self.sign, self.exponent)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalInT):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        coeffs = self.numerator.coeffs
        low = next((k for k, c in enumerate(coeffs) if c), 0)
        return hash((tuple(self.sign * c for c in coeffs[low:]), self.exponent - low))

    def at_minus_one(self) -> int:
        """Value at t = -1."""
        return self.numerator(-1) * (self.sign * (-1) ** self.exponent)

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_list(), "sign": self.sign, "exponent": self.exponent}

    def __str__(self) -> str:
        sign = "-" if self.sign < 0 else ""
        return f"({self.numerator}) / {sign}t^{self.exponent}"


def zero_rational() -> RationalInT:
    return RationalInT(ZERO)
