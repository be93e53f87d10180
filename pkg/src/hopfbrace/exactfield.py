"""Exact scalars over the rationals or a prime field.

Raw values are plain Python numbers so the tensor kernels can use them
directly: over Q an ``int`` or a ``Fraction`` (integral fractions are always
demoted to ``int``), over F_p an ``int`` in ``range(p)``.  ``Scalar`` wraps a
raw value together with its field for the public arithmetic API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Raw = Union[int, Fraction]


class FieldError(ArithmeticError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class FieldMismatch(FieldError, TypeError):
    pass


class BadFieldSpec(FieldError, ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 1 << 20:
        k = 2
        while k * k <= n:
            if n % k == 0:
                return False
            k += 1
        return True
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either Q (``p is None``) or F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise BadFieldSpec(f"{self.p} is not prime")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(int(p))

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts ``rational``, ``q``, ``prime:p``, ``fp`` / ``Fp`` style names."""
        t = text.strip().lower()
        if t in ("rational", "q", "qq", "rationals"):
            return cls.rational()
        m = re.fullmatch(r"(?:prime:|f_?|gf\(?)(\d+)\)?", t)
        if not m:
            raise BadFieldSpec(f"unknown field {text!r}")
        return cls.prime(int(m.group(1)))

    @property
    def kind(self) -> str:
        return "rational" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    def to_json(self) -> dict:
        return {"type": "rational"} if self.p is None else {"type": "prime", "p": self.p}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("type")
        if kind == "rational":
            return cls.rational()
        if kind == "prime":
            return cls.prime(int(obj["p"]))
        raise BadFieldSpec(f"unknown field type {kind!r}")

    # raw arithmetic, used by the kernels

    def norm(self, x) -> Raw:
        if self.p is not None:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return int(x)

    def add(self, a: Raw, b: Raw) -> Raw:
        return self.norm(a + b)

    def sub(self, a: Raw, b: Raw) -> Raw:
        return self.norm(a - b)

    def mul(self, a: Raw, b: Raw) -> Raw:
        return self.norm(a * b)

    def neg(self, a: Raw) -> Raw:
        return self.norm(-a)

    def inv(self, a: Raw) -> Raw:
        if not a:
            raise DivisionByZero("inverse of zero")
        if self.p is not None:
            return pow(int(a), -1, self.p)
        return self.norm(Fraction(1) / a)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.mul(a, self.inv(b))

    def parse_scalar(self, text) -> Raw:
        """Integers, ``a/b`` fractions, and residues."""
        if isinstance(text, int) and not isinstance(text, bool):
            return self.norm(text)
        s = str(text).strip()
        if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", s):
            raise ValueError(f"bad scalar {text!r}")
        num, _, den = s.partition("/")
        n = int(num)
        d = int(den) if den else 1
        if d == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        if self.p is not None:
            if d % self.p == 0:
                raise DivisionByZero(f"denominator of {text!r} vanishes mod {self.p}")
            return n * pow(d, -1, self.p) % self.p
        return self.norm(Fraction(n, d))

    def format(self, a: Raw) -> str:
        return str(self.norm(a))


@dataclass(frozen=True)
class Scalar:
    value: Raw
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.norm(self.value))

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "Scalar":
        return cls(field.parse_scalar(text), field)

    def _other(self, other) -> Raw:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.norm(other)
        return NotImplemented

    def _wrap(self, v: Raw) -> "Scalar":
        return Scalar(v, self.field)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inv(self) -> "Scalar":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.norm(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.field})"


_OPS = {"add", "sub", "mul", "div", "neg", "inv", "eq"}


def field_arith(a: Scalar, b: Scalar | None, op: str):
    """Dispatch one field operation; unary ops ignore ``b``."""
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if not isinstance(b, Scalar) or b.field != a.field:
        raise FieldMismatch("operands live in different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    return a == b
