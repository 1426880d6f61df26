"""Exact scalar rings: rationals, integers, integers mod n and parameter polynomials.

Rationals are ``gmpy2.mpq`` values (canonical, arbitrary precision); the ring objects below
only carry coercion, the distinguished elements and the characteristic, so that
polynomials can check that they are being combined over the same ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

Rational = mpq


def _is_rational(x) -> bool:
    return isinstance(x, _RationalABC) and not isinstance(x, bool)


class RingMismatchError(TypeError):
    """Raised when elements over different scalar rings are combined."""


def parse_rational(text: str) -> mpq:
    """Parse ``p`` or ``p/q``; decimal points and exponents are rejected."""
    s = text.strip()
    body = s.lstrip("+-")
    num, _, den = body.partition("/")
    if not num.isdigit() or (den and not den.isdigit()) or s.count("/") > 1:
        raise ValueError(f"not an exact rational literal: {text!r}")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return mpq(Fraction(s))


@dataclass(frozen=True)
class RationalField:
    name: str = "QQ"
    characteristic: int = 0
    is_field: bool = True

    @property
    def zero(self) -> mpq:
        return mpq(0)

    @property
    def one(self) -> mpq:
        return mpq(1)

    def __call__(self, x) -> mpq:
        if type(x) is mpq:
            return x
        if _is_rational(x):
            return mpq(x.numerator, x.denominator)
        if isinstance(x, str):
            return parse_rational(x)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IntegerRing:
    name: str = "ZZ"
    characteristic: int = 0
    is_field: bool = False

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __call__(self, x) -> int:
        if isinstance(x, bool) or not isinstance(x, int):
            if _is_rational(x) and x.denominator == 1:
                return int(x.numerator)
            raise RingMismatchError(f"cannot coerce {x!r} into ZZ")
        return x

    def __str__(self):
        return self.name


QQ = RationalField()
ZZ = IntegerRing()


class IntMod:
    """Residue class modulo ``modulus``; the residue is kept in ``[0, modulus)``."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residue", residue % modulus)

    def __setattr__(self, key, value):
        raise AttributeError("IntMod is immutable")

    def _other(self, other):
        if isinstance(other, IntMod):
            if other.modulus != self.modulus:
                raise RingMismatchError(f"Z/{self.modulus} vs Z/{other.modulus}")
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        if _is_rational(other) and other.denominator == 1:
            return int(other.numerator)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else IntMod(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else IntMod(self.residue - o, self.modulus)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else IntMod(o - self.residue, self.modulus)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else IntMod(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return IntMod(-self.residue, self.modulus)

    def __pow__(self, n: int):
        return IntMod(pow(self.residue, n, self.modulus), self.modulus)

    def inverse(self) -> IntMod:
        return IntMod(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * IntMod(o, self.modulus).inverse()

    def __bool__(self):
        return self.residue != 0

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.residue - o) % self.modulus == 0

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __repr__(self):
        return f"IntMod({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


@dataclass(frozen=True)
class IntModRing:
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")

    @property
    def name(self) -> str:
        return f"Z/{self.modulus}"

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def is_field(self) -> bool:
        n = self.modulus
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    @property
    def zero(self) -> IntMod:
        return IntMod(0, self.modulus)

    @property
    def one(self) -> IntMod:
        return IntMod(1, self.modulus)

    def __call__(self, x) -> IntMod:
        if isinstance(x, IntMod):
            if x.modulus != self.modulus:
                raise RingMismatchError(f"{x!r} is not in {self.name}")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return IntMod(x, self.modulus)
        if _is_rational(x):
            return IntMod(int(x.numerator), self.modulus) / IntMod(int(x.denominator), self.modulus)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def __str__(self):
        return self.name


class ParamPoly:
    """Multivariate polynomial with rational coefficients in named parameters.

    ``terms`` maps exponent tuples (one entry per parameter name) to nonzero
    rationals.  Two ParamPolys only combine when their parameter lists agree.
    """

    __slots__ = ("names", "terms", "_hash")

    def __init__(self, names: tuple[str, ...], terms=None):
        names = tuple(names)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(names):
                raise ValueError(f"exponent vector {exps} does not match parameters {names}")
            c = mpq(c.numerator, c.denominator) if type(c) is not mpq else c
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("ParamPoly is immutable")

    @classmethod
    def constant(cls, names, c) -> ParamPoly:
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def gen(cls, names, name: str) -> ParamPoly:
        names = tuple(names)
        exps = tuple(1 if n == name else 0 for n in names)
        if name not in names:
            raise ValueError(f"unknown parameter {name!r}")
        return cls(names, {exps: 1})

    def _other(self, other):
        if isinstance(other, ParamPoly):
            if other.names != self.names:
                raise RingMismatchError(f"parameters {self.names} vs {other.names}")
            return other
        if _is_rational(other):
            return ParamPoly.constant(self.names, other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return ParamPoly(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ParamPoly(self.names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a parameter polynomial")
        result = ParamPoly.constant(self.names, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def constant_value(self) -> mpq | None:
        """The rational value if this polynomial is constant, else None."""
        if not self.terms:
            return mpq(0)
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if not any(e):
                return c
        return None

    def __truediv__(self, other):
        # Only division by nonzero rational constants is representable.
        o = self._other(other)
        if o is NotImplemented:
            return o
        c = o.constant_value()
        if c is None or c == 0:
            raise ZeroDivisionError(f"cannot divide by {o}")
        return ParamPoly(self.names, {e: v / c for e, v in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            o = self._other(other)
        except RingMismatchError:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.names, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return f"ParamPoly({self.names}, {self.terms})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(self.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class ParamRing:
    """Rational polynomial ring in a fixed, ordered list of parameter names."""

    names: tuple[str, ...]
    characteristic: int = 0
    is_field: bool = False

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate parameter names")

    @property
    def name(self) -> str:
        return "QQ[" + ",".join(self.names) + "]"

    @property
    def zero(self) -> ParamPoly:
        return ParamPoly(self.names)

    @property
    def one(self) -> ParamPoly:
        return ParamPoly.constant(self.names, 1)

    def gen(self, name: str) -> ParamPoly:
        return ParamPoly.gen(self.names, name)

    def __call__(self, x) -> ParamPoly:
        if isinstance(x, ParamPoly):
            if x.names != self.names:
                raise RingMismatchError(f"parameters {x.names} vs {self.names}")
            return x
        if _is_rational(x):
            return ParamPoly.constant(self.names, x)
        if isinstance(x, str):
            return ParamPoly.constant(self.names, parse_rational(x))
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def __str__(self):
        return self.name


def characteristic(descriptor) -> int:
    """Characteristic of a scalar ring, or of a weak unitalization over ZZ or Z/n."""
    char = getattr(descriptor, "characteristic", None)
    if isinstance(char, int) and not isinstance(char, bool):
        return char
    if callable(char):
        return char()
    raise TypeError(f"unsupported ring descriptor: {descriptor!r}")
