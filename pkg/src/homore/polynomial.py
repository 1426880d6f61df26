"""Dense univariate polynomials in Y over an exact scalar ring."""

from __future__ import annotations

from .scalars import QQ, RingMismatchError


class _ZeroDegree:
    """Degree of the zero polynomial: below every integer, absorbing under ``+``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-oo"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


class Polynomial:
    """Element of R = K[Y], stored as a tuple of coefficients (index = degree).

    The highest stored coefficient is nonzero; the zero polynomial is ``()`` and
    reports :data:`ZERO_DEGREE` as its degree.
    """

    __slots__ = ("ring", "coeffs", "_hash")

    def __init__(self, coeffs=(), ring=QQ):
        cs = [ring(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, ring, coeffs):
        # coeffs already coerced; only trailing zeros stripped
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "ring", ring)
        object.__setattr__(p, "coeffs", tuple(cs))
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, key, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, ring=QQ) -> Polynomial:
        return cls._raw(ring, ())

    @classmethod
    def constant(cls, c, ring=QQ) -> Polynomial:
        return cls._raw(ring, (ring(c),))

    @classmethod
    def monomial(cls, n: int, c=1, ring=QQ) -> Polynomial:
        if n < 0:
            raise ValueError("negative exponent")
        return cls._raw(ring, (ring.zero,) * n + (ring(c),))

    @classmethod
    def gen(cls, ring=QQ) -> Polynomial:
        return cls.monomial(1, 1, ring)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative degree")
        return self.coeffs[n] if n < len(self.coeffs) else self.ring.zero

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def terms(self):
        """Yield ``(degree, coefficient)`` for the nonzero coefficients."""
        for n, c in enumerate(self.coeffs):
            if c:
                yield n, c

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        return Polynomial.constant(other, self.ring)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except RingMismatchError:
            raise
        except (TypeError, ValueError):
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except RingMismatchError:
            raise
        except (TypeError, ValueError):
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = self.ring(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except RingMismatchError:
                raise
            except (TypeError, ValueError):
                return NotImplemented
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial.zero(self.ring)
        zero = self.ring.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Polynomial._raw(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> Polynomial:
        return Polynomial._raw(self.ring, [c * n for n, c in enumerate(self.coeffs)][1:])

    def substitute(self, image: Polynomial) -> Polynomial:
        """Ring homomorphism Y -> ``image`` fixing scalars (Horner evaluation)."""
        image = self._coerce(image)
        result = Polynomial.zero(self.ring)
        for c in reversed(self.coeffs):
            result = result * image + c
        return result

    def __call__(self, y0):
        y0 = self.ring(y0)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * y0 + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.coeffs == other.coeffs
        try:
            return self == Polynomial.constant(other, self.ring)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.coeffs)))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)


def _is_compound(c) -> bool:
    s = str(c)
    return " + " in s or " - " in s


def format_poly(p: Polynomial, var: str = "Y") -> str:
    """Render as ``c*Y^n + ...`` with descending degree; the parser reads this back."""
    if not p.coeffs:
        return "0"
    parts = []
    for n in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[n]
        if not c:
            continue
        mono = "" if n == 0 else (var if n == 1 else f"{var}^{n}")
        if _is_compound(c):
            sign, body = "+", f"({c})"
        else:
            s = str(c)
            sign = "-" if s.startswith("-") else "+"
            s = s.lstrip("-")
            if mono and s == "1":
                body = ""
            else:
                body = s
        if mono:
            body = f"{body}*{mono}" if body else mono
        parts.append((sign, body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_substitute(p: Polynomial, image_of_Y: Polynomial) -> Polynomial:
    return p.substitute(image_of_Y)
