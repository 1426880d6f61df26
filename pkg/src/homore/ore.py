"""Ore polynomials sum a_i(Y) X^i and their multiplications.

The plain product is the Ore product

    aX^m . bX^n = sum_i (a pi_i^m(b)) X^(i+n),

and the star product is ``p * q = alpha(p . q)`` for a homogeneous twist
``alpha(aX^m) = alpha(a) X^m``.  Both are bilinear over the scalars, so a
context caches the products of basis monomials ``Y^j X^m`` and expands
everything else from those structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .maps import IDENTITY, ZERO, MapSpec, map_apply, pi_row
from .polynomial import ZERO_DEGREE, Polynomial, format_poly
from .scalars import QQ, RingMismatchError

PLAIN = "plain"
STAR = "star"


class WindowExceeded(ValueError):
    """A twisting table was queried beyond the window it describes."""


class OrePoly:
    """Finitely supported map from X-degree to nonzero coefficient in K[Y]."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, terms=None, ring=QQ):
        clean = {}
        for n, a in (terms or {}).items():
            if n < 0:
                raise ValueError("negative X-degree")
            if not isinstance(a, Polynomial):
                a = Polynomial.constant(a, ring)
            elif a.ring != ring:
                raise RingMismatchError(f"{a.ring} coefficient in OrePoly over {ring}")
            if a:
                clean[n] = a
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("OrePoly is immutable")

    @classmethod
    def zero(cls, ring=QQ) -> OrePoly:
        return cls({}, ring)

    @classmethod
    def monomial(cls, a: Polynomial, m: int) -> OrePoly:
        """The element ``a X^m``."""
        return cls({m: a}, a.ring)

    @classmethod
    def basis(cls, j: int, m: int, ring=QQ) -> OrePoly:
        """The element ``Y^j X^m``."""
        return cls({m: Polynomial.monomial(j, 1, ring)}, ring)

    @classmethod
    def from_poly(cls, a: Polynomial) -> OrePoly:
        return cls({0: a}, a.ring)

    @classmethod
    def X(cls, ring=QQ) -> OrePoly:
        """The generator X; only meaningful because K[Y] is unital."""
        return cls({1: Polynomial.constant(1, ring)}, ring)

    @classmethod
    def Y(cls, ring=QQ) -> OrePoly:
        return cls({0: Polynomial.gen(ring)}, ring)

    @classmethod
    def one(cls, ring=QQ) -> OrePoly:
        return cls({0: Polynomial.constant(1, ring)}, ring)

    @property
    def degree(self):
        """X-degree; :data:`ZERO_DEGREE` for the zero element."""
        return max(self.terms) if self.terms else ZERO_DEGREE

    def coefficient(self, n: int) -> Polynomial:
        return self.terms.get(n) or Polynomial.zero(self.ring)

    def y_degree(self):
        return max((a.degree for a in self.terms.values()), default=ZERO_DEGREE)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: OrePoly):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for n, a in other.terms.items():
            out[n] = out[n] + a if n in out else a
        return OrePoly(out, self.ring)

    def __neg__(self):
        return OrePoly({n: -a for n, a in self.terms.items()}, self.ring)

    def __sub__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> OrePoly:
        return OrePoly({n: a.scale(c) for n, a in self.terms.items()}, self.ring)

    def __mul__(self, c):
        # scalar multiplication only; products of Ore polynomials need a context
        if isinstance(c, OrePoly):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map_coefficients(self, f) -> OrePoly:
        return OrePoly({n: f(a) for n, a in self.terms.items()}, self.ring)

    def __eq__(self, other):
        if isinstance(other, OrePoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, Polynomial):
            return self == OrePoly.from_poly(other)
        try:
            return self == OrePoly.from_poly(Polynomial.constant(other, self.ring))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    def __repr__(self):
        return f"OrePoly({self})"

    def __str__(self):
        return format_ore(self)


def format_ore(p: OrePoly) -> str:
    """Coefficient-major text, e.g. ``(Y^2 + 2*k*Y)*X^3 + 1``."""
    if not p.terms:
        return "0"
    parts = []
    for n in sorted(p.terms, reverse=True):
        a = p.terms[n]
        xs = "" if n == 0 else ("X" if n == 1 else f"X^{n}")
        s = format_poly(a)
        if not xs:
            parts.append(s)
            continue
        if s == "1":
            parts.append(xs)
        elif s == "-1":
            parts.append("-" + xs)
        elif sum(1 for c in a.coeffs if c) > 1:
            parts.append(f"({s})*{xs}")
        else:
            parts.append(f"{s}*{xs}")
    out = parts[0]
    for s in parts[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


@dataclass(frozen=True, eq=False)
class OreContext:
    """The data (sigma, delta, twist, mode) fixing a multiplication on R[X; sigma, delta].

    In ``star`` mode the twist must be a homogeneous map (a MapSpec on R); in
    ``plain`` mode the twist is only used as the twisting map of the
    hom-associativity identity and may also be a :class:`TwistTable`.
    """

    sigma: MapSpec = IDENTITY
    delta: MapSpec = ZERO
    twist: object = IDENTITY
    mode: str = PLAIN
    ring: object = QQ
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.mode not in (PLAIN, STAR):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == STAR and not isinstance(self.twist, MapSpec):
            raise TypeError("star mode requires a homogeneous twist given as a map on R")

    @property
    def homogeneous(self) -> bool:
        return isinstance(self.twist, MapSpec)

    def with_mode(self, mode: str) -> OreContext:
        return OreContext(self.sigma, self.delta, self.twist, mode, self.ring)

    def with_twist(self, twist, mode: str | None = None) -> OreContext:
        return OreContext(self.sigma, self.delta, twist, mode or self.mode, self.ring)

    # -- structure constants ---------------------------------------------

    def _pi_of_basis(self, m: int, l: int) -> list[Polynomial]:
        key = ("pi", m, l)
        row = self._cache.get(key)
        if row is None:
            row = pi_row(m, self.sigma, self.delta, Polynomial.monomial(l, 1, self.ring))
            self._cache[key] = row
        return row

    def _plain_basis(self, j: int, m: int, l: int, n: int) -> dict[int, Polynomial]:
        key = ("plain", j, m, l, n)
        out = self._cache.get(key)
        if out is None:
            yj = Polynomial.monomial(j, 1, self.ring)
            out = {}
            for i, b in enumerate(self._pi_of_basis(m, l)):
                c = yj * b
                if c:
                    out[i + n] = c
            self._cache[key] = out
        return out

    def _star_basis(self, j: int, m: int, l: int, n: int) -> dict[int, Polynomial]:
        key = ("star", j, m, l, n)
        out = self._cache.get(key)
        if out is None:
            out = {}
            for d, c in self._plain_basis(j, m, l, n).items():
                c = map_apply(self.twist, c)
                if c:
                    out[d] = c
            self._cache[key] = out
        return out

    def _product(self, p: OrePoly, q: OrePoly, basis) -> OrePoly:
        p._check(q)
        if p.ring != self.ring:
            raise RingMismatchError(f"element over {p.ring} in context over {self.ring}")
        zero = self.ring.zero
        acc: dict[int, list] = {}
        for m, a in p.terms.items():
            for n, b in q.terms.items():
                for j, aj in enumerate(a.coeffs):
                    if not aj:
                        continue
                    for l, bl in enumerate(b.coeffs):
                        if not bl:
                            continue
                        s = aj * bl
                        for d, c in basis(j, m, l, n).items():
                            row = acc.get(d)
                            if row is None:
                                row = acc[d] = []
                            if len(c.coeffs) > len(row):
                                row.extend([zero] * (len(c.coeffs) - len(row)))
                            for t, x in enumerate(c.coeffs):
                                if x:
                                    row[t] = row[t] + s * x
        return OrePoly({d: Polynomial._raw(self.ring, row) for d, row in acc.items()}, self.ring)

    # -- public operations -------------------------------------------------

    def ore_mul(self, p: OrePoly, q: OrePoly) -> OrePoly:
        return self._product(p, q, self._plain_basis)

    def star_mul(self, p: OrePoly, q: OrePoly) -> OrePoly:
        if not self.homogeneous:
            raise TypeError("star product needs a homogeneous twist")
        return self._product(p, q, self._star_basis)

    def mul(self, p: OrePoly, q: OrePoly) -> OrePoly:
        return self.star_mul(p, q) if self.mode == STAR else self.ore_mul(p, q)

    def twist_apply(self, p: OrePoly) -> OrePoly:
        return twist_apply(self, p)

    def commutator(self, p: OrePoly, q: OrePoly) -> OrePoly:
        return self.mul(p, q) - self.mul(q, p)

    def coefficient_product(self, a: Polynomial, b: Polynomial) -> Polynomial:
        """Product on R induced by the mode: ``ab`` or ``alpha(ab)``."""
        if self.mode == STAR:
            return map_apply(self.twist, a * b)
        return a * b


def ore_mul(ctx: OreContext, p: OrePoly, q: OrePoly) -> OrePoly:
    return ctx.ore_mul(p, q)


def star_mul(ctx: OreContext, p: OrePoly, q: OrePoly) -> OrePoly:
    return ctx.star_mul(p, q)


def commutator(ctx: OreContext, p: OrePoly, q: OrePoly) -> OrePoly:
    return ctx.commutator(p, q)


def twist_apply(ctx: OreContext, p: OrePoly) -> OrePoly:
    """Homogeneous: ``alpha(aX^m) = alpha(a) X^m``.
    Table: ``alpha(aX^m) = sum_i alpha_{i+1,m+1}(a) X^i``."""
    tw = ctx.twist
    if isinstance(tw, MapSpec):
        return p.map_coefficients(lambda a: map_apply(tw, a))
    out = OrePoly.zero(p.ring)
    for m, a in p.terms.items():
        out = out + OrePoly(tw.image(a, m), p.ring)
    return out


def _fixes_delta_orbit(ctx: OreContext, b: Polynomial, n: int) -> bool:
    q = b
    for _ in range(n + 1):
        if map_apply(ctx.sigma, q) != q:
            return False
        q = map_apply(ctx.delta, q)
    return True


def diff_mult(ctx: OreContext, p: OrePoly, b: Polynomial) -> OrePoly:
    """``aX^n . b = sum_i C(n, i) a delta^(n-i)(b) X^i`` for sigma = id.

    The precondition is checked on exactly the polynomials the formula touches:
    sigma must fix ``delta^j(b)`` for ``0 <= j <= n``, which makes every
    composition word collapse to a power of delta.
    """
    if len(p.terms) != 1:
        raise ValueError("diff_mult expects a monomial a X^n")
    (n, a), = p.terms.items()
    if not _fixes_delta_orbit(ctx, b, n):
        raise ValueError("diff_mult requires sigma = id")
    iterates = [b]
    for _ in range(n):
        iterates.append(map_apply(ctx.delta, iterates[-1]))
    return OrePoly({i: (a * iterates[n - i]).scale(comb(n, i)) for i in range(n + 1)}, p.ring)


def random_ore_poly(rng, ring, deg_x: int, deg_y: int, *, density: float = 0.6,
                    num_range: int = 5, den_range: int = 3) -> OrePoly:
    """Seeded random element with small rational coefficients (never zero)."""
    while True:
        terms = {}
        for n in range(deg_x + 1):
            coeffs = []
            for _ in range(deg_y + 1):
                if rng.random() < density:
                    num = rng.randint(-num_range, num_range)
                    if ring == QQ:
                        coeffs.append(QQ(Fraction(num, rng.randint(1, den_range))))
                    else:
                        coeffs.append(ring(num))
                else:
                    coeffs.append(ring.zero)
            terms[n] = Polynomial(coeffs, ring)
        p = OrePoly(terms, ring)
        if p:
            return p
