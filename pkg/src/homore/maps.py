"""Linear maps on R = K[Y] given by finite descriptions.

Every map is evaluated on the monomial basis ``Y^n`` and extended linearly, so
all variants are additive and scalar-linear by construction.  Equality of maps
is only ever decided extensionally, up to an explicit degree bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .polynomial import Polynomial
from .report import Report, run_check
from .scalars import QQ, RingMismatchError


class MapSpec:
    """Base class; subclasses implement :meth:`_image` on ``Y^n``."""

    def _ring(self):
        return None

    def _image(self, n: int, ring) -> Polynomial:
        raise NotImplementedError

    def monomial_image(self, n: int, ring=QQ) -> Polynomial:
        cache = self.__dict__.setdefault("_cache", {})
        key = (ring, n)
        img = cache.get(key)
        if img is None:
            img = cache[key] = self._image(n, ring)
        return img

    def __call__(self, p: Polynomial) -> Polynomial:
        return map_apply(self, p)

    def ring(self):
        """The scalar ring fixed by the map's data, or None if it has none."""
        return self._ring()


@dataclass(frozen=True, eq=False)
class Identity(MapSpec):
    def _image(self, n, ring):
        return Polynomial.monomial(n, 1, ring)

    def __str__(self):
        return "id"


@dataclass(frozen=True, eq=False)
class Zero(MapSpec):
    def _image(self, n, ring):
        return Polynomial.zero(ring)

    def __str__(self):
        return "0"


@dataclass(frozen=True, eq=False)
class Endo(MapSpec):
    """``Y^n -> image^n`` for n >= 1 and ``1 -> image_of_one``.

    With ``image_of_one = 1`` this is the unital algebra endomorphism with
    ``Y -> image``; any other value gives a linear, non-unital map.
    """

    image: Polynomial
    image_of_one: object = None

    def __post_init__(self):
        one = self.image.ring.one if self.image_of_one is None else self.image.ring(self.image_of_one)
        object.__setattr__(self, "image_of_one", one)

    def _ring(self):
        return self.image.ring

    def _image(self, n, ring):
        if n == 0:
            return Polynomial.constant(self.image_of_one, ring)
        if n == 1:
            return self.image
        return self.monomial_image(n - 1, ring) * self.image

    def __str__(self):
        return f"endo(Y -> {self.image})"


@dataclass(frozen=True, eq=False)
class Derivation(MapSpec):
    """Twisted derivation with ``Y -> image``, ``1 -> 0`` and
    ``d(Y^n) = twist(Y) * d(Y^(n-1)) + image * Y^(n-1)``."""

    image: Polynomial
    twist: MapSpec = field(default_factory=lambda: IDENTITY)

    def _ring(self):
        return self.image.ring

    def _image(self, n, ring):
        if n == 0:
            return Polynomial.zero(ring)
        prev = self.monomial_image(n - 1, ring)
        twisted_y = self.twist.monomial_image(1, ring)
        return twisted_y * prev + self.image * Polynomial.monomial(n - 1, 1, ring)

    def __str__(self):
        tw = "" if isinstance(self.twist, Identity) else f", twist={self.twist}"
        return f"deriv(Y -> {self.image}{tw})"


@dataclass(frozen=True, eq=False)
class Scale(MapSpec):
    c: object
    inner: MapSpec

    def _ring(self):
        return self.inner.ring()

    def _image(self, n, ring):
        return self.inner.monomial_image(n, ring).scale(self.c)

    def __str__(self):
        return f"{self.c}*({self.inner})"


@dataclass(frozen=True, eq=False)
class Sum(MapSpec):
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def _ring(self):
        return next((r for r in (t.ring() for t in self.terms) if r is not None), None)

    def _image(self, n, ring):
        out = Polynomial.zero(ring)
        for t in self.terms:
            out = out + t.monomial_image(n, ring)
        return out

    def __str__(self):
        return " + ".join(f"({t})" for t in self.terms) or "0"


@dataclass(frozen=True, eq=False)
class Compose(MapSpec):
    """``Compose((f, g))`` is ``f o g``: ``g`` is applied first."""

    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(self.maps))

    def _ring(self):
        return next((r for r in (m.ring() for m in self.maps) if r is not None), None)

    def _image(self, n, ring):
        p = Polynomial.monomial(n, 1, ring)
        for m in reversed(self.maps):
            p = map_apply(m, p)
        return p

    def __str__(self):
        return " o ".join(str(m) for m in self.maps) or "id"


IDENTITY = Identity()
ZERO = Zero()


def identity() -> MapSpec:
    return IDENTITY


def zero_map() -> MapSpec:
    return ZERO


def endo(image: Polynomial, image_of_one=None) -> Endo:
    return Endo(image, image_of_one)


def derivation(image: Polynomial, twist: MapSpec = IDENTITY) -> Derivation:
    return Derivation(image, twist)


def d_dy(ring=QQ) -> Derivation:
    return Derivation(Polynomial.constant(1, ring))


def map_apply(f: MapSpec, p: Polynomial) -> Polynomial:
    fr = f.ring()
    if fr is not None and fr != p.ring:
        raise RingMismatchError(f"map over {fr} applied to polynomial over {p.ring}")
    ring = p.ring
    coeffs = p.coeffs
    if isinstance(f, Identity):
        return p
    if isinstance(f, Zero) or not coeffs:
        return Polynomial.zero(ring)
    acc: list = []
    for n, c in enumerate(coeffs):
        if not c:
            continue
        img = f.monomial_image(n, ring).coeffs
        if len(img) > len(acc):
            acc.extend([ring.zero] * (len(img) - len(acc)))
        for j, x in enumerate(img):
            if x:
                acc[j] = acc[j] + c * x
    return Polynomial._raw(ring, acc)


def pi_row(m: int, sigma: MapSpec, delta: MapSpec, p: Polynomial) -> list[Polynomial]:
    """``[pi_0^m(p), ..., pi_m^m(p)]`` by the first-letter recurrence

    ``pi_i^m = delta o pi_i^(m-1) + sigma o pi_(i-1)^(m-1)``.
    """
    row = [p]
    for _ in range(m):
        new = []
        for i in range(len(row) + 1):
            acc = None
            if i < len(row):
                acc = map_apply(delta, row[i])
            if i >= 1:
                s = map_apply(sigma, row[i - 1])
                acc = s if acc is None else acc + s
            new.append(acc)
        row = new
    return row


def pi(i: int, m: int, sigma: MapSpec, delta: MapSpec, p: Polynomial) -> Polynomial:
    """Sum of all C(m, i) words in i copies of sigma and m - i copies of delta.

    Zero outside ``0 <= i <= m``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    if i < 0 or i > m:
        return Polynomial.zero(p.ring)
    return pi_row(m, sigma, delta, p)[i]


def pi_enumerated(i: int, m: int, sigma: MapSpec, delta: MapSpec, p: Polynomial) -> Polynomial:
    """Same as :func:`pi`, by explicit enumeration of every composition word."""
    if m < 0:
        raise ValueError("m must be non-negative")
    total = Polynomial.zero(p.ring)
    if i < 0 or i > m:
        return total
    words = 0
    for sigma_slots in combinations(range(m), i):
        q = p
        # slot 0 is the outermost letter, so apply from slot m-1 down
        for slot in reversed(range(m)):
            q = map_apply(sigma if slot in sigma_slots else delta, q)
        total = total + q
        words += 1
    assert words == comb(m, i)
    return total


def _basis(ring, deg_y: int):
    return [Polynomial.monomial(n, 1, ring) for n in range(deg_y + 1)]


def _guess_ring(*maps, ring=None):
    if ring is not None:
        return ring
    for f in maps:
        r = f.ring()
        if r is not None:
            return r
    return QQ


def _require_bound(deg_y: int):
    if not isinstance(deg_y, int) or deg_y < 1:
        raise ValueError("degree bound must be an integer >= 1")


def check_endomorphism(f: MapSpec, deg_y: int, *, unital: bool = True, ring=None) -> Report:
    """f(pq) = f(p) f(q) on monomials of degree <= deg_y, and f(1) = 1 if unital.

    Non-constant pairs are checked first; when ``f(1) = 1`` holds the pairs
    involving 1 follow from it, otherwise they are checked explicitly.
    """
    _require_bound(deg_y)
    ring = _guess_ring(f, ring=ring)
    basis = _basis(ring, deg_y)

    def cases():
        for a in range(1, deg_y + 1):
            for b in range(1, deg_y + 1):
                p, q = basis[a], basis[b]
                yield {"p": p, "q": q}, f(p * q), f(p) * f(q)
        one = basis[0]
        if unital:
            yield {"p": one}, f(one), one
        else:
            for a in range(deg_y + 1):
                p = basis[a]
                yield {"p": one, "q": p}, f(p), f(one) * f(p)
                yield {"p": p, "q": one}, f(p), f(p) * f(one)

    return run_check("endomorphism", cases(), {"deg_y": deg_y})


def check_sigma_derivation(delta: MapSpec, sigma: MapSpec, deg_y: int, *, ring=None) -> Report:
    """delta(ab) = sigma(a) delta(b) + delta(a) b on monomial pairs."""
    _require_bound(deg_y)
    ring = _guess_ring(delta, sigma, ring=ring)
    basis = _basis(ring, deg_y)

    def cases():
        for a in basis:
            for b in basis:
                yield {"a": a, "b": b}, delta(a * b), sigma(a) * delta(b) + delta(a) * b

    return run_check("sigma_derivation", cases(), {"deg_y": deg_y})


def check_commute(f: MapSpec, g: MapSpec, deg_y: int, *, ring=None) -> Report:
    """f(g(p)) = g(f(p)) on monomials of degree <= deg_y."""
    _require_bound(deg_y)
    ring = _guess_ring(f, g, ring=ring)

    def cases():
        for p in _basis(ring, deg_y):
            yield {"p": p}, f(g(p)), g(f(p))

    return run_check("commute", cases(), {"deg_y": deg_y})


def check_maps_equal(f: MapSpec, g: MapSpec, deg_y: int, *, ring=None) -> Report:
    """Extensional equality on monomials of degree <= deg_y."""
    _require_bound(deg_y)
    ring = _guess_ring(f, g, ring=ring)

    def cases():
        for p in _basis(ring, deg_y):
            yield {"p": p}, f(p), g(p)

    return run_check("maps_equal", cases(), {"deg_y": deg_y})
