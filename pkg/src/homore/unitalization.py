"""Weak unitalization M (+) R of a multiplicative hom-associative algebra.

The product is ``(m1, r1) . (m2, r2) = (m1 m2 + r1 alpha(m2) + r2 alpha(m1), r1 r2)``
with twist ``beta(m, r) = (alpha(m), r)``; ``(0, 1)`` is a weak unit and
``M (+) 0`` is a copy of M sitting inside as a hom-ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable

from .homcheck import ore_monomials
from .ore import OreContext, OrePoly, random_ore_poly
from .polynomial import Polynomial
from .report import Report, run_check
from .scalars import QQ, RingMismatchError


@dataclass(frozen=True)
class HomAlgebra:
    """A hom-associative algebra M over ``scalars``, given by callables.

    ``basis(deg_x, deg_y)`` lists spanning monomials up to the bounds and
    ``sample(rng, deg_x, deg_y)`` draws a dense random element.
    """

    mul: Callable[[Any, Any], Any]
    twist: Callable[[Any], Any]
    zero: Any
    scalars: Any
    basis: Callable[[int, int], list]
    sample: Callable[[random.Random, int, int], Any]
    twist_bijective: bool | None = None

    @classmethod
    def from_context(cls, ctx: OreContext, scalars=None) -> HomAlgebra:
        """(R[X; sigma, delta], *, alpha) for a star-mode context, plain Ore otherwise."""
        return cls(
            mul=ctx.mul,
            twist=ctx.twist_apply,
            zero=OrePoly.zero(ctx.ring),
            scalars=scalars or ctx.ring,
            basis=lambda dx, dy: ore_monomials(ctx.ring, dx, dy),
            sample=lambda rng, dx, dy: random_ore_poly(rng, ctx.ring, dx, dy),
            twist_bijective=_affine_unit(ctx),
        )

    @classmethod
    def zero_algebra(cls, scalars=QQ) -> HomAlgebra:
        z = OrePoly.zero(scalars)
        return cls(lambda a, b: z, lambda a: z, z, scalars,
                   lambda dx, dy: [z], lambda rng, dx, dy: z, True)

    def scale(self, r, m):
        return m.scale(r)


def _affine_unit(ctx: OreContext) -> bool | None:
    """True when alpha is homogeneous with Y -> aY + b for a unit a; None when unknown."""
    tw = ctx.twist
    if not hasattr(tw, "monomial_image"):
        return None
    img = tw.monomial_image(1, ctx.ring)
    one = tw.monomial_image(0, ctx.ring)
    if img.degree != 1 or one != Polynomial.constant(1, ctx.ring):
        return None
    lead = img.leading_coefficient()
    try:
        return bool(lead * (ctx.ring.one / lead) == ctx.ring.one)
    except (ZeroDivisionError, ValueError, TypeError):
        return None


@dataclass(frozen=True)
class UnitalizedElement:
    m: Any
    r: Any

    def __add__(self, other: UnitalizedElement) -> UnitalizedElement:
        return UnitalizedElement(self.m + other.m, self.r + other.r)

    def __neg__(self) -> UnitalizedElement:
        return UnitalizedElement(-self.m, -self.r)

    def __sub__(self, other: UnitalizedElement) -> UnitalizedElement:
        return self + (-other)

    def scale(self, c) -> UnitalizedElement:
        return UnitalizedElement(self.m.scale(c), c * self.r)

    def __str__(self):
        return f"({self.m}, {self.r})"


def bullet_mul(alg: HomAlgebra, x: UnitalizedElement, y: UnitalizedElement) -> UnitalizedElement:
    for e in (x, y):
        if getattr(e.m, "ring", alg.zero.ring) != alg.zero.ring:
            raise RingMismatchError(f"{e} does not belong to the algebra over {alg.zero.ring}")
    m = alg.mul(x.m, y.m) + alg.scale(x.r, alg.twist(y.m)) + alg.scale(y.r, alg.twist(x.m))
    return UnitalizedElement(m, x.r * y.r)


def beta_alpha(alg: HomAlgebra, x: UnitalizedElement) -> UnitalizedElement:
    return UnitalizedElement(alg.twist(x.m), x.r)


@dataclass(frozen=True)
class WeakUnitalization:
    algebra: HomAlgebra

    @property
    def ring(self):
        return self.algebra.scalars

    def element(self, m=None, r=0) -> UnitalizedElement:
        return UnitalizedElement(self.algebra.zero if m is None else m, self.ring(r))

    @property
    def unit(self) -> UnitalizedElement:
        return self.element(None, 1)

    @property
    def zero(self) -> UnitalizedElement:
        return self.element(None, 0)

    def mul(self, x, y) -> UnitalizedElement:
        return bullet_mul(self.algebra, x, y)

    def twist(self, x) -> UnitalizedElement:
        return beta_alpha(self.algebra, x)

    def embed(self, m) -> UnitalizedElement:
        return self.element(m, 0)

    @staticmethod
    def project(x: UnitalizedElement):
        return x.m

    def characteristic(self) -> int:
        """Same as the base ring's, for an injective or surjective twist.

        Raises ValueError when bijectivity of alpha is not established, since
        nothing is claimed in that case.
        """
        if not self.algebra.twist_bijective:
            raise ValueError("characteristic is only determined for an injective or surjective twist")
        return self.ring.characteristic

    def basis(self, deg_x: int, deg_y: int) -> list[UnitalizedElement]:
        return [self.embed(m) for m in self.algebra.basis(deg_x, deg_y)] + [self.unit]

    def sample(self, rng: random.Random, deg_x: int, deg_y: int) -> UnitalizedElement:
        return self.element(self.algebra.sample(rng, deg_x, deg_y), rng.randint(-5, 5))


def _bounds(deg_x, deg_y, **extra):
    if deg_x < 0 or deg_y < 0:
        raise ValueError("degree bounds must be non-negative")
    return {"deg_x": deg_x, "deg_y": deg_y, **extra}


def check_unitalization(alg: HomAlgebra, deg_x: int, deg_y: int, *, samples: int = 20,
                        seed: int = 0) -> list[Report]:
    """Weak unit, hom-associativity, beta multiplicative and bilinearity of the bullet product.

    Triples run over the basis grid and then over ``samples`` random triples.
    """
    u = WeakUnitalization(alg)
    basis = u.basis(deg_x, deg_y)
    rng = random.Random(seed)
    randoms = [tuple(u.sample(rng, deg_x, deg_y) for _ in range(3)) for _ in range(samples)]
    bounds = _bounds(deg_x, deg_y, samples=samples)
    mul, tw = u.mul, u.twist

    def weak_unit():
        e = u.unit
        for x in basis + [t[0] for t in randoms]:
            yield {"x": x}, mul(e, x), tw(x)
            yield {"x": x}, mul(x, e), tw(x)

    def triples():
        yield from product(basis, repeat=3)
        yield from randoms

    def hom_assoc():
        for x, y, z in triples():
            yield {"x": x, "y": y, "z": z}, mul(tw(x), mul(y, z)), mul(mul(x, y), tw(z))

    def beta_mult():
        for x, y in product(basis, repeat=2):
            yield {"x": x, "y": y}, tw(mul(x, y)), mul(tw(x), tw(y))
        for x, y, _ in randoms:
            yield {"x": x, "y": y}, tw(mul(x, y)), mul(tw(x), tw(y))

    def bilinear():
        for (x, y, z), c in zip(randoms, range(2, 2 + len(randoms))):
            c = u.ring(c)
            yield {"x": x, "y": y, "z": z, "c": c}, mul(x.scale(c) + y, z), mul(x, z).scale(c) + mul(y, z)
            yield {"x": x, "y": y, "z": z, "c": c}, mul(z, x.scale(c) + y), mul(z, x).scale(c) + mul(z, y)

    return [
        run_check("weak_unit", weak_unit(), bounds, seed),
        run_check("bullet_hom_associativity", hom_assoc(), bounds, seed),
        run_check("beta_multiplicative", beta_mult(), bounds, seed),
        run_check("bullet_bilinear", bilinear(), bounds, seed),
    ]


def check_embedding(alg: HomAlgebra, deg_x: int, deg_y: int, *, samples: int = 20, seed: int = 0) -> Report:
    """The projection M (+) 0 -> M is a bijective homomorphism intertwining beta and alpha."""
    u = WeakUnitalization(alg)
    rng = random.Random(seed)
    elems = list(alg.basis(deg_x, deg_y)) + [alg.sample(rng, deg_x, deg_y) for _ in range(samples)]
    pr = u.project

    def cases():
        for m in elems:
            x = u.embed(m)
            yield {"m": m, "route": "section"}, pr(x), m
            yield {"m": m, "route": "twist"}, pr(u.twist(x)), alg.twist(pr(x))
        for m1, m2 in product(elems, repeat=2):
            prod = u.mul(u.embed(m1), u.embed(m2))
            yield {"m": m1, "m'": m2, "route": "product"}, pr(prod), alg.mul(m1, m2)
            yield {"m": m1, "m'": m2, "route": "image"}, prod.r, u.ring.zero

    return run_check("embedding", cases(), _bounds(deg_x, deg_y, samples=samples), seed)


def check_hom_ideal(alg: HomAlgebra, deg_x: int, deg_y: int, *, samples: int = 20, seed: int = 0) -> Report:
    """M (+) 0 absorbs products from both sides and is closed under beta."""
    u = WeakUnitalization(alg)
    rng = random.Random(seed)
    left = u.basis(deg_x, deg_y) + [u.sample(rng, deg_x, deg_y) for _ in range(samples)]
    ideal = [u.embed(m) for m in alg.basis(deg_x, deg_y)]
    zero = u.ring.zero

    def cases():
        for y in ideal:
            yield {"y": y, "side": "twist"}, u.twist(y).r, zero
        for x, y in product(left, ideal):
            yield {"x": x, "y": y, "side": "left"}, u.mul(x, y).r, zero
            yield {"x": x, "y": y, "side": "right"}, u.mul(y, x).r, zero

    return run_check("hom_ideal", cases(), _bounds(deg_x, deg_y, samples=samples), seed)


def check_characteristic(alg: HomAlgebra, deg_x: int, deg_y: int, *, samples: int = 20,
                         seed: int = 0) -> Report:
    """n x = 0 on samples for n = characteristic, and d (0, 1) != 0 for 0 < d < n."""
    u = WeakUnitalization(alg)
    n = u.characteristic()
    rng = random.Random(seed)
    xs = u.basis(deg_x, deg_y) + [u.sample(rng, deg_x, deg_y) for _ in range(samples)]

    def cases():
        if n == 0:
            # no positive multiple kills the unit; spot-check the first few
            for d in range(1, 13):
                yield {"d": d}, u.unit.scale(d) == u.zero, False
            return
        for x in xs:
            yield {"x": x, "n": n}, x.scale(n), u.zero
        for d in range(1, n):
            yield {"d": d}, u.unit.scale(d) == u.zero, False

    return run_check("characteristic", cases(), _bounds(deg_x, deg_y, characteristic=n), seed)
