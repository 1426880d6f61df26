"""Hom-associative quantum planes, enveloping algebras and Weyl algebras.

Each family is the Ore extension K[Y][X; sigma, delta] with the star product
``p * q = alpha(pq)`` for an endomorphism ``alpha`` of K[Y] commuting with
sigma and delta, extended homogeneously.  Parameters may be rationals or
symbolic :class:`~homore.scalars.ParamPoly` values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .maps import IDENTITY, ZERO, Derivation, MapSpec, check_commute, endo, map_apply
from .ore import STAR, OreContext, OrePoly
from .polynomial import Polynomial
from .report import Report, run_check
from .scalars import QQ, ParamPoly, ParamRing

QUANTUM_PLANE = "quantum_plane"
ENVELOPING = "enveloping"
WEYL = "weyl"
FAMILIES = (QUANTUM_PLANE, ENVELOPING, WEYL)


def _ring_of(*params):
    rings = {ParamRing(p.names) for p in params if isinstance(p, ParamPoly)}
    if len(rings) > 1:
        raise ValueError("parameters use different symbol lists")
    return rings.pop() if rings else QQ


@dataclass(frozen=True, eq=False)
class FamilySpec:
    family: str
    params: dict
    ctx: OreContext
    base_relation: str
    generators: tuple = ("X", "Y")
    _relation: object = field(default=None, repr=False)

    @property
    def ring(self):
        return self.ctx.ring

    @property
    def alpha(self) -> MapSpec:
        return self.ctx.twist

    def X(self) -> OrePoly:
        return OrePoly.X(self.ring)

    def Y(self) -> OrePoly:
        return OrePoly.Y(self.ring)

    def one(self) -> OrePoly:
        return OrePoly.one(self.ring)

    def relation(self) -> tuple[OrePoly, OrePoly]:
        """Both sides of the family's commutation relation under the star product."""
        return self._relation(self)

    def check_relation(self) -> Report:
        lhs, rhs = self.relation()
        return run_check(f"{self.family}_relation", [({"relation": self.base_relation}, lhs, rhs)])


def _quantum_relation(fam: FamilySpec):
    # X*Y = kq YX, where YX is the normal-ordered monomial Y X^1
    ctx, X, Y = fam.ctx, fam.X(), fam.Y()
    k, q = fam.params["k"], fam.params["q"]
    yx = OrePoly.basis(1, 1, fam.ring)
    return ctx.star_mul(X, Y), yx.scale(k * q)


def _enveloping_relation(fam: FamilySpec):
    ctx, X, Y = fam.ctx, fam.X(), fam.Y()
    return ctx.commutator(X, Y), Y.scale(fam.params["k"])


def _weyl_relation(fam: FamilySpec):
    ctx, X, Y = fam.ctx, fam.X(), fam.Y()
    return ctx.commutator(X, Y), fam.one()


def _nonzero(name, v):
    if not v:
        raise ValueError(f"{name} must be nonzero")


def make_quantum_plane(q, k) -> FamilySpec:
    """sigma: Y -> qY, delta = 0, alpha_k: Y -> kY."""
    ring = _ring_of(q, k)
    q, k = ring(q), ring(k)
    _nonzero("q", q)
    _nonzero("k", k)
    y = Polynomial.gen(ring)
    ctx = OreContext(endo(y.scale(q)), ZERO, endo(y.scale(k)), STAR, ring)
    return FamilySpec(QUANTUM_PLANE, {"q": q, "k": k}, ctx, "X*Y = k*q*YX", _relation=_quantum_relation)


def make_enveloping(k) -> FamilySpec:
    """sigma = id, delta = Y d/dY, alpha_k: Y -> kY."""
    ring = _ring_of(k)
    k = ring(k)
    _nonzero("k", k)
    y = Polynomial.gen(ring)
    ctx = OreContext(IDENTITY, Derivation(y), endo(y.scale(k)), STAR, ring)
    return FamilySpec(ENVELOPING, {"k": k}, ctx, "X*Y - Y*X = k*Y", _relation=_enveloping_relation)


def make_weyl(k, ring=None) -> FamilySpec:
    """sigma = id, delta = d/dY, alpha_k: Y -> Y + k; k = 0 is the classical Weyl algebra.

    ``ring`` overrides the scalar ring, e.g. Z/n for unitalization experiments.
    """
    ring = ring or _ring_of(k)
    k = ring(k)
    y = Polynomial.gen(ring)
    one = Polynomial.constant(1, ring)
    ctx = OreContext(IDENTITY, Derivation(one), endo(y + k), STAR, ring)
    return FamilySpec(WEYL, {"k": k}, ctx, "X*Y - Y*X = 1", _relation=_weyl_relation)


def make_family(name: str, **params) -> FamilySpec:
    if name == QUANTUM_PLANE:
        return make_quantum_plane(params["q"], params["k"])
    if name == ENVELOPING:
        return make_enveloping(params["k"])
    if name == WEYL:
        return make_weyl(params["k"])
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


@dataclass
class Classification:
    image: Polynomial
    admitted: bool
    reports: list

    def __bool__(self):
        return self.admitted


def endomorphism_classifier(family: FamilySpec, candidate_alpha_image: Polynomial, deg_y: int = 6) -> Classification:
    """Does the endomorphism Y -> image commute with the family's sigma and delta?

    Only checked on monomials up to ``deg_y``.
    """
    ring = family.ring
    alpha = endo(candidate_alpha_image)
    reports = [
        check_commute(alpha, family.ctx.sigma, deg_y, ring=ring),
        check_commute(alpha, family.ctx.delta, deg_y, ring=ring),
    ]
    reports[0].name, reports[1].name = "commutes_with_sigma", "commutes_with_delta"
    return Classification(candidate_alpha_image, all(r.passed for r in reports), reports)


class ReductionError(RuntimeError):
    """The commutator descent did not reach 1 within the step budget."""


@dataclass
class ReductionTrace:
    """Every intermediate element of the descent from ``initial`` to 1."""

    k: object
    initial: OrePoly
    steps: list = field(default_factory=list)
    x_steps: int = 0
    y_steps: int = 0
    y_degree: int = 0
    x_degree: int = 0

    def __len__(self):
        return len(self.steps)

    @property
    def final(self) -> OrePoly:
        return self.steps[-1][1] if self.steps else self.initial

    def verify(self) -> bool:
        """Recompute every step independently from its predecessor."""
        fam = make_weyl(self.k)
        ctx, X, Y = fam.ctx, fam.X(), fam.Y()
        cur = self.initial
        for label, value in self.steps:
            if label == "[X, .]":
                nxt = ctx.commutator(X, cur)
            elif label == "[., Y]":
                nxt = ctx.commutator(cur, Y)
            else:
                c = cur.coefficient(0).leading_coefficient()
                nxt = ctx.star_mul(OrePoly.one(ctx.ring).scale(1 / c), cur)
            if nxt != value:
                return False
            cur = nxt
        return cur == OrePoly.one(ctx.ring)

    def lines(self) -> list[str]:
        out = [f"start        {self.initial}"]
        out += [f"{label:12} {value}" for label, value in self.steps]
        return out


def simplicity_reduce(k, p: OrePoly, max_steps: int) -> ReductionTrace:
    """Reduce a nonzero element of the hom-associative Weyl algebra to 1.

    Commutators with X lower every coefficient's Y-degree by one, so after m
    steps (m the largest Y-degree) all coefficients are scalars; commutators
    with Y then lower the X-degree n times down to a nonzero scalar c, and
    ``c^-1 * c = alpha(1) = 1``.  Needs a concrete rational k.
    """
    if isinstance(k, ParamPoly):
        raise TypeError("simplicity_reduce needs a concrete rational k")
    if p.is_zero():
        raise ValueError("cannot reduce the zero element")
    fam = make_weyl(k)
    ctx, X, Y = fam.ctx, fam.X(), fam.Y()
    if p.ring != ctx.ring:
        p = OrePoly({n: Polynomial(a.coeffs, ctx.ring) for n, a in p.terms.items()}, ctx.ring)
    trace = ReductionTrace(fam.params["k"], p, y_degree=p.y_degree())

    def step(label, value):
        if len(trace.steps) >= max_steps:
            raise ReductionError(f"step budget {max_steps} exhausted after {len(trace.steps)} steps")
        trace.steps.append((label, value))
        return value

    cur = p
    while cur.y_degree() > 0:
        cur = step("[X, .]", ctx.commutator(X, cur))
        trace.x_steps += 1
    trace.x_degree = cur.degree
    for _ in range(cur.degree):
        cur = step("[., Y]", ctx.commutator(cur, Y))
        trace.y_steps += 1
    c = cur.coefficient(0).leading_coefficient()
    inv = OrePoly.one(ctx.ring).scale(1 / c)
    cur = step("c^-1 * .", ctx.star_mul(inv, cur))
    if cur != OrePoly.one(ctx.ring):
        raise ReductionError(f"descent ended at {cur}, not 1")
    return trace


def regenerate(k, target: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Preimage ``sum_i q_i(Y - k) X^i`` and its left star product with 1."""
    fam = make_weyl(k)
    ring = fam.ring
    shift = Polynomial.gen(ring) - fam.params["k"]
    pre = target.map_coefficients(lambda a: a.substitute(shift))
    return pre, fam.ctx.star_mul(fam.one(), pre)


def check_star_sigma_derivation(family: FamilySpec, deg_y: int) -> list[Report]:
    """Within (K[Y], *, alpha): sigma(a*b) = sigma(a)*sigma(b) and
    delta(a*b) = sigma(a)*delta(b) + delta(a)*b."""
    ctx = family.ctx
    ring = family.ring
    star = ctx.coefficient_product
    s = lambda x: map_apply(ctx.sigma, x)  # noqa: E731
    d = lambda x: map_apply(ctx.delta, x)  # noqa: E731
    ys = [Polynomial.monomial(j, 1, ring) for j in range(deg_y + 1)]

    def sigma_cases():
        for a in ys:
            for b in ys:
                yield {"a": a, "b": b}, s(star(a, b)), star(s(a), s(b))

    def delta_cases():
        for a in ys:
            for b in ys:
                yield {"a": a, "b": b}, d(star(a, b)), star(s(a), d(b)) + star(d(a), b)

    bounds = {"deg_y": deg_y}
    return [run_check("star_sigma_endomorphism", sigma_cases(), bounds),
            run_check("star_sigma_derivation", delta_cases(), bounds)]
