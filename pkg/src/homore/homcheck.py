"""Bounded verifiers for hom-associativity of Ore extensions.

Every check runs over the monomial basis up to explicit bounds.  The identities
are multilinear in their ring arguments and the twisting maps are linear, so a
pass on all basis monomials up to the bound is a pass on the whole truncated
space; nothing is claimed beyond the bound.

Coefficient products on R are either the polynomial product (``base_twist`` is
None) or the star product ``a * b = base_twist(a b)``.  The latter is the ring
whose Ore extension carries the star multiplication of an ``OreContext`` in
``star`` mode.
"""

from __future__ import annotations

import random
from itertools import chain

from .maps import IDENTITY, ZERO, MapSpec, check_commute, check_endomorphism, check_maps_equal, map_apply, pi, pi_row
from .ore import STAR, OreContext, OrePoly, WindowExceeded, random_ore_poly, twist_apply
from .polynomial import Polynomial
from .report import Report, run_check
from .scalars import QQ


class TwistTable:
    """Degree-windowed twisting map ``alpha(aX^m) = sum_i alpha_{i+1,m+1}(a) X^i``.

    ``entries`` maps ``(i + 1, m + 1)`` to a map on R for ``i <= max_i`` and
    ``m <= max_m``; missing entries and everything outside the window are zero.
    """

    def __init__(self, window: tuple[int, int], entries: dict | None = None):
        max_i, max_m = window
        if max_i < 0 or max_m < 0:
            raise ValueError("window must be non-negative")
        self.window = (max_i, max_m)
        self.entries: dict[tuple[int, int], MapSpec] = {}
        for (i1, m1), f in (entries or {}).items():
            if not (1 <= i1 <= max_i + 1 and 1 <= m1 <= max_m + 1):
                raise WindowExceeded(f"entry ({i1}, {m1}) outside window {self.window}")
            self.entries[(i1, m1)] = f

    @classmethod
    def homogeneous(cls, alpha: MapSpec, window: tuple[int, int]) -> TwistTable:
        """``alpha_{i+1,m+1} = alpha`` if ``i == m`` else 0."""
        max_i, max_m = window
        if max_i < max_m:
            raise ValueError("a homogeneous table needs max_i >= max_m")
        return cls(window, {(m + 1, m + 1): alpha for m in range(max_m + 1)})

    @property
    def max_i(self) -> int:
        return self.window[0]

    @property
    def max_m(self) -> int:
        return self.window[1]

    def entry(self, i1: int, m1: int) -> MapSpec:
        return self.entries.get((i1, m1), ZERO)

    def apply_entry(self, i1: int, m1: int, a: Polynomial) -> Polynomial:
        return map_apply(self.entry(i1, m1), a)

    def image(self, a: Polynomial, m: int) -> dict[int, Polynomial]:
        """X-degree -> coefficient of ``alpha(a X^m)``."""
        if m > self.max_m:
            raise WindowExceeded(f"X-degree {m} beyond table window {self.window}")
        out = {}
        for i in range(self.max_i + 1):
            c = self.apply_entry(i + 1, m + 1, a)
            if c:
                out[i] = c
        return out

    def top_index(self, p: int, a: Polynomial) -> int:
        """I_{p,a}: least I with ``alpha_{i+1,p+1}(a) = 0`` for all ``i > I``."""
        top = 0
        for i in range(self.max_i + 1):
            if self.apply_entry(i + 1, p + 1, a):
                top = i
        return top


def _product(base_twist: MapSpec | None):
    if base_twist is None:
        return lambda a, b: a * b
    return lambda a, b: map_apply(base_twist, a * b)


def base_twist_of(ctx: OreContext) -> MapSpec | None:
    return ctx.twist if ctx.mode == STAR else None


def ore_monomials(ring, deg_x: int, deg_y: int) -> list[OrePoly]:
    """``Y^j X^m`` ordered by X-degree, then Y-degree."""
    return [OrePoly.basis(j, m, ring) for m in range(deg_x + 1) for j in range(deg_y + 1)]


def _y_monomials(ring, deg_y: int) -> list[Polynomial]:
    return [Polynomial.monomial(j, 1, ring) for j in range(deg_y + 1)]


def _require_bounds(*bounds):
    for b in bounds:
        if not isinstance(b, int) or b < 1:
            raise ValueError("degree bounds must be integers >= 1")


def check_hom_associativity(ctx: OreContext, deg_x: int, deg_y: int, *, triples=None) -> Report:
    """alpha(a)(bc) = (ab)alpha(c) for all monomial triples up to the bounds.

    With ``triples`` given, exactly those triples are checked instead.
    """
    if triples is None:
        _require_bounds(deg_x, deg_y)
        monos = ore_monomials(ctx.ring, deg_x, deg_y)
        triples_iter = ((a, b, c) for a in monos for b in monos for c in monos)
        bounds = {"deg_x": deg_x, "deg_y": deg_y}
    else:
        triples_iter = iter(triples)
        bounds = {"triples": len(triples)}
    twisted: dict = {}
    products: dict = {}

    def tw(x):
        if x not in twisted:
            twisted[x] = twist_apply(ctx, x)
        return twisted[x]

    def mul(x, y):
        key = (x, y)
        if key not in products:
            products[key] = ctx.mul(x, y)
        return products[key]

    def cases():
        for a, b, c in triples_iter:
            lhs = ctx.mul(tw(a), mul(b, c))
            rhs = ctx.mul(mul(a, b), tw(c))
            yield {"a": a, "b": b, "c": c}, lhs, rhs

    return run_check("hom_associativity", cases(), bounds)


def check_general_condition(sigma: MapSpec, delta: MapSpec, table: TwistTable, deg_x: int, deg_y: int,
                            *, base_twist: MapSpec | None = None, ring=QQ) -> Report:
    """Coefficientwise hom-associativity for a table twist, by direct double sums.

    For monomials a, b, c of R and X-degrees m, n, p <= deg_x, compares for
    every X-degree k that either side can reach

        sum_j sum_i alpha_{i+1,m+1}(a) pi^i_{k-j}(b pi^n_{j-p}(c))
        sum_j sum_i (a pi^m_i(b)) pi^{i+n}_{k-j}(alpha_{j+1,p+1}(c)).
    """
    _require_bounds(deg_x, deg_y)
    if table.max_m < deg_x:
        raise WindowExceeded(f"table window {table.window} does not cover X-degree {deg_x}")
    mul = _product(base_twist)
    max_i = table.max_i
    rows: dict = {}

    def row(m, p):
        key = (m, p)
        if key not in rows:
            rows[key] = pi_row(m, sigma, delta, p)
        return rows[key]

    def pi_(i, m, p):
        if i < 0 or i > m:
            return Polynomial.zero(ring)
        return row(m, p)[i]

    ys = _y_monomials(ring, deg_y)

    def cases():
        for a in ys:
            for b in ys:
                for c in ys:
                    for m in range(deg_x + 1):
                        alpha_a = [table.apply_entry(i + 1, m + 1, a) for i in range(max_i + 1)]
                        for n in range(deg_x + 1):
                            for p in range(deg_x + 1):
                                inner = {j: mul(b, pi_(j - p, n, c)) for j in range(p, p + n + 1)}
                                alpha_c = [table.apply_entry(j + 1, p + 1, c) for j in range(max_i + 1)]
                                left_factor = [mul(a, pi_(i, m, b)) for i in range(m + 1)]
                                for k in range(max_i + n + max(m, p) + 1):
                                    lhs = Polynomial.zero(ring)
                                    for j, bc in inner.items():
                                        for i in range(max_i + 1):
                                            if alpha_a[i] and 0 <= k - j <= i:
                                                lhs = lhs + mul(alpha_a[i], pi_(k - j, i, bc))
                                    rhs = Polynomial.zero(ring)
                                    for j in range(max_i + 1):
                                        if not alpha_c[j]:
                                            continue
                                        for i in range(m + 1):
                                            if 0 <= k - j <= i + n:
                                                rhs = rhs + mul(left_factor[i], pi_(k - j, i + n, alpha_c[j]))
                                    yield {"a": a, "b": b, "c": c, "k": k, "m": m, "n": n, "p": p}, lhs, rhs

    return run_check("general_condition", cases(), {"deg_x": deg_x, "deg_y": deg_y, "window": table.window})


def check_necessary_conditions(sigma: MapSpec, delta: MapSpec, table: TwistTable, deg_y: int,
                               *, base_twist: MapSpec | None = None, ring=QQ) -> list[Report]:
    """The m, n in {0, 1} consequences of the general condition, plus the two
    assertions on top indices.  k ranges over ``0..max_i`` and p over ``0..max_m``.

    In the shifted identities every first-column factor is ``alpha_{i+1,1}(a) . pi(...)``.
    """
    _require_bounds(deg_y)
    if table.max_m < 1:
        raise WindowExceeded("necessary conditions need table entries for X-degree 1")
    mul = _product(base_twist)
    A = table.apply_entry
    I = table.top_index
    ys = _y_monomials(ring, deg_y)
    max_i, max_m = table.window
    zero = Polynomial.zero(ring)

    def P(i, m, x):
        return pi(i, m, sigma, delta, x)

    def grid():
        for a in ys:
            for b in ys:
                for c in ys:
                    for p in range(max_m + 1):
                        for k in range(max_i + 1):
                            yield a, b, c, k, p

    def total(terms):
        out = zero
        for t in terms:
            out = out + t
        return out

    def first_column():
        for a, b, c, k, p in grid():
            lhs = total(mul(A(i + 1, 1, a), P(k - p, i, mul(b, c)))
                        for i in range(max(k - p, 0), I(0, a) + 1))
            yield {"a": a, "b": b, "c": c, "k": k, "p": p}, lhs, mul(mul(a, b), A(k + 1, p + 1, c))

    def shift_lhs(a, b, c, k, p):
        s1 = total(mul(A(i + 1, 1, a), P(k - p - 1, i, mul(b, map_apply(sigma, c))))
                   for i in range(max(k - p - 1, 0), I(0, a) + 1))
        s2 = total(mul(A(i + 1, 1, a), P(k - p, i, mul(b, map_apply(delta, c))))
                   for i in range(max(k - p, 0), I(0, a) + 1))
        return s1 + s2

    def shift_mid(a, b, c, k, p):
        return mul(mul(a, b), map_apply(delta, A(k + 1, p + 1, c)) + map_apply(sigma, A(k, p + 1, c)))

    def shift_right(a, b, c, k, p):
        return mul(mul(a, b), A(k + 1, p + 1, map_apply(delta, c)) + A(k, p + 1, map_apply(sigma, c)))

    def shift_first():
        for a, b, c, k, p in grid():
            yield {"a": a, "b": b, "c": c, "k": k, "p": p}, shift_lhs(a, b, c, k, p), shift_mid(a, b, c, k, p)

    def shift_second():
        for a, b, c, k, p in grid():
            yield {"a": a, "b": b, "c": c, "k": k, "p": p}, shift_mid(a, b, c, k, p), shift_right(a, b, c, k, p)

    def second_column():
        for a, b, c, k, p in grid():
            lhs = total(mul(A(i + 1, 2, a), P(k - p, i, mul(b, c)))
                        for i in range(max(k - p, 0), I(1, a) + 1))
            rhs = (mul(mul(a, map_apply(sigma, b)),
                       map_apply(delta, A(k + 1, p + 1, c)) + map_apply(sigma, A(k, p + 1, c)))
                   + mul(mul(a, map_apply(delta, b)), A(k + 1, p + 1, c)))
            yield {"a": a, "b": b, "c": c, "k": k, "p": p}, lhs, rhs

    def assertion1():
        for a in ys:
            for b in ys:
                for c in ys:
                    for p in range(max_m + 1):
                        top = max(I(p, c), I(p, map_apply(delta, c)))
                        ab = mul(a, b)
                        yield ({"a": a, "b": b, "c": c, "p": p, "I": top},
                               mul(ab, map_apply(sigma, A(top + 1, p + 1, c))),
                               mul(ab, A(top + 1, p + 1, map_apply(sigma, c))))

    def assertion2():
        for a in ys:
            for b in ys:
                for c in ys:
                    ab = mul(a, b)
                    dc = map_apply(delta, c)
                    for p in range(max_m + 1):
                        first = mul(ab, map_apply(delta, A(1, p + 1, c)))
                        second = mul(ab, A(1, p + 1, dc))
                        yield {"a": a, "b": b, "c": c, "p": p, "part": "first"}, first, second
                        if p == 0:
                            for j in range(min(max_i, max_m) + 1):
                                yield ({"a": a, "b": b, "c": c, "p": p, "j": j, "part": "p=0"},
                                       second, mul(ab, A(j + 1, j + 1, dc)))
                        else:
                            yield {"a": a, "b": b, "c": c, "p": p, "part": "p>0"}, second, zero

    bounds = {"deg_y": deg_y, "window": table.window}
    return [
        run_check("necessary_first_column", first_column(), bounds),
        run_check("necessary_shift_first", shift_first(), bounds),
        run_check("necessary_shift_second", shift_second(), bounds),
        run_check("necessary_second_column", second_column(), bounds),
        run_check("assertion1", assertion1(), bounds),
        run_check("assertion2", assertion2(), bounds),
    ]


def check_homogeneous_corollaries(sigma: MapSpec, delta: MapSpec, alpha: MapSpec, deg_y: int,
                                  *, base_twist: MapSpec | None = None, ring=QQ) -> list[Report]:
    """The four identities forced on (sigma, delta, alpha) by a homogeneous twist."""
    _require_bounds(deg_y)
    mul = _product(base_twist)
    ys = _y_monomials(ring, deg_y)
    s = lambda x: map_apply(sigma, x)  # noqa: E731
    d = lambda x: map_apply(delta, x)  # noqa: E731
    al = lambda x: map_apply(alpha, x)  # noqa: E731

    def triples():
        for a in ys:
            for b in ys:
                for c in ys:
                    yield a, b, c

    def delta_commutes():
        for a, b, c in triples():
            yield {"a": a, "b": b, "c": c}, mul(mul(a, b), d(al(c))), mul(mul(a, b), al(d(c)))

    def sigma_commutes():
        for a, b, c in triples():
            yield {"a": a, "b": b, "c": c}, mul(mul(a, b), s(al(c))), mul(mul(a, b), al(s(c)))

    def sigma_derivation():
        for a, b, c in triples():
            yield ({"a": a, "b": b, "c": c}, mul(al(a), d(mul(b, c))),
                   mul(al(a), mul(d(b), c) + mul(s(b), d(c))))

    def sigma_multiplicative():
        for a, b, c in triples():
            yield {"a": a, "b": b, "c": c}, mul(al(a), s(mul(b, c))), mul(al(a), mul(s(b), s(c)))

    bounds = {"deg_y": deg_y}
    return [
        run_check("delta_commutes_under_product", delta_commutes(), bounds),
        run_check("sigma_commutes_under_product", sigma_commutes(), bounds),
        run_check("sigma_derivation_under_product", sigma_derivation(), bounds),
        run_check("sigma_multiplicative_under_product", sigma_multiplicative(), bounds),
    ]


def check_pi_sum_condition(sigma: MapSpec, delta: MapSpec, alpha: MapSpec, deg_x: int, deg_y: int,
                           *, base_twist: MapSpec | None = None, ring=QQ) -> Report:
    """Homogeneous-twist criterion, for m, n <= deg_x and every reachable l:

        sum_i alpha(a) pi^m_i(b pi^n_{l-i}(c)) = sum_i (a pi^m_i(b)) pi^{i+n}_l(alpha(c)).
    """
    _require_bounds(deg_x, deg_y)
    mul = _product(base_twist)
    ys = _y_monomials(ring, deg_y)
    zero = Polynomial.zero(ring)

    def P(i, m, x):
        return pi(i, m, sigma, delta, x)

    def cases():
        for a in ys:
            alpha_a = map_apply(alpha, a)
            for b in ys:
                for c in ys:
                    alpha_c = map_apply(alpha, c)
                    for m in range(deg_x + 1):
                        for n in range(deg_x + 1):
                            c_row = pi_row(n, sigma, delta, c)
                            for l in range(m + n + 1):
                                lhs = zero
                                for i in range(m + 1):
                                    if 0 <= l - i <= n:
                                        lhs = lhs + mul(alpha_a, P(i, m, mul(b, c_row[l - i])))
                                rhs = zero
                                for i in range(m + 1):
                                    if l <= i + n:
                                        rhs = rhs + mul(mul(a, P(i, m, b)), P(l, i + n, alpha_c))
                                yield {"a": a, "b": b, "c": c, "l": l, "m": m, "n": n}, lhs, rhs

    return run_check("pi_sum_condition", cases(), {"deg_x": deg_x, "deg_y": deg_y})


def check_assoc_identity(sigma: MapSpec, delta: MapSpec, bound: int, deg_y: int, *, ring=QQ) -> Report:
    """sum_i pi^m_i(b pi^n_{l-i}(c)) = sum_i pi^m_i(b) pi^{i+n}_l(c) for l, m, n <= bound."""
    _require_bounds(bound, deg_y)
    ys = _y_monomials(ring, deg_y)
    zero = Polynomial.zero(ring)

    def cases():
        for b in ys:
            for c in ys:
                for m in range(bound + 1):
                    b_row = pi_row(m, sigma, delta, b)
                    for n in range(bound + 1):
                        c_row = pi_row(n, sigma, delta, c)
                        for l in range(bound + 1):
                            lhs = zero
                            for i in range(m + 1):
                                if 0 <= l - i <= n:
                                    lhs = lhs + pi(i, m, sigma, delta, b * c_row[l - i])
                            rhs = zero
                            for i in range(m + 1):
                                rhs = rhs + b_row[i] * pi(l, i + n, sigma, delta, c)
                            yield {"b": b, "c": c, "l": l, "m": m, "n": n}, lhs, rhs

    return run_check("assoc_identity", cases(), {"bound": bound, "deg_y": deg_y})


def check_endo_extension(gamma: MapSpec, sigma: MapSpec, delta: MapSpec, deg_x: int, deg_y: int,
                         *, ring=QQ) -> Report:
    """gamma(a) pi^m_i(gamma(b)) = gamma(a) gamma(pi^m_i(b)), then the homogeneous
    extension of gamma is checked to be multiplicative for the plain Ore product."""
    _require_bounds(deg_x, deg_y)
    pre = check_endomorphism(gamma, deg_y, ring=ring)
    if not pre.passed:
        raise ValueError(f"gamma is not an endomorphism of R: {pre.summary()}")
    ys = _y_monomials(ring, deg_y)
    g = lambda x: map_apply(gamma, x)  # noqa: E731
    ctx = OreContext(sigma, delta, gamma, "plain", ring)

    def coefficientwise():
        for a in ys:
            ga = g(a)
            for b in ys:
                for m in range(deg_x + 1):
                    row = pi_row(m, sigma, delta, b)
                    grow = pi_row(m, sigma, delta, g(b))
                    for i in range(m + 1):
                        yield {"a": a, "b": b, "i": i, "m": m}, ga * grow[i], ga * g(row[i])

    def multiplicative():
        monos = ore_monomials(ring, deg_x, deg_y)
        for p in monos:
            for q in monos:
                yield ({"p": p, "q": q}, twist_apply(ctx, ctx.ore_mul(p, q)),
                       ctx.ore_mul(twist_apply(ctx, p), twist_apply(ctx, q)))

    return run_check("endo_extension", chain(coefficientwise(), multiplicative()),
                     {"deg_x": deg_x, "deg_y": deg_y})


def _as_ore(e, ring) -> OrePoly:
    if isinstance(e, OrePoly):
        return e
    if isinstance(e, Polynomial):
        return OrePoly.from_poly(e)
    return OrePoly.from_poly(Polynomial.constant(e, ring))


def check_weak_unit(ctx: OreContext, candidate, deg_x: int, deg_y: int) -> Report:
    """e p = p e = alpha(p) for every monomial p up to the bounds."""
    _require_bounds(deg_x, deg_y)
    e = _as_ore(candidate, ctx.ring)

    def cases():
        for p in ore_monomials(ctx.ring, deg_x, deg_y):
            ap = twist_apply(ctx, p)
            yield {"e": e, "p": p, "side": "left"}, ctx.mul(e, p), ap
            yield {"e": e, "p": p, "side": "right"}, ctx.mul(p, e), ap

    return run_check("weak_unit", cases(), {"deg_x": deg_x, "deg_y": deg_y})


def check_weak_unit_lemma(ctx: OreContext, e, deg_x: int, deg_y: int, *, samples: int = 0,
                          seed: int = 0) -> list[Report]:
    """Three consequences of a weak unit e of R for R[X; id, delta]:

    (i)   a delta^n(e) = delta^n(e) a = 0 for n >= 1,
    (ii)  e is a weak unit of the Ore extension,
    (iii) eX q - q eX = sum_i alpha(delta(q_i)) X^i,

    where products on R are the ones induced by the context's mode.  (iii) runs
    on all monomials plus ``samples`` seeded random elements.
    """
    _require_bounds(deg_x, deg_y)
    ring = ctx.ring
    if not isinstance(ctx.twist, MapSpec):
        raise ValueError("the lemma needs a homogeneous twist")
    e = e if isinstance(e, Polynomial) else Polynomial.constant(e, ring)
    alpha = ctx.twist
    mul = ctx.coefficient_product
    if not check_maps_equal(ctx.sigma, IDENTITY, deg_y, ring=ring).passed:
        raise ValueError("the lemma needs sigma = id")
    if not check_commute(alpha, ctx.delta, deg_y, ring=ring).passed:
        raise ValueError("the lemma needs alpha to commute with delta")
    ys = _y_monomials(ring, deg_y)
    for a in ys:
        if not (mul(e, a) == mul(a, e) == map_apply(alpha, a)):
            raise ValueError(f"{e} is not a weak unit of R (fails at {a})")

    def part_i():
        de = e
        for n in range(1, max(deg_x, deg_y) + 1):
            de = map_apply(ctx.delta, de)
            for a in ys:
                z = Polynomial.zero(ring)
                yield {"a": a, "n": n, "side": "left"}, mul(a, de), z
                yield {"a": a, "n": n, "side": "right"}, mul(de, a), z

    rng = random.Random(seed)
    qs = ore_monomials(ring, deg_x, deg_y) + [random_ore_poly(rng, ring, deg_x, deg_y) for _ in range(samples)]
    ex = OrePoly.monomial(e, 1)

    def part_iii():
        for q in qs:
            lhs = ctx.mul(ex, q) - ctx.mul(q, ex)
            rhs = q.map_coefficients(lambda c: map_apply(alpha, map_apply(ctx.delta, c)))
            yield {"q": q}, lhs, rhs

    bounds = {"deg_x": deg_x, "deg_y": deg_y}
    unit = check_weak_unit(ctx, e, deg_x, deg_y)
    unit.name = "weak_unit_lemma_ii"
    return [
        run_check("weak_unit_lemma_i", part_i(), bounds),
        unit,
        run_check("weak_unit_lemma_iii", part_iii(), {**bounds, "samples": samples}, seed=seed),
    ]


def check_multiplicative_from_fixed_unit(ctx: OreContext, e, deg_x: int, deg_y: int) -> Report:
    """Given a weak unit e with alpha(e) = e, confirm alpha(pq) = alpha(p) alpha(q)."""
    _require_bounds(deg_x, deg_y)
    e = _as_ore(e, ctx.ring)
    unit = check_weak_unit(ctx, e, deg_x, deg_y)
    if not unit.passed:
        raise ValueError(f"{e} is not a weak unit: {unit.summary()}")
    if twist_apply(ctx, e) != e:
        raise ValueError(f"alpha does not fix {e}")
    monos = ore_monomials(ctx.ring, deg_x, deg_y)

    def cases():
        for p in monos:
            for q in monos:
                yield ({"p": p, "q": q}, twist_apply(ctx, ctx.mul(p, q)),
                       ctx.mul(twist_apply(ctx, p), twist_apply(ctx, q)))

    return run_check("multiplicative_from_fixed_unit", cases(), {"deg_x": deg_x, "deg_y": deg_y})
