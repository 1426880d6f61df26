import random

import pytest

from homore.catalog import make_enveloping, make_quantum_plane, make_weyl
from homore.maps import IDENTITY, d_dy, endo
from homore.ore import PLAIN, OreContext, OrePoly
from homore.polynomial import Polynomial
from homore.scalars import QQ, ZZ, IntModRing, RingMismatchError, characteristic
from homore.unitalization import (
    HomAlgebra,
    UnitalizedElement,
    WeakUnitalization,
    beta_alpha,
    bullet_mul,
    check_characteristic,
    check_embedding,
    check_hom_ideal,
    check_unitalization,
)

Y = Polynomial.gen()


def weyl_algebra(k, ring=None):
    return HomAlgebra.from_context(make_weyl(k, ring=ring).ctx)


def E(m, r):
    return UnitalizedElement(m, QQ(r))


def test_bullet_examples():
    alg = weyl_algebra(1)
    m, m2 = OrePoly.basis(1, 1), OrePoly.basis(2, 0)
    assert bullet_mul(alg, E(m, 0), E(m2, 0)) == E(alg.mul(m, m2), 0)
    assert bullet_mul(alg, E(OrePoly.zero(), 1), E(m, 5)) == E(alg.twist(m), 5)
    got = bullet_mul(alg, E(OrePoly.basis(1, 1), 2), E(OrePoly.Y(), 3))
    shifted_y = OrePoly.from_poly(Y + 1)
    expected = alg.mul(OrePoly.basis(1, 1), OrePoly.Y()) + shifted_y.scale(2) + OrePoly.monomial(Y + 1, 1).scale(3)
    assert got == E(expected, 6)
    assert got.m == OrePoly({1: (Y + 1) ** 2 + (Y + 1).scale(3), 0: (Y + 1).scale(3)})


def test_beta_examples():
    alg = weyl_algebra(4)
    assert beta_alpha(alg, E(OrePoly.Y(), 5)) == E(OrePoly.from_poly(Y + 4), 5)
    assert beta_alpha(alg, E(OrePoly.zero(), 7)) == E(OrePoly.zero(), 7)


def test_bullet_ring_mismatch():
    alg = weyl_algebra(1)
    other = UnitalizedElement(OrePoly.Y(IntModRing(5)), 1)
    with pytest.raises(RingMismatchError):
        bullet_mul(alg, other, E(OrePoly.Y(), 0))


@pytest.mark.parametrize("k", [0, 1, -2])
def test_unitalization_weyl(k):
    reports = check_unitalization(weyl_algebra(k), 2, 2, samples=20, seed=k + 10)
    assert [r.name for r in reports] == ["weak_unit", "bullet_hom_associativity",
                                         "beta_multiplicative", "bullet_bilinear"]
    assert all(r.passed for r in reports), [r.summary() for r in reports]


@pytest.mark.parametrize("fam", [make_enveloping(2), make_quantum_plane(2, 3)], ids=["env", "qplane"])
def test_unitalization_other_families(fam):
    assert all(r.passed for r in check_unitalization(HomAlgebra.from_context(fam.ctx), 1, 2, samples=5))


def test_associative_input_gives_unital_algebra():
    alg = HomAlgebra.from_context(OreContext(IDENTITY, d_dy(), IDENTITY, PLAIN))
    u = WeakUnitalization(alg)
    rng = random.Random(0)
    for _ in range(10):
        x = u.sample(rng, 2, 2)
        assert u.mul(u.unit, x) == x == u.mul(x, u.unit)


def test_non_multiplicative_twist_detected():
    # Y -> Y + 1 with 1 -> 2: linear, but not an algebra map
    bad = endo(Y + 1, image_of_one=2)
    ctx = OreContext(IDENTITY, d_dy(), bad, PLAIN)
    alg = HomAlgebra.from_context(ctx)
    reports = {r.name: r for r in check_unitalization(alg, 1, 1, samples=3)}
    assert not reports["beta_multiplicative"].passed


def test_embedding():
    alg = weyl_algebra(2)
    assert check_embedding(alg, 2, 2).passed
    assert check_embedding(HomAlgebra.zero_algebra(), 2, 2).passed
    u = WeakUnitalization(alg)
    m = OrePoly.basis(2, 1)
    assert u.project(u.twist(u.embed(m))) == alg.twist(m) == OrePoly.monomial((Y + 2) ** 2, 1)


def test_hom_ideal():
    alg = weyl_algebra(1)
    assert check_hom_ideal(alg, 2, 2).passed
    u = WeakUnitalization(alg)
    x = u.mul(u.element(OrePoly.Y(), 3), u.embed(OrePoly.X()))
    assert x.r == 0
    assert x.m == alg.mul(OrePoly.Y(), OrePoly.X()) + OrePoly.X().scale(3)
    m = OrePoly.basis(1, 2)
    assert u.mul(u.unit, u.embed(m)) == u.embed(alg.twist(m))


def test_characteristic():
    z6 = IntModRing(6)
    for n in (2, 6):
        alg = weyl_algebra(1, IntModRing(n))
        assert WeakUnitalization(alg).characteristic() == n
        assert characteristic(WeakUnitalization(alg)) == n
        assert check_characteristic(alg, 2, 2).passed
    integral = HomAlgebra.from_context(make_weyl(1).ctx, scalars=ZZ)
    assert characteristic(WeakUnitalization(integral)) == 0
    assert check_characteristic(integral, 1, 1).passed
    assert all(r.passed for r in check_unitalization(weyl_algebra(1, z6), 2, 2))


def test_characteristic_needs_bijective_twist():
    ctx = OreContext(IDENTITY, d_dy(), endo(Polynomial.constant(0)), PLAIN)
    with pytest.raises(ValueError):
        WeakUnitalization(HomAlgebra.from_context(ctx)).characteristic()


def test_element_arithmetic():
    a, b = E(OrePoly.Y(), 2), E(OrePoly.X(), 5)
    assert a + b - b == a
    assert a.scale(3) == E(OrePoly.Y().scale(3), 6)
    assert str(E(OrePoly.zero(), 1)) == "(0, 1)"
