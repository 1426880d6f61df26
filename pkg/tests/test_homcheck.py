import random
from fractions import Fraction

import pytest

from homore.catalog import make_enveloping, make_quantum_plane, make_weyl
from homore.homcheck import (
    TwistTable,
    check_assoc_identity,
    check_endo_extension,
    check_general_condition,
    check_hom_associativity,
    check_homogeneous_corollaries,
    check_multiplicative_from_fixed_unit,
    check_necessary_conditions,
    check_pi_sum_condition,
    check_weak_unit,
    check_weak_unit_lemma,
)
from homore.maps import (
    IDENTITY,
    ZERO,
    Derivation,
    Scale,
    Sum,
    check_commute,
    check_endomorphism,
    check_sigma_derivation,
    d_dy,
    endo,
)
from homore.ore import PLAIN, STAR, OreContext, OrePoly, WindowExceeded
from homore.polynomial import Polynomial
from homore.scalars import QQ

Y = Polynomial.gen()
X1, Y1 = OrePoly.X(), OrePoly.Y()


def hom_weyl(k):
    return make_weyl(k).ctx


def test_hom_weyl_regression():
    rep = check_hom_associativity(hom_weyl(QQ(Fraction(3, 2))), 3, 3)
    assert rep.passed and rep.cases == 16**3


def test_associative_weyl_passes():
    assert check_hom_associativity(OreContext(IDENTITY, d_dy(), IDENTITY, PLAIN), 2, 2).passed


def test_plain_quantum_plane_fails_at_witness():
    q, k = QQ(2), QQ(3)
    ctx = make_quantum_plane(q, k).ctx.with_mode(PLAIN)
    grid = check_hom_associativity(ctx, 2, 2)
    assert not grid.passed
    rep = check_hom_associativity(ctx, 2, 2, triples=[(X1, Y1, Y1)])
    ce = rep.counterexample
    assert ce["lhs"] == OrePoly.basis(2, 1).scale(q**2)
    assert ce["rhs"] == OrePoly.basis(2, 1).scale(k * q**2)


def test_counterexample_sides_differ():
    ctx = make_weyl(2).ctx.with_mode(PLAIN)
    rep = check_hom_associativity(ctx, 1, 1)
    assert not rep.passed
    ce = rep.counterexample
    assert ce["lhs"] != ce["rhs"]
    a, b, c = ce["inputs"]["a"], ce["inputs"]["b"], ce["inputs"]["c"]
    assert ctx.mul(ctx.twist_apply(a), ctx.mul(b, c)) == ce["lhs"]


def test_monotonicity():
    for fam in (make_weyl(-2), make_enveloping(3)):
        assert check_hom_associativity(fam.ctx, 2, 2).passed
        assert check_hom_associativity(fam.ctx, 1, 1).passed


# -- general condition ---------------------------------------------------------


def test_general_condition_homogeneous_weyl():
    fam = make_weyl(2)
    c = fam.ctx
    table = TwistTable.homogeneous(c.twist, (2, 2))
    assert check_general_condition(c.sigma, c.delta, table, 2, 2, base_twist=c.twist).passed


def test_general_condition_zero_table():
    assert check_general_condition(IDENTITY, d_dy(), TwistTable((2, 2)), 2, 2).passed


def test_general_condition_truncated_identity_fails():
    table = TwistTable((2, 2), {(1, 1): IDENTITY})
    rep = check_general_condition(IDENTITY, d_dy(), table, 2, 2)
    assert not rep.passed
    assert set(rep.counterexample["inputs"]) == {"a", "b", "c", "k", "m", "n", "p"}


def test_window_errors():
    with pytest.raises(WindowExceeded):
        TwistTable((1, 1), {(3, 1): IDENTITY})
    with pytest.raises(WindowExceeded):
        check_general_condition(IDENTITY, d_dy(), TwistTable((1, 1)), 2, 1)
    with pytest.raises(WindowExceeded):
        TwistTable((1, 1)).image(Y, 2)


def test_table_entries_and_top_index():
    t = TwistTable((3, 2), {(1, 1): IDENTITY, (3, 1): d_dy()})
    assert t.entry(2, 1) is ZERO
    assert t.top_index(0, Y) == 2
    assert t.top_index(0, Polynomial.constant(1)) == 0
    assert t.image(Y**2, 0) == {0: Y**2, 2: Y.scale(2)}


TABLES = {
    "identity": TwistTable.homogeneous(IDENTITY, (2, 2)),
    "only_11": TwistTable((2, 2), {(1, 1): IDENTITY}),
    "lowering": TwistTable((2, 2), {(1, 1): IDENTITY, (1, 2): IDENTITY, (2, 2): IDENTITY}),
    "shift": TwistTable.homogeneous(endo(Y + 1), (2, 2)),
    "scaled": TwistTable.homogeneous(Scale(QQ(2), IDENTITY), (2, 2)),
}


@pytest.mark.parametrize("name", sorted(TABLES))
def test_general_condition_agrees_with_direct_check(name):
    table = TABLES[name]
    ctx = OreContext(IDENTITY, d_dy(), table, PLAIN)
    direct = check_hom_associativity(ctx, 2, 1)
    general = check_general_condition(IDENTITY, d_dy(), table, 2, 1)
    assert direct.passed == general.passed


def test_necessary_conditions_hom_weyl():
    c = make_weyl(QQ(Fraction(-1, 2))).ctx
    table = TwistTable.homogeneous(c.twist, (3, 3))
    reports = check_necessary_conditions(c.sigma, c.delta, table, 3, base_twist=c.twist)
    assert [r.name for r in reports] == ["necessary_first_column", "necessary_shift_first", "necessary_shift_second",
                                         "necessary_second_column", "assertion1", "assertion2"]
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("name", sorted(TABLES))
def test_necessity(name):
    table = TABLES[name]
    if check_general_condition(IDENTITY, d_dy(), table, 2, 2).passed:
        assert all(r.passed for r in check_necessary_conditions(IDENTITY, d_dy(), table, 2))


def test_necessary_conditions_detect_bad_table():
    reports = check_necessary_conditions(IDENTITY, d_dy(), TABLES["only_11"], 2)
    assert not all(r.passed for r in reports)


# -- homogeneous twists --------------------------------------------------------


def test_corollaries_hom_weyl():
    c = make_weyl(3).ctx
    assert all(r.passed for r in check_homogeneous_corollaries(c.sigma, c.delta, c.twist, 3, base_twist=c.twist))


def test_corollaries_identity_twist():
    reports = check_homogeneous_corollaries(endo(Y.scale(2)), Derivation(Y, endo(Y.scale(2))), IDENTITY, 3)
    assert all(r.passed for r in reports)


def test_delta_commuting_fails_without_commuting():
    reports = check_homogeneous_corollaries(IDENTITY, Derivation(Y), endo(Y + 1), 2)
    assert reports[0].name == "delta_commutes_under_product"
    assert not reports[0].passed


def test_pi_sum_examples():
    c = make_weyl(5).ctx
    assert check_pi_sum_condition(c.sigma, c.delta, c.twist, 2, 2, base_twist=c.twist).passed
    assert check_pi_sum_condition(ZERO, ZERO, endo(Y + 1), 2, 2).passed is False
    assert not check_pi_sum_condition(endo(Y.scale(2)), ZERO, endo(Y + 1), 2, 2,
                                      base_twist=endo(Y + 1)).passed


def test_pi_sum_degenerate_maps_reduce_to_base():
    # sigma = delta = 0 leaves only l = m = n = 0, i.e. hom-associativity of R itself
    alpha = endo(Y.scale(3))
    assert check_pi_sum_condition(ZERO, ZERO, alpha, 2, 2, base_twist=alpha).passed


VERDICT_CASES = [
    ("hom_weyl", make_weyl(2).ctx),
    ("hom_env", make_enveloping(QQ(Fraction(1, 3))).ctx),
    ("hom_qplane", make_quantum_plane(2, 3).ctx),
    ("plain_qplane", make_quantum_plane(2, 3).ctx.with_mode(PLAIN)),
    ("plain_weyl_shift", make_weyl(1).ctx.with_mode(PLAIN)),
    ("plain_identity", OreContext(endo(Y.scale(2)), ZERO, IDENTITY, PLAIN)),
    ("star_noncommuting", OreContext(endo(Y.scale(2)), ZERO, endo(Y + 1), STAR)),
]


@pytest.mark.parametrize("name,ctx", VERDICT_CASES, ids=[n for n, _ in VERDICT_CASES])
def test_verdict_agreement(name, ctx):
    base = ctx.twist if ctx.mode == STAR else None
    direct = check_hom_associativity(ctx, 2, 2).passed
    criterion = check_pi_sum_condition(ctx.sigma, ctx.delta, ctx.twist, 2, 2, base_twist=base).passed
    assert direct == criterion


def _random_triple(rng):
    """Commuting (sigma, delta, alpha) built from scalings, shifts and inner derivations."""
    kind = rng.choice(["skew", "weyl", "euler"])
    a = QQ(Fraction(rng.choice([-3, -2, 2, 3]), rng.choice([1, 2])))
    b = QQ(Fraction(rng.choice([-2, -1, 2, 5]), rng.choice([1, 3])))
    c = QQ(rng.randint(1, 4))
    if kind == "skew":
        sigma = endo(Y.scale(a))
        delta = Scale(c, Sum((sigma, Scale(QQ(-1), IDENTITY))))
        return sigma, delta, endo(Y.scale(b))
    if kind == "weyl":
        return IDENTITY, Scale(c, d_dy()), endo(Y + b)
    return IDENTITY, Scale(c, Derivation(Y)), endo(Y.scale(b))


@pytest.mark.parametrize("seed", range(5))
def test_sufficiency_meta(seed):
    rng = random.Random(seed)
    sigma, delta, alpha = _random_triple(rng)
    assert check_endomorphism(sigma, 3).passed
    assert check_sigma_derivation(delta, sigma, 3).passed
    assert check_commute(alpha, sigma, 3).passed and check_commute(alpha, delta, 3).passed
    ctx = OreContext(sigma, delta, alpha, STAR)
    rep = check_hom_associativity(ctx, 2, 2)
    rep.seed = seed
    assert rep.passed, rep.summary()


def test_sufficiency_meta_families():
    for fam in (make_weyl(-2), make_enveloping(2), make_quantum_plane(3, QQ(Fraction(1, 2)))):
        c = fam.ctx
        assert check_endomorphism(c.sigma, 3).passed
        assert check_sigma_derivation(c.delta, c.sigma, 3).passed
        assert check_commute(c.twist, c.sigma, 3).passed and check_commute(c.twist, c.delta, 3).passed
        assert check_hom_associativity(c, 2, 2).passed


def test_assoc_identity():
    assert check_assoc_identity(IDENTITY, d_dy(), 3, 3).passed
    assert check_assoc_identity(endo(Y.scale(2)), Derivation(Y, endo(Y.scale(2))), 2, 2).passed


def test_endo_extension():
    k = QQ(4)
    assert check_endo_extension(endo(Y + k), IDENTITY, d_dy(), 2, 2).passed
    assert check_endo_extension(IDENTITY, IDENTITY, d_dy(), 2, 2).passed
    assert not check_endo_extension(endo(Y**2 + Y), IDENTITY, d_dy(), 2, 2).passed
    with pytest.raises(ValueError):
        check_endo_extension(d_dy(), IDENTITY, d_dy(), 2, 2)


def test_weak_unit_checks():
    ctx = hom_weyl(3)
    assert check_weak_unit(ctx, 1, 2, 2).passed
    assert check_weak_unit(OreContext(IDENTITY, d_dy(), IDENTITY, STAR), 1, 2, 2).passed
    assert not check_weak_unit(ctx, Y, 2, 2).passed


@pytest.mark.parametrize("k", [0, 2])
def test_weak_unit_lemma(k):
    ctx = hom_weyl(k)
    reports = check_weak_unit_lemma(ctx, 1, 3, 3, samples=20, seed=1)
    assert [r.name for r in reports] == ["weak_unit_lemma_i", "weak_unit_lemma_ii", "weak_unit_lemma_iii"]
    assert all(r.passed for r in reports)


def test_weak_unit_lemma_example():
    k = QQ(5)
    ctx = hom_weyl(k)
    q = OrePoly.basis(2, 1)
    assert ctx.commutator(X1, q) == OrePoly.monomial((Y + k).scale(2), 1)


def test_weak_unit_lemma_preconditions():
    with pytest.raises(ValueError):
        check_weak_unit_lemma(make_quantum_plane(2, 3).ctx, 1, 1, 1)
    with pytest.raises(ValueError):
        check_weak_unit_lemma(OreContext(IDENTITY, d_dy(), endo(Y.scale(2)), STAR), 1, 1, 1)
    with pytest.raises(ValueError):
        check_weak_unit_lemma(hom_weyl(1), Y, 1, 1)


def test_multiplicative_from_fixed_unit():
    for ctx in (hom_weyl(2), OreContext(IDENTITY, d_dy(), IDENTITY, STAR), make_quantum_plane(2, 3).ctx):
        assert check_multiplicative_from_fixed_unit(ctx, 1, 2, 2).passed
    with pytest.raises(ValueError):
        check_multiplicative_from_fixed_unit(hom_weyl(2), Y, 1, 1)


@pytest.mark.parametrize("bad", [0, -3])
def test_bounds_required(bad):
    with pytest.raises(ValueError):
        check_hom_associativity(hom_weyl(1), bad, 2)
