"""Command-line front end: ``homore verify | reduce | unitalize``.

Exit codes: 0 when every check passes, 1 when some check produced a
counterexample, 2 for invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from . import __version__
from .catalog import (
    ENVELOPING,
    FAMILIES,
    QUANTUM_PLANE,
    WEYL,
    ReductionError,
    check_star_sigma_derivation,
    make_family,
    make_weyl,
    simplicity_reduce,
)
from .homcheck import (
    TwistTable,
    base_twist_of,
    check_assoc_identity,
    check_general_condition,
    check_hom_associativity,
    check_homogeneous_corollaries,
    check_multiplicative_from_fixed_unit,
    check_necessary_conditions,
    check_pi_sum_condition,
    check_weak_unit,
    check_weak_unit_lemma,
)
from .ore import PLAIN, STAR, OrePoly, random_ore_poly
from .parsing import parse_ore_poly
from .report import Report, run_check
from .scalars import QQ, ZZ, IntModRing, ParamPoly, ParamRing, RingMismatchError, parse_rational
from .unitalization import (
    HomAlgebra,
    check_characteristic,
    check_embedding,
    check_hom_ideal,
    check_unitalization,
)

SUITES = ("axioms", "corollaries", "general-table", "unitalization", "reduce")
SYMBOLIC = "symbolic"
EXIT_PASS, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InvalidInput(ValueError):
    pass


@dataclass
class RunConfig:
    family: str = WEYL
    k: str = "1"
    q: str = "2"
    deg_x: int = 2
    deg_y: int = 2
    suite: str = "axioms"
    mode: str = STAR
    seed: int = 0
    format: str = "text"
    out: str | None = None
    poly: str | None = None
    samples: int = 20
    base: str = "QQ"

    def validate(self):
        if self.family not in FAMILIES:
            raise InvalidInput(f"unknown family {self.family!r}")
        if self.suite not in SUITES + ("all",):
            raise InvalidInput(f"unknown suite {self.suite!r}")
        if self.mode not in (PLAIN, STAR):
            raise InvalidInput(f"unknown mode {self.mode!r}")
        if self.format not in ("text", "json"):
            raise InvalidInput(f"unknown format {self.format!r}")
        for name in ("deg_x", "deg_y", "seed", "samples"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise InvalidInput(f"{name} must be an integer, got {v!r}")
        if self.deg_x < 1 or self.deg_y < 1:
            raise InvalidInput("degree bounds must be >= 1")
        if self.samples < 0:
            raise InvalidInput("samples must be >= 0")


def _param(value, name: str):
    if isinstance(value, float) or isinstance(value, bool):
        raise InvalidInput(f"{name} must be an exact rational, got {value!r}")
    if isinstance(value, int):
        return QQ(value)
    text = str(value).strip()
    if text == SYMBOLIC:
        return ParamRing(("k", "q")).gen(name)
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"--{name}: {exc}") from None


def build_family(cfg: RunConfig):
    params = {"k": _param(cfg.k, "k")}
    if cfg.family == QUANTUM_PLANE:
        params["q"] = _param(cfg.q, "q")
    if any(isinstance(v, ParamPoly) for v in params.values()):
        ring = ParamRing(("k", "q"))
        params = {n: ring(v) for n, v in params.items()}
    try:
        return make_family(cfg.family, **params)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def _base_ring(text: str):
    if text == "QQ":
        return None
    if text == "ZZ":
        return ZZ
    if text.startswith("Z/") and text[2:].isdigit() and int(text[2:]) >= 2:
        return IntModRing(int(text[2:]))
    raise InvalidInput(f"unknown base ring {text!r}; use QQ, ZZ or Z/n")


# -- suites -----------------------------------------------------------------


def _axioms(fam, cfg):
    ctx = fam.ctx.with_mode(cfg.mode)
    dx, dy = cfg.deg_x, cfg.deg_y
    items = [lambda: [fam.check_relation()]]
    if fam.family == QUANTUM_PLANE:
        # the classical non-associativity witness, ahead of the full grid
        def witness():
            X, Y = fam.X(), fam.Y()
            r = check_hom_associativity(ctx, dx, dy, triples=[(X, Y, Y)])
            r.name = "hom_associativity_witness"
            return [r]
        items.append(witness)
    items += [
        lambda: [check_hom_associativity(ctx, dx, dy)],
        lambda: check_star_sigma_derivation(fam, dy),
    ]
    if cfg.mode == STAR:
        items.append(lambda: [check_weak_unit(ctx, 1, dx, dy)])
        items.append(lambda: [check_multiplicative_from_fixed_unit(ctx, 1, dx, dy)])
    return items


def _corollaries(fam, cfg):
    ctx = fam.ctx.with_mode(cfg.mode)
    c, ring = fam.ctx, fam.ring
    base = base_twist_of(ctx)
    dx, dy = cfg.deg_x, cfg.deg_y
    items = [
        lambda: check_homogeneous_corollaries(c.sigma, c.delta, c.twist, dy, base_twist=base, ring=ring),
        lambda: [check_pi_sum_condition(c.sigma, c.delta, c.twist, dx, dy, base_twist=base, ring=ring)],
        lambda: [check_assoc_identity(c.sigma, c.delta, dx, dy, ring=ring)],
    ]
    if cfg.mode == STAR and fam.family in (WEYL, ENVELOPING):
        items.append(lambda: check_weak_unit_lemma(ctx, 1, dx, dy, samples=cfg.samples, seed=cfg.seed))
    return items


def _general_table(fam, cfg):
    ctx = fam.ctx.with_mode(cfg.mode)
    c, ring = fam.ctx, fam.ring
    base = base_twist_of(ctx)
    table = TwistTable.homogeneous(c.twist, (cfg.deg_x, cfg.deg_x))
    return [
        lambda: [check_general_condition(c.sigma, c.delta, table, cfg.deg_x, cfg.deg_y,
                                         base_twist=base, ring=ring)],
        lambda: check_necessary_conditions(c.sigma, c.delta, table, cfg.deg_y, base_twist=base, ring=ring),
    ]


def _unitalization(fam, cfg):
    base = _base_ring(cfg.base)
    ctx = fam.ctx.with_mode(cfg.mode)
    scalars = None
    if isinstance(base, IntModRing):
        if fam.family != WEYL or isinstance(fam.params["k"], ParamPoly):
            raise InvalidInput("Z/n base rings are only supported for the Weyl family with rational k")
        k = fam.params["k"]
        if k.denominator != 1:
            raise InvalidInput("Z/n base rings need an integer k")
        ctx = make_weyl(int(k), ring=base).ctx.with_mode(cfg.mode)
    elif base is ZZ:
        scalars = ZZ
    alg = HomAlgebra.from_context(ctx, scalars)
    dx, dy, n, seed = cfg.deg_x, cfg.deg_y, cfg.samples, cfg.seed
    items = [
        lambda: check_unitalization(alg, dx, dy, samples=n, seed=seed),
        lambda: [check_embedding(alg, dx, dy, samples=n, seed=seed)],
        lambda: [check_hom_ideal(alg, dx, dy, samples=n, seed=seed)],
    ]
    if alg.twist_bijective:
        items.append(lambda: [check_characteristic(alg, dx, dy, samples=n, seed=seed)])
    return items


def _reduction_report(k, polys, name="reduce") -> Report:
    def cases():
        for p in polys:
            bound = p.y_degree() + max(p.degree, 0) + 2
            try:
                trace = simplicity_reduce(k, p, bound)
            except ReductionError as exc:
                yield {"p": p}, str(exc), "1"
                continue
            yield {"p": p}, trace.final, OrePoly.one(trace.final.ring)
            yield {"p": p, "steps": len(trace), "bound": bound}, trace.verify(), True

    return run_check(name, cases(), {"samples": len(polys)})


def _reduce_suite(fam, cfg):
    if fam.family != WEYL:
        raise InvalidInput("the reduce suite only applies to the Weyl family")
    k = fam.params["k"]
    if isinstance(k, ParamPoly):
        raise InvalidInput("the reduce suite needs a rational k")
    rng = random.Random(cfg.seed)
    polys = [random_ore_poly(rng, QQ, cfg.deg_x, cfg.deg_y) for _ in range(cfg.samples)]
    if cfg.poly:
        polys.insert(0, _parse_poly(cfg.poly))
    return [lambda: [_reduction_report(k, polys)]]


BUILDERS = {
    "axioms": _axioms,
    "corollaries": _corollaries,
    "general-table": _general_table,
    "unitalization": _unitalization,
    "reduce": _reduce_suite,
}


def _workers() -> int:
    cap = os.environ.get("HOMORE_THREADS")
    n = os.cpu_count() or 1
    if cap is None:
        return n
    if not cap.isdigit() or int(cap) < 1:
        raise InvalidInput(f"HOMORE_THREADS must be a positive integer, got {cap!r}")
    return min(n, int(cap))


def run_suites(fam, cfg: RunConfig) -> list[tuple[str, Report]]:
    """Run the selected suites; results sorted by suite name, then input order."""
    if cfg.suite == "all":
        reducible = fam.family == WEYL and not isinstance(fam.params["k"], ParamPoly)
        names = [s for s in SUITES if s != "reduce" or reducible]
    else:
        names = [cfg.suite]
    jobs = []
    for suite in sorted(names):
        jobs.extend((suite, item) for item in BUILDERS[suite](fam, cfg))
    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        futures = [pool.submit(item) for _, item in jobs]
        results = [f.result() for f in futures]
    return [(suite, r) for (suite, _), reports in zip(jobs, results) for r in reports]


# -- rendering --------------------------------------------------------------


def _config_dict(cfg: RunConfig) -> dict:
    d = asdict(cfg)
    d.pop("out")
    d.pop("format")
    return {k: v for k, v in d.items() if v is not None}


def render(cfg: RunConfig, results) -> str:
    if cfg.format == "json":
        suites = []
        for suite, r in results:
            d = r.to_dict()
            d["name"] = f"{suite}.{r.name}"
            suites.append(d)
        doc = {"config": _config_dict(cfg), "suites": suites, "seed": cfg.seed, "version": __version__}
        return json.dumps(doc, indent=2)
    head = f"homore {__version__}  " + "  ".join(f"{k}={v}" for k, v in _config_dict(cfg).items())
    lines = [head]
    current = None
    for suite, r in results:
        if suite != current:
            lines.append(f"[{suite}]")
            current = suite
        lines.append("  " + r.summary())
    failed = sum(1 for _, r in results if not r.passed)
    lines.append(f"result: {'FAIL' if failed else 'PASS'} ({len(results) - failed}/{len(results)} checks passed)")
    return "\n".join(lines)


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_poly(text: str) -> OrePoly:
    try:
        return parse_ore_poly(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"--poly: {exc}") from None


# -- commands ---------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    fam = build_family(cfg)
    results = run_suites(fam, cfg)
    _emit(cfg, render(cfg, results))
    return EXIT_PASS if all(r.passed for _, r in results) else EXIT_FAIL


def cmd_unitalize(cfg: RunConfig) -> int:
    cfg.suite = "unitalization"
    return cmd_verify(cfg)


def cmd_reduce(cfg: RunConfig) -> int:
    if cfg.poly is None:
        raise InvalidInput("reduce needs --poly")
    p = _parse_poly(cfg.poly)
    if p.is_zero():
        raise InvalidInput("cannot reduce the zero polynomial")
    k = _param(cfg.k, "k")
    if isinstance(k, ParamPoly):
        raise InvalidInput("reduce needs a rational k")
    try:
        trace = simplicity_reduce(k, p, p.y_degree() + max(p.degree, 0) + 2)
    except ReductionError as exc:
        print(f"reduction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok = trace.verify()
    if cfg.format == "json":
        doc = {
            "config": {"k": str(k), "poly": cfg.poly},
            "trace": [{"step": label, "value": str(v)} for label, v in trace.steps],
            "length": len(trace),
            "final": str(trace.final),
            "verified": ok,
            "version": __version__,
        }
        _emit(cfg, json.dumps(doc, indent=2))
    else:
        _emit(cfg, "\n".join(trace.lines() + [f"length: {len(trace)}"]))
    return EXIT_PASS if ok else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "reduce": cmd_reduce, "unitalize": cmd_unitalize}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homore", description="Verify hom-associative Ore extensions exactly.")
    parser.add_argument("--version", action="version", version=f"homore {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--k", help="rational p/q or 'symbolic'")
    common.add_argument("--q", help="rational p/q or 'symbolic' (quantum plane)")
    common.add_argument("--deg-x", type=int, dest="deg_x")
    common.add_argument("--deg-y", type=int, dest="deg_y")
    common.add_argument("--suite", choices=SUITES + ("all",))
    common.add_argument("--mode", choices=(PLAIN, STAR))
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int, help="random elements per sampled check")
    common.add_argument("--format", choices=("text", "json"))
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--config", metavar="PATH", help="JSON file of defaults; flags override it")
    common.add_argument("--poly", metavar="EXPR")
    common.add_argument("--base", help="unitalization base ring: QQ, ZZ or Z/n")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify", parents=[common], help="run verification suites")
    sub.add_parser("reduce", parents=[common], help="reduce a Weyl element to 1")
    sub.add_parser("unitalize", parents=[common], help="check the weak unitalization")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    fields = set(RunConfig.__dataclass_fields__)
    values: dict = {}
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise InvalidInput("config file must hold a JSON object")
        data = {k.replace("-", "_"): v for k, v in data.items()}
        unknown = set(data) - fields
        if unknown:
            raise InvalidInput(f"unknown config keys: {', '.join(sorted(unknown))}")
        values.update(data)
    values.update({k: v for k, v in vars(args).items() if k in fields and v is not None})
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](cfg)
    except (InvalidInput, RingMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
