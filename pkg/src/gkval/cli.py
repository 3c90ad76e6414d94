"""Command-line interface.

Subcommands:

* classify       -- relative root system, length classes, degree table
* constant-term  -- symbolic factorization over the inversion set
* poles          -- positive-pole profile per relative root
* tables         -- classification tables for the standard families
* verify-local   -- p-adic shell-integral oracles
* verify-arch    -- archimedean constancy and duplication oracles
* verify-all     -- every check, including table reproduction and Weyl
                    invariants (randomized words seeded by GK_SEED)

Exit codes: 0 success, 1 verification failure, 2 input or schema error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .characters import (
    FUNCTION_MODE,
    NUMBER_MODE,
    CharacterError,
    RationalComplex,
    UnramifiedCharacter,
)
from .constant_term import (
    ConstantTermError,
    component_pole_ratio,
    constant_term,
    corollary_ratio_table,
    multiplicativity_check,
    pole_profile,
    sl3_longest_factorization,
)
from .lfactors import MeromorphicProduct
from .oracles import (
    ARCH_CASES,
    DEFAULT_CONFIG,
    LocalPlace,
    NotConverged,
    OracleConfig,
    arch_gk,
    gk_integral_sl2,
    gk_integral_sl3,
    gk_integral_su21_inert,
    legendre_check,
    normalizing_factor_arch,
    s_independence_check,
    sl2_closed_form,
    su21_inert_closed_form,
)
from .roots import (
    FAMILIES,
    GroupDatum,
    RootSystemError,
    cartan_matrix,
    derived_table,
    family_datum,
    proposition_table,
    restrict_roots,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_SCHEMA = 2
EXIT_INTERNAL = 3


class SchemaError(ValueError):
    pass


# ---------------------------------------------------------------------------
# input parsing


def _parse_diagram(spec) -> tuple[tuple[int, ...], ...]:
    if isinstance(spec, str):
        if len(spec) < 2 or not spec[0].isalpha():
            raise SchemaError(f"bad diagram string {spec!r}")
        family, rank = spec[0].upper(), spec[1:]
        if not rank.isdigit():
            raise SchemaError(f"bad diagram string {spec!r}")
        try:
            return tuple(tuple(r) for r in cartan_matrix(family, int(rank)))
        except RootSystemError as exc:
            raise SchemaError(str(exc)) from exc
    if isinstance(spec, dict) and "cartan" in spec:
        return tuple(tuple(int(x) for x in row) for row in spec["cartan"])
    raise SchemaError("diagram must be a type string or {'cartan': [[...]]}")


def _parse_rational_pair(entry) -> RationalComplex:
    if isinstance(entry, (int, str)):
        return RationalComplex(Fraction(entry), Fraction(0))
    if isinstance(entry, (list, tuple)) and len(entry) == 2:
        return RationalComplex(Fraction(str(entry[0])), Fraction(str(entry[1])))
    raise SchemaError(f"bad rational pair {entry!r}")


def load_spec(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read spec file: {exc}") from exc
    if not isinstance(raw, dict) or "diagram" not in raw:
        raise SchemaError("spec file must be an object with a 'diagram' key")

    cartan = _parse_diagram(raw["diagram"])
    n = len(cartan)
    perm = tuple(raw.get("automorphism", list(range(n))))
    order = int(raw.get("automorphism_order", 1))
    dprime = int(raw.get("res_degree", 1))
    label = str(raw.get("label", ""))
    try:
        datum = GroupDatum(cartan, perm, order, dprime, label)
        system = restrict_roots(datum)
    except RootSystemError as exc:
        raise SchemaError(str(exc)) from exc

    mode_raw = raw.get("mode", "number")
    if mode_raw == "number":
        mode, q = NUMBER_MODE, None
    elif isinstance(mode_raw, dict) and "function" in mode_raw:
        mode, q = FUNCTION_MODE, int(mode_raw["function"])
    else:
        raise SchemaError(f"bad mode {mode_raw!r}")

    exps = raw.get("chi_exponent")
    if exps is None:
        chi = UnramifiedCharacter.trivial(system.rank, mode, q)
    else:
        if len(exps) != system.rank:
            raise SchemaError("chi_exponent has wrong rank")
        try:
            chi = UnramifiedCharacter(
                tuple(_parse_rational_pair(e) for e in exps), mode, q
            )
        except CharacterError as exc:
            raise SchemaError(str(exc)) from exc

    direction_raw = raw.get("lambda_direction")
    if direction_raw is None:
        direction = system.principal_ray()
    else:
        if len(direction_raw) != system.rank:
            raise SchemaError("lambda_direction has wrong rank")
        direction = tuple(Fraction(str(e)) for e in direction_raw)

    word_raw = raw.get("weyl_word")
    if word_raw is None:
        w = system.longest_element()
    else:
        try:
            w = system.normalize([int(i) for i in word_raw])
        except RootSystemError as exc:
            raise SchemaError(str(exc)) from exc

    return {"datum": datum, "system": system, "chi": chi,
            "direction": direction, "weyl": w}


# ---------------------------------------------------------------------------
# output helpers


def _emit(payload: dict, fmt: str, text_renderer=None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        if text_renderer is None:
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            text_renderer(payload)


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args) -> int:
    ctx = load_spec(args.input)
    system = ctx["system"]
    payload = {
        "label": ctx["datum"].label,
        "relative_rank": system.rank,
        "components": [
            {"type": t, "nodes": list(nodes)} for t, nodes in system.components
        ],
        "has_divisible_roots": system.has_divisible,
        "degree_table": derived_table(system),
        "simple_roots": [
            {
                "index": r.index,
                "coords": list(r.coords),
                "length_class": r.length_class,
                "d_alpha": r.d_alpha,
                "rank_one_type": r.rank_one_type,
            }
            for r in system.simple_roots
        ],
        "positive_root_count": len(system.positive_roots),
    }

    def render(p):
        print(f"label: {p['label']}")
        print(f"relative rank: {p['relative_rank']}")
        for c in p["components"]:
            print(f"component {c['nodes']}: type {c['type']}")
        print(f"degree table: {p['degree_table']}")
        for r in p["simple_roots"]:
            print(
                f"  node {r['index']}: {r['length_class']}, "
                f"d_alpha={r['d_alpha']}, {r['rank_one_type']}"
            )

    _emit(payload, args.output_format, render)
    return EXIT_OK


def cmd_constant_term(args) -> int:
    ctx = load_spec(args.input)
    report = constant_term(
        ctx["system"], ctx["chi"], ctx["direction"], ctx["weyl"]
    )
    payload = report.to_json()
    payload["variable_convention"] = args.variable

    def render(p):
        print(f"weyl word: {p['weyl_word']} (length {p['length']})")
        for f in p["factors"]:
            arg = f["pairing"] if args.variable == "global" else f["local_argument"]
            print(
                f"  root {f['root']} [{f['length_class']}, d={f['d_alpha']}, "
                f"{f['rank_one_type']}]: argument {arg}"
            )
        for atom in p["product"]:
            field = atom["field"]["label"]
            print(
                f"  {atom['kind']}_{field}({atom['a']}*s + {atom['b']})"
                f"^{atom['exponent']}  twist={atom['character']['twist']}"
            )

    _emit(payload, args.output_format, render)
    return EXIT_OK


def cmd_poles(args) -> int:
    ctx = load_spec(args.input)
    variable = "ray" if args.variable == "global" else "pairing"
    entries = pole_profile(
        ctx["system"],
        ctx["chi"],
        direction=ctx["direction"],
        w=ctx["weyl"],
        variable=variable,
        include_conditional=True,
    )
    payload = {
        "variable": args.variable,
        "poles": [e.to_json() for e in entries],
        "ratios": [
            {
                "component": i,
                **{
                    k: (str(v) if isinstance(v, Fraction) else
                        {kk: str(vv) for kk, vv in v.items()})
                    for k, v in component_pole_ratio(ctx["system"], i).items()
                },
            }
            for i in range(len(ctx["system"].components))
        ],
    }

    def render(p):
        for e in p["poles"]:
            tag = " (conditional)" if e["conditional"] else ""
            print(
                f"root {e['root']} [{e['length_class']}]: pole at "
                f"{e['location']}, order {e['order']}{tag}"
            )
        for r in p["ratios"]:
            print(f"component {r['component']}: {r}")

    _emit(payload, args.output_format, render)
    return EXIT_OK


def cmd_tables(args) -> int:
    dprime = args.res_degree
    payload = {}
    for family in FAMILIES:
        if family == "split":
            payload[family] = proposition_table(family, 0, dprime)
        elif family == "3D4":
            payload[family] = proposition_table(family, 4, dprime)
        elif family == "2E6":
            payload[family] = proposition_table(family, 6, dprime)
        else:
            payload[family] = proposition_table(family, max(args.rank, 4), dprime)
    _emit({"d_prime": dprime, "tables": payload}, args.output_format)
    return EXIT_OK


def _oracle_config(args) -> OracleConfig:
    return OracleConfig(depth=args.depth, tolerance=args.tol)


def _check(name: str, inputs: dict, observed: complex, expected: complex,
           tol: float) -> dict:
    err = abs(observed - expected)
    return {
        "name": name,
        "inputs": inputs,
        "observed": [observed.real, observed.imag],
        "expected": [expected.real, expected.imag],
        "abs_err": err,
        "pass": bool(err < tol),
    }


def _local_checks(qs, s_grid, cfg: OracleConfig) -> list[dict]:
    checks = []
    for q in qs:
        place = LocalPlace(q)
        for s in s_grid:
            sc = complex(s)
            try:
                checks.append(
                    _check(
                        "sl2_shell",
                        {"q": q, "s": str(s)},
                        gk_integral_sl2(place, sc, cfg),
                        sl2_closed_form(q, sc),
                        1e-10,
                    )
                )
                checks.append(
                    _check(
                        "su21_inert_shell",
                        {"q": q, "s": str(s)},
                        gk_integral_su21_inert(place, sc, cfg),
                        su21_inert_closed_form(q, sc),
                        1e-9,
                    )
                )
                sl3 = sl3_longest_factorization(q, sc)
                checks.append(
                    _check(
                        "sl3_factorization",
                        {"q": q, "s": str(s)},
                        gk_integral_sl3(place, sc, cfg),
                        sl3["value"],
                        1e-10,
                    )
                )
            except NotConverged as exc:
                checks.append(
                    {"name": "shell", "inputs": {"q": q, "s": str(s)},
                     "pass": False, "error": str(exc)}
                )
    return checks


def _arch_checks(cfg: OracleConfig) -> list[dict]:
    checks = []
    samples = (0.7, 1.0, 1.3, 2.1, 3.0)
    for case in ARCH_CASES:
        ok, const = s_independence_check(case, None, samples)
        checks.append(
            {
                "name": "arch_constancy",
                "inputs": {"case": case},
                "observed_constant": [const.real, const.imag],
                "pass": bool(ok),
            }
        )
    leg_samples = [0.3 + 0.2 * k for k in range(10)]
    checks.append(
        {
            "name": "legendre_duplication",
            "inputs": {"samples": len(leg_samples)},
            "pass": bool(legendre_check(leg_samples)),
        }
    )
    return checks


def _table_checks() -> list[dict]:
    checks = []
    cases = []
    for dprime in (1, 2, 3):
        for n in range(2, 7):
            cases.append(("SU(n,n+1)", n, dprime))
            cases.append(("SU(n,n)", n, dprime))
        for n in range(4, 7):
            cases.append(("Spin2n-", n, dprime))
        cases.append(("3D4", 4, dprime))
        cases.append(("2E6", 6, dprime))
    for family, n, dprime in cases:
        system = restrict_roots(family_datum(family, n, dprime))
        derived = derived_table(system)
        stated = proposition_table(family, n, dprime)
        checks.append(
            {
                "name": "degree_table",
                "inputs": {"family": family, "n": n, "d_prime": dprime},
                "observed": derived,
                "expected": stated,
                "pass": derived == stated,
            }
        )
    return checks


def _ratio_checks() -> list[dict]:
    checks = []
    cases = [
        ("SU(n,n+1)", 3),
        ("SU(n,n)", 3),
        ("Spin2n-", 5),
        ("3D4", 4),
        ("2E6", 6),
    ]
    for family, n in cases:
        system = restrict_roots(family_datum(family, n, 1))
        ctype = system.components[0][0]
        rule = corollary_ratio_table(ctype)
        measured = component_pole_ratio(system, 0)
        if rule["kind"] == "equal":
            ok = len(set(measured["poles"].values())) == 1
        else:
            num, den = rule["numerator"], rule["denominator"]
            ok = (
                measured["poles"][num] / measured["poles"][den]
                == rule["ratio"]
            )
        checks.append(
            {
                "name": "pole_ratio",
                "inputs": {"family": family, "relative_type": ctype},
                "rule": {k: str(v) for k, v in rule.items()},
                "observed": {k: str(v) for k, v in measured["poles"].items()},
                "pass": bool(ok),
            }
        )
    for split_family in ("A3", "D4", "E6"):
        system = restrict_roots(
            GroupDatum(
                _parse_diagram(split_family),
                tuple(range(len(_parse_diagram(split_family)))),
                1,
                1,
                split_family,
            )
        )
        measured = component_pole_ratio(system, 0)
        checks.append(
            {
                "name": "pole_ratio",
                "inputs": {"family": f"split-{split_family}"},
                "rule": {"kind": "equal"},
                "observed": {k: str(v) for k, v in measured["poles"].items()},
                "pass": len(set(measured["poles"].values())) == 1,
            }
        )
    return checks


def _weyl_checks(seed: int) -> list[dict]:
    rng = random.Random(seed)
    checks = []
    small = [("A", 2), ("B", 2), ("G", 2)]
    for family, rank in small:
        system = restrict_roots(
            GroupDatum(
                tuple(tuple(r) for r in cartan_matrix(family, rank)),
                tuple(range(rank)), 1, 1, f"{family}{rank}",
            )
        )
        chi = UnramifiedCharacter.trivial(system.rank)
        ray = system.principal_ray()
        elements = system.weyl_enumerate()
        ok = all(
            len(system.inversion_set(w)) == system.length(w) for w in elements
        )
        mult_ok = True
        for w1 in elements:
            for w2 in elements:
                w12 = system.multiply(w1, w2)
                if system.length(w12) == system.length(w1) + system.length(w2):
                    try:
                        if not multiplicativity_check(system, chi, ray, w1, w2):
                            mult_ok = False
                    except ConstantTermError:
                        mult_ok = False
        checks.append(
            {
                "name": "weyl_exhaustive",
                "inputs": {"system": f"{family}{rank}"},
                "pass": bool(ok and mult_ok),
            }
        )
    for family, rank in (("B", 4), ("D", 4), ("F", 4)):
        system = restrict_roots(
            GroupDatum(
                tuple(tuple(r) for r in cartan_matrix(family, rank)),
                tuple(range(rank)), 1, 1, f"{family}{rank}",
            )
        )
        chi = UnramifiedCharacter.trivial(system.rank)
        ray = system.principal_ray()
        ok = True
        for _ in range(100):
            word = [rng.randrange(rank) for _ in range(rng.randrange(1, 12))]
            w = system.normalize(word)
            if len(system.inversion_set(w)) != len(w.word):
                ok = False
            cut = rng.randrange(len(w.word) + 1)
            w1 = system.normalize(w.word[:cut])
            w2 = system.normalize(w.word[cut:])
            if system.length(system.multiply(w1, w2)) == len(w1.word) + len(w2.word):
                if not multiplicativity_check(system, chi, ray, w1, w2):
                    ok = False
        checks.append(
            {
                "name": "weyl_random",
                "inputs": {"system": f"{family}{rank}", "seed": seed},
                "pass": bool(ok),
            }
        )
    return checks


def _finish_verify(checks: list[dict], fmt: str) -> int:
    failed = [c for c in checks if not c["pass"]]
    payload = {
        "checks": checks,
        "total": len(checks),
        "failed": len(failed),
        "pass": not failed,
    }
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    else:
        for c in checks:
            mark = "ok" if c["pass"] else "FAIL"
            print(f"[{mark}] {c['name']} {c.get('inputs', {})}")
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY


def cmd_verify_local(args) -> int:
    cfg = _oracle_config(args)
    return _finish_verify(_local_checks(args.q, args.s_grid, cfg),
                          args.output_format)


def cmd_verify_arch(args) -> int:
    cfg = _oracle_config(args)
    return _finish_verify(_arch_checks(cfg), args.output_format)


def cmd_verify_all(args) -> int:
    cfg = _oracle_config(args)
    seed = int(os.environ.get("GK_SEED", "0"))
    checks = (
        _local_checks(args.q, args.s_grid, cfg)
        + _arch_checks(cfg)
        + _table_checks()
        + _ratio_checks()
        + _weyl_checks(seed)
    )
    return _finish_verify(checks, args.output_format)


# ---------------------------------------------------------------------------
# entry point


def _parse_s_grid(text: str) -> list[Fraction]:
    try:
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise SchemaError(f"bad --s-grid: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkval",
        description="Constant-term factorizations over relative root systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input: bool) -> None:
        if needs_input:
            p.add_argument("--input", required=True, help="group-spec JSON file")
        p.add_argument("--output-format", choices=("text", "json"),
                       default="text")

    def oracle_opts(p) -> None:
        p.add_argument("--depth", type=int, default=DEFAULT_CONFIG.depth)
        p.add_argument("--tol", type=float, default=DEFAULT_CONFIG.tolerance)
        p.add_argument("--q", type=int, nargs="+", default=[2, 3, 5])
        p.add_argument("--s-grid", type=str, default="1,3/2,2,3")

    p = sub.add_parser("classify", help="relative root system report")
    common(p, True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("constant-term", help="symbolic factorization")
    common(p, True)
    p.add_argument("--variable", choices=("global", "local"), default="global")
    p.set_defaults(func=cmd_constant_term)

    p = sub.add_parser("poles", help="positive-pole profile")
    common(p, True)
    p.add_argument("--variable", choices=("global", "local"), default="local")
    p.set_defaults(func=cmd_poles)

    p = sub.add_parser("tables", help="classification degree tables")
    common(p, False)
    p.add_argument("--rank", type=int, default=4)
    p.add_argument("--res-degree", type=int, default=1)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify-local", help="p-adic oracles")
    common(p, False)
    oracle_opts(p)
    p.set_defaults(func=cmd_verify_local)

    p = sub.add_parser("verify-arch", help="archimedean oracles")
    common(p, False)
    oracle_opts(p)
    p.set_defaults(func=cmd_verify_arch)

    p = sub.add_parser("verify-all", help="every verification suite")
    common(p, False)
    oracle_opts(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "s_grid") and isinstance(args.s_grid, str):
        try:
            args.s_grid = _parse_s_grid(args.s_grid)
        except SchemaError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_SCHEMA
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (RootSystemError, CharacterError, ConstantTermError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
