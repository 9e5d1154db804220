"""Command line front end.

Subcommands cover parsing, composition, decomposition and class
enumeration, shape classification and invariants, common composites,
Chebyshev polynomials, the odd monoid, the cusp semigroup, and the
seeded verification suites. Output is plain text or JSON; JSON carries a
top-level "schema": 1 and two runs with the same arguments produce the
same bytes.

Exit codes: 0 success; 1 usage error; 2 domain error (unparsable input,
pattern mismatch, membership failure, failed verification); 3 when an
operation needs an admissible shift that is irrational.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from .chebyshev import chebyshev, chebyshev_reduction_identities
from .classify import classify_shape, invariants_of_factors, ritt_invariants
from .corpus import (
    cusp_corpus,
    even_core_composites,
    indecomposable_factor,
    odd_factor_pairs,
    ritt_corpus,
    shifted_odd_composites,
)
from .cusp import (
    IrrationalRootRequiredError,
    PatternMismatchError,
    apply_cusp_move,
    classify_CD,
    cusp_report,
    enumerate_A_decompositions,
    in_A,
    max_decompositions,
)
from .decompose import (
    common_composite,
    complete_decomposition,
    enumerate_classes,
    ritt1_check,
)
from .oddmonoid import classify_odd_swap, decompose_in_O, is_irreducible_in_O, is_odd
from .parsing import ParseError, format_poly, parse
from .poly import Polynomial, compose_all

_SUITES = ("ritt1", "invariants", "chebyshev", "odd", "cusp", "all")
_SUITE_TRIALS = {"ritt1": 200, "invariants": 200, "odd": 1000, "cusp": 50}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_io(sub, polys: str = "none") -> None:
    if polys != "none":
        help_n = "polynomial in text form" + (
            " (repeat for several)" if polys == "many" else ""
        )
        sub.add_argument("--poly", action="append", default=[], help=help_n)
        sub.add_argument(
            "--file",
            action="append",
            default=[],
            help="JSON file holding a polynomial string or a list of them",
        )
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def _gather(args) -> list[Polynomial]:
    texts: list[str] = list(args.poly)
    for path in args.file:
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, str):
            texts.append(data)
        elif isinstance(data, list) and all(isinstance(t, str) for t in data):
            texts.extend(data)
        else:
            raise ValueError(f"{path}: expected a string or a list of strings")
    if not texts:
        raise ValueError("no polynomial given; use --poly or --file")
    return [parse(t) for t in texts]


def _one(args) -> Polynomial:
    ps = _gather(args)
    if len(ps) != 1:
        raise ValueError(f"expected exactly one polynomial, got {len(ps)}")
    return ps[0]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps({"schema": 1, **payload}, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_parse(args) -> int:
    p = _one(args)
    payload = {
        "poly": format_poly(p),
        "degree": p.degree,
        "coefficients": [str(c) for c in p.coeffs],
    }
    _emit(args, payload, [format_poly(p)])
    return 0


def _cmd_compose(args) -> int:
    ps = _gather(args)
    if len(ps) < 2:
        raise ValueError("compose needs at least two polynomials")
    c = compose_all(ps)
    payload = {
        "factors": [format_poly(p) for p in ps],
        "composite": format_poly(c),
        "degree": c.degree,
    }
    _emit(args, payload, [format_poly(c)])
    return 0


def _cmd_decompose(args) -> int:
    a = _one(args)
    d = complete_decomposition(a)
    payload = {
        "target": format_poly(a),
        "factors": [format_poly(f) for f in d.factors],
        "degree_sequence": list(d.degree_sequence),
    }
    _emit(args, payload, [format_poly(f) for f in d.factors])
    return 0


def _cmd_classes(args) -> int:
    a = _one(args)
    classes = enumerate_classes(a)
    payload = {
        "target": format_poly(a),
        "count": len(classes),
        "classes": [
            {
                "factors": [format_poly(f) for f in c.factors],
                "degree_sequence": list(c.degree_sequence),
            }
            for c in classes
        ],
    }
    lines = [f"{len(classes)} class(es)"]
    for c in classes:
        lines.append("  " + "  o  ".join(format_poly(f) for f in c.factors))
    _emit(args, payload, lines)
    return 0


def _cmd_classify(args) -> int:
    shape = classify_shape(_one(args))
    payload = {"shape": shape.to_json()}
    _emit(args, payload, [f"tag: {shape.tag}"])
    return 0


def _cmd_invariants(args) -> int:
    inv = ritt_invariants(_one(args))
    payload = {"invariants": inv.to_json()}
    lines = [
        f"n_P={inv.n_P} n_Q={inv.n_Q} n_R={inv.n_R} "
        f"undetermined={inv.n_undetermined}",
        "per-prime: "
        + (
            " ".join(f"{l}:{c}" for l, c in inv.p_by_prime)
            if inv.p_by_prime
            else "(none)"
        ),
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_common(args) -> int:
    ps = _gather(args)
    if len(ps) != 2:
        raise ValueError("common needs exactly two polynomials")
    got = common_composite(ps[0], ps[1], args.bound)
    if got is None:
        _emit(args, {"found": False}, ["none"])
        return 0
    c, alpha, beta = got
    payload = {
        "found": True,
        "composite": format_poly(c),
        "outer_for_first": format_poly(alpha),
        "outer_for_second": format_poly(beta),
    }
    _emit(args, payload, [format_poly(c)])
    return 0


def _cmd_cheb(args) -> int:
    t = chebyshev(args.n)
    _emit(args, {"n": args.n, "poly": format_poly(t)}, [format_poly(t)])
    return 0


def _cmd_odd_analyze(args) -> int:
    a = _one(args)
    if not is_odd(a):
        _emit(args, {"odd": False, "poly": format_poly(a)}, ["not an odd polynomial"])
        return 2
    payload: dict = {"odd": True, "poly": format_poly(a)}
    lines = ["odd: yes"]
    if a.degree >= 2:
        irr = is_irreducible_in_O(a)
        payload["irreducible"] = irr
        lines.append(f"irreducible in O: {'yes' if irr else 'no'}")
        classes = decompose_in_O(a)
        payload["classes"] = [[format_poly(f) for f in c.factors] for c in classes]
        lines.append(f"{len(classes)} class(es)")
        for c in classes:
            lines.append("  " + "  o  ".join(format_poly(f) for f in c.factors))
        swaps = []
        pairs = [c.factors for c in classes if len(c.factors) == 2]
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                res = classify_odd_swap(*pairs[i], *pairs[j])
                swaps.append(res.to_json())
                lines.append(f"swap {i},{j}: kind {res.kind}")
        payload["swaps"] = swaps
    _emit(args, payload, lines)
    return 0


def _cmd_odd_swap(args) -> int:
    ps = _gather(args)
    if len(ps) != 4:
        raise ValueError("odd swap needs four polynomials: p q p* q*")
    res = classify_odd_swap(ps[0], ps[1], ps[2], ps[3])
    _emit(args, {"swap": res.to_json()}, [f"kind {res.kind}"])
    return 0


def _cmd_cusp_report(args) -> int:
    a = _one(args)
    rep = cusp_report(a)
    sk = max_decompositions(a)
    payload = {"report": rep.to_json(), "max_skeleton": sk.to_json()}
    lines = [
        f"degree {rep.degree}: length {rep.length}, index at zero {rep.index}, "
        f"defect {rep.defect}, {'regular' if rep.regular else 'irregular'}, "
        f"{'rational witnesses exist' if rep.rational_realizable else 'needs irrational shifts'}",
        "maximal degree multisets: "
        + " ".join("{" + ",".join(map(str, m)) + "}" for m in sk.degree_multisets),
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_cusp_decs(args) -> int:
    a = _one(args)
    decs = enumerate_A_decompositions(a)
    payload = {
        "target": format_poly(a),
        "lengths": list(decs.lengths),
        "members": [[format_poly(f) for f in m] for m in decs.members],
    }
    lines = [f"lengths: {sorted(set(decs.lengths))}"]
    for m in decs.members:
        lines.append("  " + "  o  ".join(format_poly(f) for f in m))
    _emit(args, payload, lines)
    return 0


def _cmd_cusp_move(args) -> int:
    ps = _gather(args)
    if len(ps) < 2:
        raise ValueError("cusp move needs a decomposition of at least two factors")
    res = apply_cusp_move(tuple(ps), args.position, args.kind, args.shift)
    payload = {
        "move": {
            "kind": res.kind,
            "position": res.position,
            "factors": [format_poly(f) for f in res.factors],
            "in_A": list(res.in_A),
        }
    }
    lines = [" o ".join(format_poly(f) for f in res.factors)]
    _emit(args, payload, lines)
    return 0


def _suite_ritt1(seed: int, trials: int) -> tuple[int, list[str]]:
    failures = []
    for k, fs in enumerate(ritt_corpus(seed, trials)):
        a = compose_all(fs)
        rep = ritt1_check(a)
        ok = rep.passed
        if ok:
            tails = {c.factors[-1] for c in enumerate_classes(a)}
            degs = sorted(t.degree for t in tails)
            ok = len(degs) == len(set(degs)) and all(
                math.gcd(degs[i], degs[j]) == 1
                for i in range(len(degs))
                for j in range(i + 1, len(degs))
            )
        if not ok:
            failures.append(f"element {k}")
    return trials, failures


def _suite_invariants(seed: int, trials: int) -> tuple[int, list[str]]:
    failures = []
    for k, fs in enumerate(ritt_corpus(seed, trials)):
        a = compose_all(fs)
        per_class = [
            invariants_of_factors(c.factors) for c in enumerate_classes(a)
        ]
        if len(set(per_class)) != 1 or any(v.has_undetermined for v in per_class):
            failures.append(f"element {k}")
    return trials, failures


def _suite_chebyshev(seed: int, trials: int) -> tuple[int, list[str]]:
    del seed, trials  # the identity set below is fixed and exact
    failures = []
    checks = 0
    for m in range(2, 31):
        for n in range(2, 31):
            if m * n > 60:
                continue
            checks += 1
            if chebyshev(m).compose(chebyshev(n)) != chebyshev(m * n):
                failures.append(f"T_{m} o T_{n}")
    checks += 1
    if chebyshev(2) != parse("2x-1").compose(Polynomial.monomial(2)):
        failures.append("T_2 unit form")
    for n, ok in chebyshev_reduction_identities((3, 5, 7)).items():
        checks += 1
        if not ok:
            failures.append(f"reduction identity {n}")
    primes = (2, 3, 5, 7, 11, 13)
    from .roots import poly_gcd

    for i in range(len(primes)):
        for j in range(i + 1, len(primes)):
            checks += 1
            g = poly_gcd(
                chebyshev(primes[i]).derivative(), chebyshev(primes[j]).derivative()
            )
            if not (g.is_constant and not g.is_zero):
                failures.append(f"derivative gcd {primes[i]},{primes[j]}")
    return checks, failures


def _suite_odd(seed: int, trials: int) -> tuple[int, list[str]]:
    failures = []
    checks = 0
    for k, p in enumerate(shifted_odd_composites(seed, trials)):
        checks += 1
        if is_odd(p):
            failures.append(f"shifted sample {k}")
    for k, p in enumerate(even_core_composites(seed, trials)):
        checks += 1
        if is_odd(p):
            failures.append(f"even-core sample {k}")
    for k, (a, b) in enumerate(odd_factor_pairs(seed, min(trials, 200))):
        checks += 1
        c = a.compose(b)
        ok = is_odd(c)
        if ok and c.degree >= 2:
            classes = decompose_in_O(c)
            lengths = {len(cl.factors) for cl in classes}
            multis = {tuple(sorted(f.degree for f in cl.factors)) for cl in classes}
            ok = len(lengths) == 1 and len(multis) == 1 and all(
                is_odd(f) for cl in classes for f in cl.factors
            )
        if not ok:
            failures.append(f"closure pair {k}")
    return checks, failures


def _suite_cusp(seed: int, trials: int) -> tuple[int, list[str]]:
    failures = []
    checks = 0
    for k, fs in enumerate(cusp_corpus(seed, trials)):
        checks += 1
        a = compose_all(fs)
        try:
            if not in_A(a):
                raise ValueError("corpus element escaped A")
            rep = cusp_report(a)
            sk = max_decompositions(a)
            ok = rep.index == sk.index and rep.length >= rep.index
            if rep.regular and len(sk.degree_multisets) != 1:
                ok = False
            if (
                ok
                and rep.rational_realizable
                and a.degree <= 16
            ):
                ok = max(enumerate_A_decompositions(a).lengths) == rep.index
        except (PatternMismatchError, IrrationalRootRequiredError, ValueError):
            ok = False
        if not ok:
            failures.append(f"element {k}")
    rng = random.Random(seed)
    for k in range(500):
        checks += 1
        f = indecomposable_factor(rng)
        g = indecomposable_factor(rng)
        lhs = in_A(f.compose(g))
        rhs = in_A(g) or f.derivative()(g(Fraction(0))) == 0
        if lhs != rhs:
            failures.append(f"membership pair {k}")
    return checks, failures


_SUITE_RUNNERS = {
    "ritt1": _suite_ritt1,
    "invariants": _suite_invariants,
    "chebyshev": _suite_chebyshev,
    "odd": _suite_odd,
    "cusp": _suite_cusp,
}


def _cmd_verify(args) -> int:
    names = list(_SUITE_RUNNERS) if args.suite == "all" else [args.suite]
    results = []
    lines = []
    any_fail = False
    for name in names:
        trials = args.trials
        if trials is None:
            trials = _SUITE_TRIALS.get(name, 0)
        checks, failures = _SUITE_RUNNERS[name](args.seed, trials)
        any_fail = any_fail or bool(failures)
        results.append(
            {
                "suite": name,
                "checks": checks,
                "passes": checks - len(failures),
                "failures": failures,
            }
        )
        lines.append(f"suite {name}: {checks - len(failures)}/{checks} pass")
    _emit(args, {"seed": args.seed, "results": results}, lines)
    return 2 if any_fail else 0


def _build_parser() -> _Parser:
    top = _Parser(prog="polydecomp", description=__doc__.splitlines()[0])
    subs = top.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("parse", help="canonical text form of a polynomial")
    _add_io(sp, "one")
    sp.set_defaults(fn=_cmd_parse)

    sp = subs.add_parser("compose", help="compose polynomials left to right")
    _add_io(sp, "many")
    sp.set_defaults(fn=_cmd_compose)

    sp = subs.add_parser("decompose", help="one complete decomposition")
    _add_io(sp, "one")
    sp.set_defaults(fn=_cmd_decompose)

    sp = subs.add_parser("classes", help="all decomposition classes")
    _add_io(sp, "one")
    sp.set_defaults(fn=_cmd_classes)

    sp = subs.add_parser("classify", help="shape tag of an indecomposable")
    _add_io(sp, "one")
    sp.set_defaults(fn=_cmd_classify)

    sp = subs.add_parser("invariants", help="class-independent factor counts")
    _add_io(sp, "one")
    sp.set_defaults(fn=_cmd_invariants)

    sp = subs.add_parser("common", help="least common composite of two polynomials")
    _add_io(sp, "many")
    sp.add_argument("--bound", type=int, default=None, help="degree cap")
    sp.set_defaults(fn=_cmd_common)

    sp = subs.add_parser("cheb", help="Chebyshev polynomial T_n")
    sp.add_argument("n", type=int)
    _add_io(sp)
    sp.set_defaults(fn=_cmd_cheb)

    sp = subs.add_parser("odd", help="odd-monoid operations")
    osubs = sp.add_subparsers(dest="odd_command", required=True)
    op = osubs.add_parser("analyze", help="membership, irreducibility, classes")
    _add_io(op, "one")
    op.set_defaults(fn=_cmd_odd_analyze)
    op = osubs.add_parser("swap", help="name the swap pattern of two pairs")
    _add_io(op, "many")
    op.set_defaults(fn=_cmd_odd_swap)

    sp = subs.add_parser("cusp", help="cusp-semigroup operations")
    csubs = sp.add_subparsers(dest="cusp_command", required=True)
    cp = csubs.add_parser("report", help="length, index, defect, regularity")
    _add_io(cp, "one")
    cp.set_defaults(fn=_cmd_cusp_report)
    cp = csubs.add_parser("decs", help="all decompositions inside A")
    _add_io(cp, "one")
    cp.set_defaults(fn=_cmd_cusp_decs)
    cp = csubs.add_parser("move", help="apply a local rewrite move")
    _add_io(cp, "many")
    cp.add_argument("--position", type=int, required=True, help="1-based factor index")
    cp.add_argument(
        "--kind", choices=("adm", "ca", "cb", "cc"), required=True, help="move kind"
    )
    cp.add_argument(
        "--shift", type=Fraction, default=Fraction(0), help="rational shift parameter"
    )
    cp.set_defaults(fn=_cmd_cusp_move)

    sp = subs.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("--suite", choices=_SUITES, required=True)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument(
        "--trials", type=int, default=None, help="sample count (suite default if omitted)"
    )
    _add_io(sp)
    sp.set_defaults(fn=_cmd_verify)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except IrrationalRootRequiredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, PatternMismatchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
