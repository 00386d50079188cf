"""Command-line interface: classify, orbit, minimal, count, verify.

Exit codes: 0 success, 1 input error, 2 budget exhausted, 3 a theorem
check failed (implementation bug or mathematical surprise -- never
silently absorbed).
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .action import (GroupElement, NilMatrix, ScaledIdempotent,
                     act_right_elem)
from .census import (count_direct, d_polynomial, enumerate_main_sets,
                     max_delta, stratified_polynomial)
from .errors import BudgetError, InputError, ParseError, TheoremViolation
from .field import FieldSpec, parse_field_name
from .kernel import IMPLEMENTATION
from .minimality import analyze, monomial_sources, verify_upsilon
from .oracle import (OrbitVector, apply, degree_multiset,
                     no_linear_character_check, rank, scaled_root_idempotent)
from .orbits import (DEFAULT_ORBIT_CAP, VergeData, classify, orbit_bfs,
                     orbit_intersection_size, regular_checksum,
                     template_of_orbit)
from .rootcomb import b_count, tri_positions, tri_size

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_THEOREM = 0, 1, 2, 3


# ---------------------------------------------------------------- plumbing

def _field_of(args) -> FieldSpec:
    poly = None
    if getattr(args, "poly", None):
        try:
            # --poly c_k,...,c_0 (descending); storage is ascending
            poly = [int(c) for c in args.poly.split(",")][::-1]
        except ValueError:
            raise ParseError(f"cannot parse --poly {args.poly!r}") from None
    return parse_field_name(args.q, poly)


def _matrix_of(args, F: FieldSpec) -> NilMatrix:
    if getattr(args, "entries", None):
        raw = args.entries
    elif getattr(args, "matrix", None):
        with open(args.matrix) as fh:
            raw = fh.read()
    else:
        raise ParseError("provide --entries JSON or --matrix FILE")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from None
    if isinstance(data, dict):
        entries = data.get("entries", [])
        if "n" in data and data["n"] != args.n:
            raise ParseError("matrix n disagrees with --n")
    else:
        entries = data
    try:
        pairs = [((int(i), int(j)), int(c)) for i, j, c in entries]
    except (TypeError, ValueError):
        raise ParseError("entries must be [[i, j, code], ...]") from None
    return NilMatrix.of(args.n, F, pairs)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "text":
        for key, val in report.items():
            print(f"{key}: {val}")
    else:
        print(json.dumps(report, indent=2, sort_keys=True))


# ------------------------------------------------------------- subcommands

def cmd_classify(args) -> int:
    F = _field_of(args)
    A = _matrix_of(args, F)
    res = classify(A)
    report = res.to_json()
    if res.is_verge:
        v = VergeData.from_matrix(A)
        report.update({"a": v.a(), "b": v.b(),
                       "minimal_dim_exponent": v.a() - v.b()})
    else:
        o = orbit_bfs(A, "right", args.budget)
        t = template_of_orbit(o)
        report["verge_of_orbit"] = NilMatrix.of(
            A.n, F, [(p, c) for p, c in t.entries
                     if p in classify(t).main]).to_json()
    _emit(report, args.format)
    return EXIT_OK


def cmd_orbit(args) -> int:
    F = _field_of(args)
    A = _matrix_of(args, F)
    o = orbit_bfs(A, args.side, args.budget)
    report = {"size": len(o), "side": args.side,
              "is_verge": classify(A).is_verge, "kernel": IMPLEMENTATION}
    if args.side == "right":
        t = template_of_orbit(o)
        report["template"] = t.to_json()
        v = VergeData.from_matrix(NilMatrix.of(
            A.n, F, [(p, c) for p, c in t.entries if p in classify(t).main]))
        report.update({"a": v.a(), "b": v.b()})
    if args.list:
        report["members"] = [B.to_json()["entries"] for B in o.matrices()]
    _emit(report, args.format)
    return EXIT_OK


def cmd_minimal(args) -> int:
    F = _field_of(args)
    A = _matrix_of(args, F)
    v = VergeData.from_matrix(A)
    rep = analyze(v)
    report = rep.to_json()
    if rep.disconnected:
        report["sources"] = [s.to_json() for s in monomial_sources(v)]
    _emit(report, args.format)
    return EXIT_OK


def cmd_count(args) -> int:
    d = d_polynomial(args.n)
    report = {"n": args.n, "coefficients": d.to_json()}
    if args.stratify:
        report["strata"] = {
            str(delta): stratified_polynomial(args.n, delta).to_json()
            for delta in range(max_delta(args.n) + 1)}
    if args.check_q:
        checks = {}
        ok = True
        for q in (int(s) for s in args.check_q.split(",")):
            ev, direct = d.evaluate(q - 1), count_direct(args.n, q)
            checks[str(q)] = {"evaluation": ev, "direct": direct,
                              "match": ev == direct}
            ok = ok and ev == direct
        report["checks"] = checks
        if not ok:
            _emit(report, args.format)
            raise TheoremViolation("polynomial evaluation mismatch")
    _emit(report, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    F = _field_of(args)
    rng = random.Random(args.seed)
    if args.what == "upsilon":
        checks = {"upsilon": _check_upsilon(args.n, F, rng)}
    else:
        checks = run_suite(args.n, F, args.budget, rng)
    failed = [name for name, res in checks.items() if res.get("ok") is False]
    report = {"n": args.n, "q": F.name(), "checks": checks,
              "failed": failed, "kernel": IMPLEMENTATION}
    _emit(report, args.format)
    return EXIT_THEOREM if failed else EXIT_OK


# ------------------------------------------------------------ verify suite

def _all_verges(n: int, F: FieldSpec, fills: int, rng):
    """Verges over every main-condition set: the all-ones filling plus up
    to `fills` - 1 further value fills (all of them when few)."""
    for P in enumerate_main_sets(n):
        conds = list(P.conditions)
        total = (F.q - 1) ** len(conds)
        seen = {tuple([1] * len(conds))}
        yield VergeData.of(n, F, list(zip(conds, [1] * len(conds))))
        while len(seen) < min(total, fills):
            vals = tuple(rng.randrange(1, F.q) for _ in conds)
            if vals in seen:
                continue
            seen.add(vals)
            yield VergeData.of(n, F, list(zip(conds, vals)))


def _random_element(n: int, F: FieldSpec, rng) -> GroupElement:
    return GroupElement.of(
        n, F, [(p, rng.randrange(F.q)) for p in tri_positions(n)])


def _random_label(n: int, F: FieldSpec, rng) -> NilMatrix:
    return NilMatrix.of(
        n, F, [(p, rng.randrange(F.q)) for p in tri_positions(n)])


def _check_action_axiom(n, F, rng, samples=300):
    bad = 0
    for _ in range(samples):
        A = _random_label(n, F, rng)
        u, v = _random_element(n, F, rng), _random_element(n, F, rng)
        s = ScaledIdempotent.of(A)
        one = act_right_elem(act_right_elem(s, u), v)
        two = act_right_elem(s, u * v)
        three = act_right_elem(s, u * v, method="factors")
        if one != two or one != three:
            bad += 1
    return {"ok": bad == 0, "samples": samples, "failures": bad}


def _check_orbit_partition(n, F, budget, rng):
    total = F.q ** tri_size(n)
    if total > min(budget, 1 << 14):
        # too many labels: fall back to the orbit law on all verges
        sizes_ok = all(len(orbit_bfs(v.matrix(), "right", budget))
                       == F.q ** v.a()
                       for v in _all_verges(n, F, 2, rng))
        return {"ok": sizes_ok, "mode": "orbit-law"}
    seen = set()
    orbits = 0
    templates_ok = True
    from itertools import product as iproduct
    for fill in iproduct(range(F.q), repeat=tri_size(n)):
        A = NilMatrix.of(n, F, list(zip(tri_positions(n), fill)))
        if A.to_vec() in seen:
            continue
        o = orbit_bfs(A, "right", budget)
        if o.members & seen:
            return {"ok": False, "mode": "partition",
                    "error": "orbits overlap"}
        seen |= o.members
        orbits += 1
        template_of_orbit(o)  # raises unless exactly one
        templates_ok = templates_ok and classify(
            template_of_orbit(o)).is_template
    return {"ok": len(seen) == total and templates_ok,
            "mode": "partition", "orbits": orbits}


def _check_checksum(n, F, rng):
    return {"ok": regular_checksum(n, F)}


def _check_hom_dims(n, F, budget, rng):
    for v in _all_verges(n, F, 2, rng):
        orbit_intersection_size(v, budget)  # raises on mismatch
    return {"ok": True}


def _check_upsilon(n, F, rng, fills=8):
    bad = []
    for v in _all_verges(n, F, fills, rng):
        if not verify_upsilon(v):
            bad.append(v.values)
    return {"ok": not bad, "failures": [list(map(list, b)) for b in bad]}


def _check_rank(n, F, budget, rng):
    # the dim-2 endomorphism module of the two-hook verge, both characters
    if n < 4 or F.q != 2:
        return {"ok": True, "skipped": "needs n >= 4, q = 2"}
    from .oracle import CycNumber, pattern_group_elements
    from .rootcomb import PatternSet
    v = VergeData.of(4, F, [((3, 1), 1), ((4, 2), 1)])
    A = v.matrix()
    orbit = orbit_bfs(A, "right", budget)
    one = CycNumber.from_int(F.p, 1)
    ranks = {}
    # f lives at the perp image (s,j) of the single hat position (4,3)
    for beta in range(F.q):
        f = scaled_root_idempotent(F, 4, (2, 1), beta)
        vec = apply(OrbitVector.basis(orbit, A), f)
        span = [apply(vec, [(one, u)])
                for u in pattern_group_elements(PatternSet.full(4), F)]
        ranks[beta] = rank(span)
    ok = all(r == F.q ** (v.a() - 1) for r in ranks.values())
    return {"ok": ok, "ranks": {str(k): r for k, r in ranks.items()}}


def _check_degrees(n, F, budget, rng):
    from .minimality import is_hook_disconnected
    checked = 0
    for v in _all_verges(n, F, 1, rng):
        P = v.P
        if not P.conditions or not is_hook_disconnected(P):
            continue
        b = b_count(P)
        if b > 5 or F.q ** b > budget:
            continue
        mult = degree_multiset(v, budget)
        rep = analyze(v)
        if sum(nm * F.q ** (2 * m) for m, nm in mult.items()) != F.q ** b:
            return {"ok": False, "error": f"degree sum off for {P.conditions}"}
        if mult[0] != F.q ** rep.c:
            return {"ok": False, "error": f"n_0 != q^c for {P.conditions}"}
        checked += 1
    return {"ok": True, "verges": checked}


def _check_certificates(n, F, budget, rng):
    from .minimality import is_hook_disconnected, side_sets
    checked = 0
    for P in enumerate_main_sets(n):
        if is_hook_disconnected(P) or not P.conditions:
            continue
        if F.q ** len(side_sets(P).Lhat) > budget:
            continue
        v = VergeData.of(n, F, [(p, 1) for p in P.conditions])
        if not no_linear_character_check(v, budget):
            return {"ok": False,
                    "error": f"no certificate for connected {P.conditions}"}
        checked += 1
    return {"ok": True, "connected_sets": checked}


def run_suite(n: int, F: FieldSpec, budget: int, rng) -> dict:
    return {
        "action_axiom": _check_action_axiom(n, F, rng),
        "orbit_partition": _check_orbit_partition(n, F, budget, rng),
        "regular_checksum": _check_checksum(n, F, rng),
        "hom_dimensions": _check_hom_dims(n, F, budget, rng),
        "upsilon": _check_upsilon(n, F, rng),
        "rank": _check_rank(n, F, budget, rng),
        "degree_accounting": _check_degrees(n, F, budget, rng),
        "connected_certificates": _check_certificates(n, F, budget, rng),
    }


# ------------------------------------------------------------------- main

def _add_common(p, need_q=True):
    p.add_argument("--n", type=int, required=True)
    if need_q:
        p.add_argument("--q", required=True,
                       help='field name "p" or "p^k"')
        p.add_argument("--poly", help="c_k,...,c_0 field polynomial")
    p.add_argument("--budget", type=int, default=DEFAULT_ORBIT_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superverge",
        description="Monomial orbit modules of the unitriangular group")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="template/verge classification")
    _add_common(p)
    p.add_argument("--entries", help="inline [[i,j,code],...] JSON")
    p.add_argument("--matrix", help="matrix JSON file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="orbit enumeration")
    _add_common(p)
    p.add_argument("--entries")
    p.add_argument("--matrix")
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("minimal", help="minimal-constituent analysis")
    _add_common(p)
    p.add_argument("--entries")
    p.add_argument("--matrix", "--verge", dest="matrix")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("count", help="counting polynomial d_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stratify", action="store_true")
    p.add_argument("--check-q", dest="check_q")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="verification suites")
    p.add_argument("what", choices=("suite", "upsilon"))
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremViolation as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
