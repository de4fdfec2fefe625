"""Command-line interface: structure-file ingestion, subcommand dispatch,
canonical JSON reports on stdout and a short human summary on stderr.

Exit codes: 0 computed, 1 property fails or nothing found, 2 input error,
3 bound exhausted (unknown)."""

import argparse
import json
import os
import sys

from . import growth as growth_mod
from .congruences import (NO_PAIR_CONGRUENCE, NoPairCongruence, diagonal,
                          enumerate_congruences, generate_congruence,
                          prime_spectrum_krull, radical as radical_op)
from .errors import (BoundExhausted, NO, PairAlgError, PreconditionError,
                     StructureError, UNKNOWN, YES)
from .extensions import ExtensionPair, is_algebraic, is_congruence_algebraic, is_integral
from .fractions import build_fraction_pair, check_ore
from .hyper import (A0_CONTAINS_ZERO, A0_SIZE_GE_TWO, krasner_quotient,
                    powerset_pair, verify_semihypergroup, verify_semihyperring)
from .pairs import is_shallow, property_n_status, verify_admissible
from .polynomials import (Polynomial, build_polynomial_pair, find_preceq_roots,
                          parse_poly)
from .semirings import (boolean_semiring, double, nmax_trunc, nat_plus_times,
                        supertropical_extension, supertropical_integers,
                        supertropical_naturals, trivial_monoid,
                        verify_semiring_axioms)
from .pairs import SemiringPair
from .structio import load_structures, serialize_structures
from .hyper import SemiHyperring

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BOUND = 3

DEFAULT_WINDOW = int(os.environ.get("PAIRALG_WINDOW", "20"))


def builtin_structures(name):
    if name == "boolean":
        s = boolean_semiring()
        return {"semiring": s,
                "pair": SemiringPair(s, [s.zero], [s.one], name="boolean")}
    if name == "double-boolean":
        p = double(boolean_semiring())
        return {"semiring": p.carrier, "pair": p}
    if name == "supertropical3":
        p = supertropical_extension(trivial_monoid())
        return {"semiring": p.carrier, "pair": p}
    if name == "nmax3":
        return {"semiring": nmax_trunc(3)}
    if name == "supertropical-naturals":
        p = supertropical_naturals()
        return {"semiring": p.carrier, "pair": p}
    if name == "supertropical-integers":
        p = supertropical_integers()
        return {"semiring": p.carrier, "pair": p}
    if name == "nat-plus-times":
        s = nat_plus_times()
        return {"semiring": s,
                "pair": SemiringPair(s, a0=lambda x: x == 0,
                                     tangibles=lambda x: x != 0,
                                     name="nat_plus_times")}
    return None


def load_input(spec):
    built = builtin_structures(spec)
    if built is not None:
        return built
    if not os.path.exists(spec):
        raise StructureError("no such file or builtin structure: %r" % spec)
    return load_structures(spec)


def need(structs, kind, spec):
    if kind not in structs:
        raise StructureError("input %r has no [%s] section" % (spec, kind))
    return structs[kind]


def jsonable(x):
    if hasattr(x, "as_json"):
        return jsonable(x.as_json())
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = list(x)
        if isinstance(x, (set, frozenset)):
            items = sorted(items, key=repr)
        return [jsonable(v) for v in items]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


def emit(report, summary, code):
    print(json.dumps(jsonable(report), sort_keys=True, indent=2))
    print(summary, file=sys.stderr)
    return code


def verdict_code(v):
    if v.status == YES:
        return EXIT_OK
    if v.status == NO:
        return EXIT_FAIL
    return EXIT_BOUND


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_verify(args):
    structs = load_input(args.structure)
    reports = {}
    ok = True
    if "hyper" in structs:
        h = structs["hyper"]
        rep = (verify_semihyperring(h) if isinstance(h, SemiHyperring)
               else verify_semihypergroup(h))
        reports["hyper"] = rep
        ok = ok and rep.valid
    if "semiring" in structs:
        rep = verify_semiring_axioms(structs["semiring"], window=args.window)
        reports["semiring"] = rep
        ok = ok and rep.valid
    if "pair" in structs:
        rep = verify_admissible(structs["pair"], window=args.window)
        reports["pair"] = rep
        ok = ok and rep.valid
    return emit({"command": "verify", "input": args.structure,
                 "reports": reports, "valid": ok},
                "verify %s: %s" % (args.structure, "ok" if ok else "FAILED"),
                EXIT_OK if ok else EXIT_FAIL)


def cmd_shallow(args):
    p = need(load_input(args.structure), "pair", args.structure)
    flag = is_shallow(p, window=args.window)
    report = {"command": "shallow", "input": args.structure, "shallow": flag}
    if not p.finite:
        report["window"] = args.window
    return emit(report, "shallow: %s" % flag, EXIT_OK if flag else EXIT_FAIL)


def cmd_property_n(args):
    p = need(load_input(args.structure), "pair", args.structure)
    status = property_n_status(p, window=args.window)
    code = EXIT_OK if status.status != "none" else EXIT_FAIL
    return emit({"command": "property-n", "input": args.structure,
                 "result": status},
                "property-n: %s" % status.status, code)


def cmd_congruences(args):
    p = need(load_input(args.structure), "pair", args.structure)
    congs = enumerate_congruences(p)
    return emit({"command": "congruences", "input": args.structure,
                 "count": len(congs),
                 "congruences": [c.as_json() for c in congs]},
                "%d pair-congruences" % len(congs), EXIT_OK)


def cmd_spectrum(args):
    p = need(load_input(args.structure), "pair", args.structure)
    spec = prime_spectrum_krull(p)
    dim = spec["krull_dimension"]
    summary = "%d primes, Krull dimension %s" % (len(spec["primes"]),
                                                 "undefined" if dim is None
                                                 else dim)
    return emit({"command": "spectrum", "input": args.structure,
                 "prime_count": len(spec["primes"]),
                 "primes": [c.as_json() for c in spec["primes"]],
                 "semiprime_count": spec["semiprime_count"],
                 "krull_dimension": dim},
                summary, EXIT_OK if spec["primes"] else EXIT_FAIL)


def cmd_krull(args):
    p = need(load_input(args.structure), "pair", args.structure)
    spec = prime_spectrum_krull(p)
    dim = spec["krull_dimension"]
    if dim is None:
        return emit({"command": "krull", "input": args.structure,
                     "krull_dimension": None},
                    "no primes; Krull dimension undefined", EXIT_FAIL)
    return emit({"command": "krull", "input": args.structure,
                 "krull_dimension": dim},
                "Krull dimension %d" % dim, EXIT_OK)


def _parse_seed_pairs(p, text):
    if not hasattr(p.carrier, "index"):
        raise StructureError("seed pairs need a finite labelled carrier")
    seeds = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise StructureError("seed %r is not 'a,b'" % chunk)
        seeds.append((p.carrier.index(parts[0].strip()),
                      p.carrier.index(parts[1].strip())))
    return seeds


def cmd_radical(args):
    p = need(load_input(args.structure), "pair", args.structure)
    try:
        if args.generators:
            base = generate_congruence(p, _parse_seed_pairs(p, args.generators))
        else:
            base = diagonal(p)
    except NoPairCongruence as exc:
        return emit({"command": "radical", "input": args.structure,
                     "radical": NO_PAIR_CONGRUENCE,
                     "witness": jsonable(exc.witness)},
                    "generators close onto T x A0", EXIT_FAIL)
    rad = radical_op(base)
    if rad == NO_PAIR_CONGRUENCE:
        return emit({"command": "radical", "input": args.structure,
                     "radical": NO_PAIR_CONGRUENCE},
                    "radical: no pair-congruence", EXIT_FAIL)
    return emit({"command": "radical", "input": args.structure,
                 "radical": rad.as_json()},
                "radical has %d pairs" % len(rad.relation), EXIT_OK)


def cmd_polyroots(args):
    p = need(load_input(args.structure), "pair", args.structure)
    f = parse_poly(p, args.poly)
    roots = find_preceq_roots(f, p.elements(args.window))
    labels = [p.label(r[0]) for r in roots]
    report = {"command": "polyroots", "input": args.structure,
              "poly": args.poly, "roots": labels}
    if not p.finite:
        report["window"] = args.window
    return emit(report, "%d roots" % len(roots),
                EXIT_OK if roots else EXIT_FAIL)


def cmd_localize(args):
    p = need(load_input(args.structure), "pair", args.structure)
    if not p.finite:
        raise StructureError("localize expects a finite structure file")
    S = [p.carrier.index(lab) for lab in args.s_subset.split()]
    ore = check_ore(p, S, window=args.window)
    if ore.status == NO:
        return emit({"command": "localize", "input": args.structure,
                     "ore": ore}, "denominator set fails the common-multiple "
                    "condition", EXIT_FAIL)
    fp = build_fraction_pair(p, S, window=args.window)
    c = fp.carrier
    report = {
        "command": "localize", "input": args.structure,
        "s_subset": args.s_subset, "ore": ore,
        "elements": list(c.labels),
        "zero": c.labels[c.zero], "one": c.labels[c.one],
        "a0": [c.labels[i] for i in fp.a0_elements()],
        "tangibles": [c.labels[i] for i in fp.tangible_elements()],
        "add": [[c.labels[v] for v in row] for row in c.add_table],
        "mul": [[c.labels[v] for v in row] for row in c.mul_table],
    }
    return emit(report, "fraction pair with %d classes" % c.n, EXIT_OK)


def cmd_classify_element(args):
    p = need(load_input(args.structure), "pair", args.structure)
    polypair = build_polynomial_pair(p, nvars=1)
    ext = ExtensionPair(p, polypair,
                        embed=lambda a: Polynomial.constant(p, 1, a))
    y = parse_poly(p, args.element)
    integral = is_integral(ext, y, degree_bound=args.degree, window=args.window)
    algebraic = is_algebraic(ext, y, degree_bound=args.degree,
                             window=args.window)
    cong_alg = is_congruence_algebraic(ext, y, degree_bound=args.degree,
                                       window=args.window)
    if integral.status == YES:
        kind = "integral"
    elif algebraic.status == YES:
        kind = "algebraic"
    elif cong_alg.status == YES:
        kind = "congruence-algebraic"
    else:
        kind = "transcendental at bound"
    report = {"command": "classify-element", "input": args.structure,
              "element": args.element, "classification": kind,
              "integral": integral, "algebraic": algebraic,
              "congruence_algebraic": cong_alg,
              "degree_bound": args.degree, "window": args.window}
    code = EXIT_OK
    if kind == "transcendental at bound":
        code = (EXIT_BOUND if UNKNOWN in (integral.status, algebraic.status,
                                          cong_alg.status) else EXIT_FAIL)
    return emit(report, "classification: %s" % kind, code)


def _growth_model(args):
    sizes = [("free", args.free_letters), ("commutative", args.poly_letters),
             ("matrix_units", args.matrix_units)]
    chosen = [(kind, n) for kind, n in sizes if n is not None]
    if len(chosen) != 1:
        raise StructureError("pick exactly one of --free-letters, "
                             "--poly-letters, --matrix-units")
    kind, n = chosen[0]
    return growth_mod.build_model(kind, n)


def cmd_growth(args):
    profile = growth_mod.growth_sequence(_growth_model(args), args.kmax)
    code = EXIT_BOUND if profile.truncated else EXIT_OK
    return emit({"command": "growth", "profile": profile},
                "d = %s" % profile.d, code)


def cmd_hilbert(args):
    profile = growth_mod.growth_sequence(_growth_model(args), args.kmax)
    series = growth_mod.hilbert_series(profile)
    return emit({"command": "hilbert", "model": profile.model.name,
                 "kmax": args.kmax, "coefficients": series["coefficients"]},
                "coefficients %s" % series["coefficients"],
                EXIT_BOUND if profile.truncated else EXIT_OK)


def cmd_gk(args):
    profile = growth_mod.growth_sequence(_growth_model(args), args.kmax)
    est = growth_mod.gk_dimension(profile)
    summary = ("divergent (exponential growth)" if est["divergent"]
               else "GK estimate %.3f" % est["estimate"])
    return emit({"command": "gk", "model": profile.model.name,
                 "result": est}, summary, EXIT_OK)


def cmd_ore_witness(args):
    structs = load_input(args.structure)
    p = need(structs, "pair", args.structure)

    def grab(text):
        if p.finite:
            return p.carrier.index(text)
        return ("t", int(text))

    a1, a2 = grab(args.a1), grab(args.a2)
    v = growth_mod.ore_witness(p, a1, a2, degree_bound=args.degree,
                               window=args.window)
    summary = ("witness b1=%r b2=%r" % (v.witness["b1"], v.witness["b2"])
               if v.status == YES else "no witness at degree bound")
    return emit({"command": "ore-witness", "input": args.structure,
                 "a1": args.a1, "a2": args.a2, "result": v},
                summary, verdict_code(v))


def cmd_krasner(args):
    structs = load_input(args.structure)
    s = need(structs, "semiring", args.structure)
    g = [s.index(lab) for lab in args.subgroup.split()]
    h = krasner_quotient(s, g)
    rep = verify_semihyperring(h)
    return emit({"command": "krasner", "input": args.structure,
                 "subgroup": args.subgroup,
                 "quotient": serialize_structures({"hyper": h}),
                 "verify": rep},
                "quotient has %d classes, %s" % (h.n, "valid" if rep.valid
                                                 else "INVALID"),
                EXIT_OK if rep.valid else EXIT_FAIL)


def cmd_powerset(args):
    structs = load_input(args.structure)
    h = need(structs, "hyper", args.structure)
    choice = (A0_SIZE_GE_TWO if args.a0_choice == "size_ge_two"
              else A0_CONTAINS_ZERO)
    p = powerset_pair(h, choice)
    rep = verify_admissible(p)
    c = p.carrier
    return emit({"command": "powerset", "input": args.structure,
                 "a0_choice": args.a0_choice,
                 "elements": [c.label(x) for x in c.elements()],
                 "a0": [c.label(x) for x in p.a0_elements()],
                 "tangibles": [c.label(x) for x in p.tangible_elements()],
                 "shallow": is_shallow(p), "verify": rep},
                "powerset pair with %d elements, %s" %
                (len(list(c.elements())), "valid" if rep.valid else "INVALID"),
                EXIT_OK if rep.valid else EXIT_FAIL)


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="pairalg",
        description="Computations with semiring pairs: verification, "
        "congruence spectra, localization, growth.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, structure=True, **extra):
        sp = sub.add_parser(name)
        if structure:
            sp.add_argument("structure",
                            help="structure file or builtin name")
        sp.add_argument("--window", type=int, default=DEFAULT_WINDOW)
        sp.add_argument("--json", action="store_true",
                        help="suppress the stderr summary")
        sp.set_defaults(fn=fn)
        return sp

    add("verify", cmd_verify)
    add("shallow", cmd_shallow)
    add("property-n", cmd_property_n)
    add("congruences", cmd_congruences)
    add("spectrum", cmd_spectrum)
    add("krull", cmd_krull)

    sp = add("radical", cmd_radical)
    sp.add_argument("--generators", default="",
                    help="seed pairs 'a,b;c,d' (default: diagonal)")

    sp = add("polyroots", cmd_polyroots)
    sp.add_argument("--poly", required=True,
                    help="polynomial such as 'x^2 + 1*x + 4'")

    sp = add("localize", cmd_localize)
    sp.add_argument("--s-subset", required=True,
                    help="denominator labels, whitespace separated")

    sp = add("classify-element", cmd_classify_element)
    sp.add_argument("--element", required=True,
                    help="polynomial expression for the element")
    sp.add_argument("--degree", type=int, default=3)

    for name, fn in (("growth", cmd_growth), ("hilbert", cmd_hilbert),
                     ("gk", cmd_gk)):
        sp = add(name, fn, structure=False)
        sp.add_argument("--free-letters", type=int)
        sp.add_argument("--poly-letters", type=int)
        sp.add_argument("--matrix-units", type=int)
        sp.add_argument("--kmax", type=int, default=8)

    sp = add("ore-witness", cmd_ore_witness)
    sp.add_argument("--a1", required=True)
    sp.add_argument("--a2", required=True)
    sp.add_argument("--degree", type=int, default=2)

    sp = add("krasner", cmd_krasner)
    sp.add_argument("--subgroup", required=True,
                    help="subgroup element labels, whitespace separated")

    sp = add("powerset", cmd_powerset)
    sp.add_argument("--a0-choice", default="contains_zero",
                    choices=["contains_zero", "size_ge_two"])

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "json", False):
        sys.stderr = open(os.devnull, "w")
    try:
        return args.fn(args)
    except (StructureError, PreconditionError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except BoundExhausted as exc:
        print("bound exhausted: %s" % exc, file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
