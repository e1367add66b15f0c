"""plroots command line: build constructions, run certificate suites, evaluate maps.

Exit status is 0 when every certificate row passes, 1 on usage or I/O
errors and 2 when a verification fails.
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import hallneumann as hn
from .constructions import (
    Row,
    Step2Error,
    build_square_root_of_F,
    certify_mainsub,
    default_step2_pair,
    kappa_y,
    lamplighter_root,
    random_bump,
    random_equation_inputs,
    random_pushing_bump,
    skew_root_of_translation,
    squeezed_P_inputs,
    table,
    uncountable_pipeline,
    verify_step2,
)
from .constructions.inputs import random_root
from .plcore import ETPL, ClassMismatchError, IncomparableError, IntervalQ, OrbitError, disagreement, fmt
from .plcore.intervals import Q
from .serialize import ArtifactError, bundle_maps, load, make_bundle, save
from .thompson import check_nested_left, check_nested_right, classic_orientation, in_P_kernel, relator_certificate, \
    standard_F_generators
from .words import (WordSyntaxError, UnboundGeneratorError, builtin, check_presentation, commutator,
                    evaluate_word, formal_square_root, free_reduce, parse_word)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# inputs

def load_map(spec: str, default_key: str | None = None):
    """FILE, FILE:KEY (a map inside a bundle) or the literal "id"."""
    if spec == "id":
        return ETPL.identity()
    path, key = spec, default_key
    if ":" in spec:
        head, tail = spec.rsplit(":", 1)
        if tail and "/" not in tail:
            path, key = head, tail
    try:
        kind, value = load(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
    except ArtifactError as e:
        raise UsageError(f"{path}: {e}") from e
    if kind == "map":
        return value
    if kind == "bundle":
        maps = bundle_maps(value)
        if key in maps:
            return maps[key]
        raise UsageError(f"{path} is a bundle; pick a map with {path}:KEY, one of {sorted(maps)}")
    raise UsageError(f"{path} holds a {kind}, not a map")


def parse_point(text: str) -> Fraction:
    try:
        return Q(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"not an exact rational: {text!r}") from e


def parse_bindings(items) -> dict:
    out = {}
    for item in items or ():
        name, sep, spec = item.partition("=")
        if not sep or not name:
            raise UsageError(f"--bind expects NAME=FILE, got {item!r}")
        out[name] = load_map(spec, default_key=name)
    return out


def _report(title: str, rows, out=None) -> bool:
    out = out or sys.stdout
    rows = list(rows)
    ok = all(r.ok for r in rows)
    print(f"== {title}", file=out)
    if rows:
        print(table(rows), file=out)
    print(f"-- {sum(r.ok for r in rows)}/{len(rows)} pass", file=out)
    return ok


def _failed_names(certs: dict) -> str:
    return ", ".join(r.name for rows in certs.values() for r in rows if not r.ok)


def _write(args, kind, value):
    if args.out:
        try:
            save(args.out, kind, value)
        except OSError as e:
            raise UsageError(f"cannot write {args.out}: {e.strerror or e}") from e


# builders: each returns (kind, value, certificate dict)

def _pair_from_files(args):
    """--f and --g; a bundle passed to --f also supplies g when --g is absent."""
    f = load_map(args.f, "f") if args.f else None
    g = load_map(args.g, "g") if args.g else None
    if args.f and not args.g and ":" not in args.f and args.f != "id":
        kind, value = load(args.f)
        if kind == "bundle":
            g = bundle_maps(value).get("g")
    return f, g


def _build_step2(args):
    f, g = _pair_from_files(args)
    f, g = default_step2_pair(f, g)
    rows = [Row(n, ok, d) for n, ok, d in verify_step2(f, g)]
    return "bundle", make_bundle("step2", {"f": f, "g": g}, {"step2": rows}), {"step2": rows}


def _h_inputs(args):
    if args.h_source == "squeezed-P":
        return squeezed_P_inputs()
    h1 = load_map(args.h1, "h1") if args.h1 else None
    h2 = load_map(args.h2, "h2") if args.h2 else None
    return h1, h2


def _square_root_payload(b, name="square-root-of-f", extra=None):
    maps = {k: getattr(b, k) for k in ("f", "g", "h1", "h2", "h3", "lam1", "lam2", "p1", "p2", "q1", "q2")}
    maps.update(extra or {})
    return make_bundle(name, maps, b.certificates)


def _build_square_root(args):
    h1, h2 = _h_inputs(args)
    f, g = _pair_from_files(args)
    b = build_square_root_of_F(h1, h2, f, g)
    return "bundle", _square_root_payload(b), b.certificates


def _build_kappa_y(args):
    mu, nu, chi, xi = random_equation_inputs(args.seed)
    e = kappa_y(mu, nu, chi, xi)
    maps = {k: getattr(e, k) for k in ("mu", "nu", "chi", "xi", "psi", "phi", "kappa", "y", "alpha", "beta")}
    certs = {"equation": list(e.rows)}
    return "bundle", make_bundle("kappa-y", maps, certs, {"seed": args.seed}), certs


def _build_uncountable(args):
    u = uncountable_pipeline(*random_equation_inputs(args.seed))
    certs = {"uncountable": list(u.rows)}
    maps = {"kappa": u.equation.kappa, "y": u.equation.y, "k1": u.k1, "k2": u.k2}
    return "bundle", make_bundle("uncountable", maps, certs, {"seed": args.seed}), certs


def _skew_inputs(n, seed):
    rng = random.Random(seed)
    return [random_bump(rng, 0, 1) for _ in range(n)]


def _build_skew(args):
    s = skew_root_of_translation(*_skew_inputs(args.n, args.seed))
    maps = {f"h{i}": h for i, h in enumerate(s.inputs, 1)}
    maps.update({f"T{i}": T for i, T in enumerate(s.T, 1)})
    maps.update({f"S{i}": S for i, S in enumerate(s.S, 1)})
    certs = {"zn": list(s.rows)}
    return "bundle", make_bundle("skew-root", maps, certs, {"n": args.n, "seed": args.seed}), certs


def _lamplighter_inputs(seed):
    rng = random.Random(seed)
    return random_bump(rng, 0, 1), random_bump(rng, 0, 1)


def _build_lamplighter(args):
    L = lamplighter_root(*_lamplighter_inputs(args.seed))
    certs = {"lamplighter": list(L.rows)}
    maps = {"g1": L.g1, "g2": L.g2, "psi": L.psi, "T": L.T}
    return "bundle", make_bundle("lamplighter-root", maps, certs, {"seed": args.seed}), certs


def _build_formal_sqrt(args):
    name = args.presentation
    if name in ("F_ab", "F_AB"):
        P = builtin(name)
    else:
        try:
            kind, P = load(name)
        except (OSError, ArtifactError) as e:
            raise UsageError(f"cannot load presentation {name!r}: {e}") from e
        if kind != "presentation":
            raise UsageError(f"{name} holds a {kind}, not a presentation")
    R = formal_square_root(P)
    rows = [Row("every original generator is a square", all(
        any(r.letters == ((x, 1), (y, -2)) for r in R.relators) for x, y in zip(P.generators, R.generators)))]
    print(R)
    return "presentation", R, {"formal-sqrt": rows}


def _hn_context(args) -> hn.HNContext:
    X = frozenset(int(k) for k in args.X.split(",") if k.strip()) if args.X else frozenset()
    return hn.HNContext(X, args.cofinite)


def _build_hn(args):
    ctx = _hn_context(args)
    x = hn.hn_reduce_word(args.word, ctx)
    img = hn.hn_skew_image(x, ctx)
    rows = [Row("skew image is an involution", hn.hn_skew_image(img, ctx) == x)]
    print(f"{ctx}: {hn.hn_print(x)}")
    print(f"skew image: {hn.hn_print(img)}")
    params = {"word": args.word, "context": str(ctx), "normal_form": hn.hn_print(x), "skew_image": hn.hn_print(img)}
    return "bundle", make_bundle("hn", {}, {"hn": rows}, params), {"hn": rows}


BUILDERS = {
    "step2": _build_step2,
    "square-root-of-f": _build_square_root,
    "kappa-y": _build_kappa_y,
    "uncountable": _build_uncountable,
    "skew-root": _build_skew,
    "lamplighter-root": _build_lamplighter,
    "formal-sqrt": _build_formal_sqrt,
    "hn": _build_hn,
}


def cmd_build(args) -> int:
    try:
        kind, value, certs = BUILDERS[args.name](args)
    except Step2Error as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    for title, rows in certs.items():
        _report(title, rows)
    _write(args, kind, value)
    failed = _failed_names(certs)
    if failed:
        print(f"verification failed: {failed}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# verification suites: each returns a dict title -> rows

def _suite_dyn(args):
    a, b = standard_F_generators()
    cert = relator_certificate(a, b)
    rows = [Row(f"classic pair orientation: {classic_orientation()}", True),
            Row("F_ab relators for the classic pair", cert.report.passed),
            Row("classic pair does not commute", not cert.report.commuting)]
    back = {k: evaluate_word(v, {"a": a, "b": b}) for k, v in builtin("tietze_AB_to_ab").items()}
    rep = check_presentation(builtin("F_AB"), back)
    rows.append(Row("F_AB relators after the Tietze transport", rep.passed))
    b = _bundle_or_default(args)
    return {"classic pair": rows, "dyn criterion (lambda1^2, lambda2^2)": b.certificates["dyn"]}


def _bundle_or_default(args):
    if getattr(args, "bundle", None):
        maps = {k: load_map(f"{args.bundle}:{k}") for k in ("f", "g", "h1", "h2")}
        return build_square_root_of_F(maps["h1"], maps["h2"], maps["f"], maps["g"])
    return build_square_root_of_F(*squeezed_P_inputs())


def _suite_nested(args):
    b = _bundle_or_default(args)
    from .constructions.square_root import J1_SUP, J14_INF, LEFT, RIGHT
    cl = check_nested_left(b.p1, b.p2, 0, J1_SUP, LEFT.hi)
    cr = check_nested_right(b.q1, b.q2, RIGHT.lo, J14_INF, 3)
    out = {}
    for title, cert in (("nestedL (p1, p2)", cl), ("nestedR (q1, q2)", cr)):
        rows = [Row(n, ok, d) for n, ok, d in cert.hypotheses]
        rows.append(Row("F relators", cert.report is not None and cert.report.passed))
        rows.append(Row("non-commutation", cert.report is not None and not cert.report.commuting))
        out[title] = rows
    return out


def _suite_mainsub(args):
    return {"mainsub": certify_mainsub(_bundle_or_default(args))}


def _suite_equation(args):
    rows = []
    for i in range(args.trials):
        seed = args.seed + i
        e = kappa_y(*random_equation_inputs(seed))
        bad = [r.name for r in e.rows if not r.ok]
        rows.append(Row(f"seed {seed}: w(tau, y) = kappa and {len(e.rows) - 1} component rows", not bad,
                        f"failed: {bad}" if bad else ""))
    return {"equation": rows}


def _suite_zn(args):
    rows = []
    for i in range(args.trials):
        s = skew_root_of_translation(*_skew_inputs(args.n, args.seed + i))
        bad = [r.name for r in s.rows if not r.ok]
        rows.append(Row(f"seed {args.seed + i}: n = {args.n}, {len(s.rows)} rows", not bad, f"failed: {bad}" if bad else ""))
    return {"zn": rows}


def _suite_lamplighter(args):
    return {"lamplighter": list(lamplighter_root(*_lamplighter_inputs(args.seed)).rows)}


def _suite_root(args):
    rng = random.Random(args.seed)
    rows = []
    for i in range(args.trials):
        n = rng.choice((2, 3, 4))
        base = random_pushing_bump(rng, 0, 1)
        r1, r2 = random_root(rng, base, n), random_root(rng, base, n)
        wit = r1.fundamental_domain_check()
        D = IntervalQ.closed(r1.divisions[0], r1.divisions[-1])
        diff = disagreement(r1, r2, D)
        rows.append(Row(f"trial {i}: degree {n}", wit is None and diff is not None,
                        f"distinct choices differ at {diff}"))
    return {"root": rows}


def _suite_hn(args):
    bound = args.bound
    rel = [(k, x) for k, x in hn.relator_instances(bound)]
    rows = [
        Row(f"relator schemas trivial for |i|,|j|,|k| <= {bound}", all(x.is_identity for _, x in rel)),
        Row("skew image of every relator instance is trivial", all(hn.hn_skew_image(x).is_identity for _, x in rel)),
    ]
    samples = [hn.t_gen(), hn.s_gen(0), hn.u_gen(1), hn.hn_reduce_word("t s^2 t^-3 s^-1 t s"),
               hn.hn_reduce_word("[s, t s t^-1] t^2 s")]
    rows.append(Row("skew image is an involution on samples",
                    all(hn.hn_skew_image(hn.hn_skew_image(x)) == x for x in samples)))
    u1 = hn.hn_reduce_word("[s, t^-1 s t]")
    rows.append(Row("u1 nontrivial in Gamma", not u1.is_identity, hn.hn_print(u1)))
    rows.append(Row("u1 trivial in N_{1}", hn.hn_reduce_word("[s, t^-1 s t]", hn.HNContext({1})).is_identity))
    return {"hn": rows}


def _suite_kernel_w(args):
    w = builtin("w")
    rows = [
        Row("w lies in the kernel of F_2 -> P", in_P_kernel(w)),
        Row("s is not in the kernel", not in_P_kernel(parse_word("s"))),
        Row("[s, t] is not in the kernel", not in_P_kernel(commutator(parse_word("s"), parse_word("t")))),
        Row("w is a nontrivial reduced word", bool(free_reduce(w)), f"{len(free_reduce(w))} letters"),
    ]
    return {"kernel-w": rows}


SUITES = {
    "dyn-criterion": _suite_dyn,
    "nested": _suite_nested,
    "mainsub": _suite_mainsub,
    "equation": _suite_equation,
    "zn": _suite_zn,
    "lamplighter": _suite_lamplighter,
    "hn": _suite_hn,
    "kernel-w": _suite_kernel_w,
    "root": _suite_root,
}


def cmd_verify(args) -> int:
    certs = SUITES[args.suite](args)
    ok = True
    for title, rows in certs.items():
        ok &= _report(title, rows)
    if not ok:
        print(f"verification failed: {_failed_names(certs)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_eval(args) -> int:
    x = parse_point(args.at)
    if args.map:
        f = load_map(args.map)
    elif args.word:
        try:
            w = parse_word(args.word)
        except WordSyntaxError as e:
            raise UsageError(str(e)) from e
        f = evaluate_word(w, parse_bindings(args.bind))
    else:
        raise UsageError("eval needs --map or --word")
    print(fmt(f(x)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="plroots", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a named construction and write it to a file")
    b.add_argument("name", choices=sorted(BUILDERS))
    b.add_argument("--out")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--f", help="map file for f (FILE or FILE:KEY)")
    b.add_argument("--g", help="map file for g")
    b.add_argument("--h1", help="'id' or a map file")
    b.add_argument("--h2", help="'id' or a map file")
    b.add_argument("--h-source", choices=("files", "squeezed-P"), default="files")
    b.add_argument("--n", type=int, default=3, help="number of h inputs for skew-root")
    b.add_argument("--presentation", default="F_ab", help="F_ab, F_AB or a presentation file")
    b.add_argument("--word", default="[s, t^-1 s t]", help="word in t, s for the hn builder")
    b.add_argument("--X", default="", help="comma-separated quotient set for hn")
    b.add_argument("--cofinite", action="store_true", help="read --X as the complement of the quotient set")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run a certificate suite and print its table")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--bound", type=int, default=8)
    v.add_argument("--bundle", help="square-root bundle file (for dyn-criterion, nested, mainsub)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a map or a word at an exact rational")
    e.add_argument("--map", help="map file, FILE:KEY or 'id'")
    e.add_argument("--word")
    e.add_argument("--bind", action="append", metavar="NAME=FILE[:KEY]")
    e.add_argument("--at", required=True, metavar="P/Q")
    e.set_defaults(func=cmd_eval)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ClassMismatchError, IncomparableError, UnboundGeneratorError, OrbitError, WordSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ArtifactError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
