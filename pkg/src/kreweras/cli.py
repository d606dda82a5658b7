"""Command-line entry point: ``kreweras <command> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bump, enumeration, growth, render, verify, web, words
from .errors import KrewerasError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=False))
    else:
        print(text)


def _need(args, name: str):
    val = getattr(args, name, None)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return val


def _word(args) -> str:
    return words.validate(_need(args, "word"))


def _n(args) -> int:
    n = _need(args, "n")
    if n < 0:
        raise UsageError("--n must be nonnegative")
    return n


def _write_svg(path: str, svg: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg)


def cmd_count(args) -> int:
    n = _n(args)
    out = {"n": n, "kreweras": enumeration.kreweras_count(n)}
    if n >= 1:
        out["connected"] = enumeration.connected_count(n)
        out["connected_webs"] = enumeration.connected_web_count(n)
    _emit(out, args.json, str(out["kreweras"]))
    return EXIT_OK


def cmd_gen(args) -> int:
    n = _n(args)
    if args.samples is not None:
        rng = random.Random(args.seed)
        ws = [words.random_word(n, rng) for _ in range(args.samples)]
    else:
        ws = list(words.enumerate_words(n))
    _emit(ws, args.json, "\n".join(ws))
    return EXIT_OK


def cmd_promote(args) -> int:
    w = _word(args)
    steps = 1 if args.steps is None else args.steps
    out = words.promote_power(w, steps)
    _emit({"n": len(out) // 3, "word": out, "steps": steps}, args.json, out)
    return EXIT_OK


def cmd_evacuate(args) -> int:
    w = _word(args)
    out = words.evacuate(w)
    _emit({"n": len(out) // 3, "word": out}, args.json, out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    w = _word(args)
    orb = words.orbit(w)
    _emit({"word": w, "size": len(orb), "orbit": orb}, args.json, "\n".join(orb))
    return EXIT_OK


def cmd_bump(args) -> int:
    w = _word(args)
    if not w:
        raise UsageError("bump needs a nonempty word")
    d = bump.bump_diagram(w)
    if args.svg:
        _write_svg(args.svg, render.bump_svg(d))
    sigma, eps = bump.trip_permutation(w)
    data = bump.to_dict(d)
    data["sigma"] = list(sigma)
    data["epsilon"] = list(eps)
    text = "\n".join(
        [
            "blue:    " + " ".join(f"({a.opener},{a.closer})" for a in d.blue),
            "crimson: " + " ".join(f"({a.opener},{a.closer})" for a in d.crimson),
            "crossings: "
            + " ".join(
                f"{{({x.outer.opener},{x.outer.closer}),({x.inner.opener},{x.inner.closer})}}:{x.kind}"
                for x in d.crossings
            ),
            "sigma:   " + " ".join(map(str, sigma)),
            "epsilon: " + " ".join(eps),
        ]
    )
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_growth(args) -> int:
    w = _word(args)
    if not w:
        raise UsageError("growth needs a nonempty word")
    g = growth.growth_window(w, args.steps)
    _emit(g.to_dict(), args.json, g.to_text())
    return EXIT_OK


def cmd_web(args) -> int:
    w = _word(args)
    if not w:
        raise UsageError("web needs a nonempty word")
    W, coloring = web.web_from_word(w)
    if args.svg:
        _write_svg(args.svg, render.web_svg(W, coloring, seed=args.seed))
    data = web.to_dict(W, coloring)
    data["word"] = w
    census = W.census()
    text = "\n".join(
        [
            f"boundary vertices: {W.size}",
            f"internal vertices: {census[web.BLACK]} black, {census[web.WHITE]} white",
            f"components: {web.num_components(W)}",
            "internal faces: " + " ".join(str(f.sides) for f in web.internal_faces(W)),
            "trip permutation: " + " ".join(map(str, web.trip_permutation_web(W))),
        ]
    )
    _emit(data, args.json, text)
    return EXIT_OK


def cmd_recover(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = sys.stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}") from exc
    W, _ = web.from_dict(data)
    found = sorted(web.recover_words(W))
    _emit({"words": found, "components": web.num_components(W)}, args.json, "\n".join(found))
    return EXIT_OK


def cmd_csp(args) -> int:
    n = _n(args)
    rep = enumeration.csp_check(n)
    out = {
        "n": n,
        "period": rep.period,
        "passed": rep.passed,
        "orbit_sizes": rep.orbit_sizes,
        "f": list(rep.f.coeffs),
    }
    text = f"f(q) = {rep.f}\norbit sizes: {rep.orbit_sizes}\n{'PASS' if rep.passed else 'FAIL'}"
    _emit(out, args.json, text)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_evac_fixed(args) -> int:
    n = _n(args)
    rep = enumeration.evac_fixed_check(n)
    out = {
        "n": n,
        "formula": rep.formula,
        "dual_evac_fixed": rep.dual_evac_fixed,
        "evac_fixed": rep.evac_fixed,
        "passed": rep.passed,
    }
    text = (
        f"formula {rep.formula}, dual evacuation fixed {rep.dual_evac_fixed}, "
        f"evacuation fixed {rep.evac_fixed}: {'PASS' if rep.passed else 'FAIL'}"
    )
    _emit(out, args.json, text)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_order_poly(args) -> int:
    n = _n(args)
    top = 6 if args.m is None else args.m
    rows = [(m, enumeration.order_polynomial(n, m), enumeration.ppartition_count(n, m)) for m in range(top + 1)]
    ok = all(a == b for _, a, b in rows)
    out = {"n": n, "values": [{"m": m, "formula": a, "count": b} for m, a, b in rows], "passed": ok}
    text = "\n".join(f"m={m:<3} {a:>12} {b:>12}" for m, a, b in rows)
    _emit(out, args.json, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    max_n = 3 if args.max_n is None else args.max_n
    samples = 200 if args.samples is None else args.samples
    results = verify.run_suites(args.suite, max_n=max_n, samples=samples, seed=args.seed)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "suites": [r.to_dict() for r in results]}))
    else:
        for r in results:
            print("\n".join(r.lines()))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kreweras", description="Promotion and evacuation of Kreweras words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *flags):
        p = sub.add_parser(name, help=help_text)
        for flag in flags:
            if flag == "n":
                p.add_argument("--n", type=int)
            elif flag == "word":
                p.add_argument("--word", type=str)
            elif flag == "steps":
                p.add_argument("--steps", type=int)
            elif flag == "svg":
                p.add_argument("--svg", metavar="PATH")
            elif flag == "samples":
                p.add_argument("--samples", type=int)
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)
        return p

    add("count", cmd_count, "closed-form counts", "n")
    add("gen", cmd_gen, "list (or sample) words", "n", "samples")
    add("promote", cmd_promote, "apply promotion --steps times", "word", "steps")
    add("evacuate", cmd_evacuate, "apply evacuation", "word")
    add("orbit", cmd_orbit, "promotion orbit", "word")
    add("bump", cmd_bump, "bump diagram and trips", "word", "svg")
    add("growth", cmd_growth, "growth diagram window (--steps rows)", "word", "steps")
    add("web", cmd_web, "web of a word", "word", "svg")
    rec = add("recover", cmd_recover, "words with a given web (JSON on stdin)")
    rec.add_argument("--input", metavar="PATH")
    add("csp", cmd_csp, "cyclic sieving check", "n")
    add("evac-fixed", cmd_evac_fixed, "evacuation fixed-point check", "n")
    op = add("order-poly", cmd_order_poly, "order polynomial against the partition count", "n")
    op.add_argument("--m", type=int, help="largest value (default 6)")
    ver = add("verify", cmd_verify, "run verification suites", "samples")
    ver.add_argument("suite", choices=[*verify.SUITES, "all"])
    ver.add_argument("--max-n", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, KrewerasError, ValueError) as exc:
        print(f"kreweras {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
