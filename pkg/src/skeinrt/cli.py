"""Command-line interface: ``skeinrt <verb> ...``.

Exit codes: 0 success, 1 parse error, 2 validation error, 3 computation
refused by the cost bound, 4 a ``check`` suite found a failure.  Errors print a
single JSON line ``{"error": kind, "exit": code, "reason": text}`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from typing import Sequence

from . import __version__
from .coeff import canonical_string
from .diagram import (BraidWord, DiagramParseError, DiagramValidationError, braid_closure,
                      parse_diagram, parse_surgery)
from .qgroup import ModularDataError, QGroupContext, colored_invariant, modular_data, root_context
from .rt import (DEFAULT_MAX_COST, CostExceeded, estimate_cost, kirby_invariance_suite,
                 rt_invariant, spines_for, tqft_dim)
from .skein import KERNEL, bracket_functor, bracket_statesum, jones

EXIT_PARSE, EXIT_VALIDATION, EXIT_COST, EXIT_CHECK = 1, 2, 3, 4
_INLINE = re.compile(r"^\s*(braid\b|X\(|O(\s|$)|\{|framings\s*:)")


class _Fail(Exception):
    def __init__(self, kind: str, code: int, reason: str):
        super().__init__(reason)
        self.kind, self.code, self.reason = kind, code, reason


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Fail("usage", EXIT_VALIDATION, message)


def _threads(value) -> int:
    if value is not None:
        return max(1, value)
    try:
        return max(1, int(os.environ.get("SKEINRT_THREADS", "1")))
    except ValueError:
        raise _Fail("validation", EXIT_VALIDATION, "SKEINRT_THREADS must be an integer") from None


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if _INLINE.match(source):
        return source
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail("validation", EXIT_VALIDATION, f"cannot read {source!r}: {exc.strerror}") from None


def _int_list(text: str | None, what: str) -> list[int] | None:
    if text is None:
        return None
    body = text.strip().strip("[]")
    if not body:
        return []
    try:
        return [int(t) for t in body.split(",")]
    except ValueError:
        raise _Fail("parse", EXIT_PARSE, f"{what} must be comma-separated integers: {text!r}") from None


def _complex_text(z: complex) -> str:
    re_, im = round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0
    if im == 0:
        return f"{re_:.12g}"
    return f"{re_:.12g}{'+' if im >= 0 else '-'}{abs(im):.12g}i"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# verbs

def _cmd_bracket(args) -> int:
    d = parse_diagram(_read(args.input))
    method = args.method
    if method == "auto":
        method = "statesum" if 2 ** d.crossing_count <= args.max_cost else "functor"
    if method == "statesum":
        if 2 ** d.crossing_count > args.max_cost:
            raise CostExceeded(f"state sum needs 2^{d.crossing_count} states, over {args.max_cost}",
                               2 ** d.crossing_count)
        b = bracket_statesum(d, threads=_threads(args.threads))
    else:
        b = bracket_functor(d)
    _emit(args, {"bracket": canonical_string(b), "poly": b.to_json(), "method": method,
                 "crossings": d.crossing_count}, canonical_string(b))
    return 0


def _cmd_jones(args) -> int:
    d = parse_diagram(_read(args.input))
    if 2 ** d.crossing_count > args.max_cost:
        br = bracket_functor(d)
    else:
        br = bracket_statesum(d, threads=_threads(args.threads))
    v = jones(d, divided=args.divided, bracket=br)
    _emit(args, {"jones": canonical_string(v), "poly": v.to_json(), "divided": args.divided},
          canonical_string(v))
    return 0


def _cmd_colored(args) -> int:
    d = parse_diagram(_read(args.input))
    labels = _int_list(args.labels, "--labels")
    framings = _int_list(args.framings, "--framings")
    if args.l is None:
        ctx = QGroupContext.generic()
    else:
        ctx = root_context(args.l, args.root_exp, args.root_order)
        bad = [n for n in labels if n >= args.l]
        if bad:
            raise DiagramValidationError(f"labels {bad} are not below l={args.l}")
    v = colored_invariant(d, labels, ctx, framings)
    if ctx.is_generic:
        _emit(args, {"value": canonical_string(v), "poly": v.to_json()}, canonical_string(v))
    else:
        z = v.to_complex()
        _emit(args, {"value": v.to_json(), "numeric": [z.real, z.imag],
                     "root": {"order": ctx.order, "exponent": ctx.exponent}}, _complex_text(z))
    return 0


def _surgery_input(args):
    text = _read(args.input)
    framings = _int_list(args.framings, "--framings")
    if framings is not None:
        if re.search(r"^\s*framings\s*:", text, re.M):
            raise _Fail("validation", EXIT_VALIDATION, "framings given both in the input and by --framings")
        text = text + f"\nframings: [{', '.join(map(str, framings))}]\n"
    return parse_surgery(text)


def _cmd_rt(args) -> int:
    p = _surgery_input(args)
    root_context(args.l, args.root_exp, args.root_order)  # validate before the expensive part
    est = estimate_cost(p, args.l)
    if est > args.max_cost:
        raise CostExceeded(f"estimated cost {est} exceeds --max-cost {args.max_cost}", est)
    md = modular_data(args.l, args.root_exp, args.root_order)
    r = rt_invariant(p, md, threads=_threads(args.threads), max_cost=args.max_cost)
    text = "\n".join([
        f"l = {r.l}, s = zeta_{r.order}^{r.exponent}",
        f"components = {r.components}, signature = {r.signature}",
        f"biframed = {_complex_text(r.biframed.to_complex())}",
        f"corrected = {_complex_text(r.corrected.to_complex())}",
    ])
    _emit(args, r.to_json(), text)
    return 0


def _cmd_tqft(args) -> int:
    if args.genus < 0:
        raise DiagramValidationError("--genus must be non-negative")
    if args.spine is not None and args.genus > 0 and args.spine not in spines_for(args.genus):
        raise DiagramValidationError(f"unknown spine {args.spine!r}; choose from {spines_for(args.genus)}")
    md = modular_data(args.l, args.root_exp, args.root_order)
    n = tqft_dim(args.genus, md, args.spine)
    _emit(args, {"l": args.l, "genus": args.genus, "spine": args.spine or "default", "dim": n}, str(n))
    return 0


def _cmd_modular(args) -> int:
    md = modular_data(args.l, args.root_exp, args.root_order)
    lines = [f"l = {md.l}, s = zeta_{md.order}^{md.exponent}, labels = {list(md.labels)}"]
    for n in md.labels:
        lines.append(f"V_{n}: qdim = {_complex_text(md.qdim_of(n).to_complex())}, "
                     f"twist = {_complex_text(md.twist_of(n).to_complex())}")
    lines.append(f"K = {_complex_text(md.K.to_complex())}")
    lines.append(f"C = {_complex_text(md.C.to_complex())}")
    _emit(args, md.to_json(), "\n".join(lines))
    return 0


def _random_braid(rng: random.Random, max_strands: int, max_len: int) -> BraidWord:
    n = rng.randint(2, max_strands)
    letters = tuple((rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))
    return BraidWord(n, letters)


def _cmd_check(args) -> int:
    if args.suite == "relations":
        from .functor import check_labeled_relations, check_relations

        report = check_relations()
        payload = {"kauffman": report.to_json()}
        ok = report.passed
        lines = ["Kauffman table:", str(report)]
        if args.max_label > 0:
            ctx = QGroupContext.generic() if args.l is None else root_context(args.l, args.root_exp,
                                                                              args.root_order)
            lab = check_labeled_relations(ctx, max_label=args.max_label,
                                          yb_max_label=min(args.max_label, 3))
            payload["labeled"] = lab.to_json()
            ok = ok and lab.passed
            lines += [f"labeled (labels <= {args.max_label}, {lab.checked} instances):", str(lab)]
    elif args.suite == "kirby":
        md = modular_data(args.l, args.root_exp, args.root_order)
        report = kirby_invariance_suite(md, threads=_threads(args.threads))
        payload = report.to_json()
        ok = report.passed
        lines = [str(report)]
    else:
        rng = random.Random(args.seed)
        bad = []
        for _ in range(args.count):
            b = _random_braid(rng, 5, 10)
            d = braid_closure(b)
            if bracket_statesum(d, threads=1) != bracket_functor(d):
                bad.append(str(b))
        ok = not bad
        payload = {"passed": ok, "count": args.count, "seed": args.seed, "kernel": KERNEL,
                   "mismatches": bad}
        lines = [f"{args.count} random braids, kernel {KERNEL}: "
                 + ("statesum = functor on all" if ok else f"{len(bad)} mismatches")]
        lines += bad
    payload["passed"] = ok
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else EXIT_CHECK


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $SKEINRT_THREADS or 1)")
    common.add_argument("--max-cost", type=int, default=DEFAULT_MAX_COST,
                        help="refuse computations estimated above this cost (exit 3)")
    root = _Parser(add_help=False)
    root.add_argument("--root-exp", type=int, default=1, help="exponent e of s = zeta_N^e")
    root.add_argument("--root-order", type=int, default=None, help="N = 4l (default) or 2l for odd l")

    p = _Parser(prog="skeinrt", description="Kauffman bracket, Jones polynomial, colored "
                "invariants and Reshetikhin-Turaev invariants.")
    p.add_argument("--version", action="version", version=f"skeinrt {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("bracket", parents=[common], help="Kauffman bracket of a diagram")
    s.add_argument("input", help="file, '-', or inline 'braid ...' / 'X(...)' text")
    s.add_argument("--method", choices=("auto", "statesum", "functor"), default="auto")
    s.set_defaults(func=_cmd_bracket)

    s = sub.add_parser("jones", parents=[common], help="Jones polynomial of an oriented diagram")
    s.add_argument("input")
    s.add_argument("--divided", action="store_true", help="normalise the unknot to 1")
    s.set_defaults(func=_cmd_jones)

    s = sub.add_parser("colored", parents=[common, root], help="colored invariant F(L)")
    s.add_argument("input")
    s.add_argument("--labels", required=True, help="comma-separated labels, one per component")
    s.add_argument("--framings", help="comma-separated framings (default: blackboard)")
    s.add_argument("--l", type=int, default=None, help="evaluate at a root of unity of level l")
    s.set_defaults(func=_cmd_colored)

    s = sub.add_parser("rt", parents=[common, root], help="invariant of a surgery presentation")
    s.add_argument("input", help="surgery file: diagram text plus 'framings: [...]'")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--framings", help="framings for inline input without a framings line")
    s.set_defaults(func=_cmd_rt)

    s = sub.add_parser("tqft-dim", parents=[common, root], help="dimension of Z(Sigma_g)")
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--spine", default=None, help="spine used for the count")
    s.set_defaults(func=_cmd_tqft)

    s = sub.add_parser("modular-data", parents=[common, root], help="labels, fusion, H, twists")
    s.add_argument("--l", type=int, required=True)
    s.set_defaults(func=_cmd_modular)

    s = sub.add_parser("check", parents=[common, root], help="run a property suite")
    s.add_argument("suite", choices=("relations", "kirby", "dual-alg"))
    s.add_argument("--l", type=int, default=None, help="level (kirby: default 5)")
    s.add_argument("--max-label", type=int, default=4, help="relations: largest label (0 skips)")
    s.add_argument("--count", type=int, default=100, help="dual-alg: number of random braids")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_check)
    return p


def _fail(kind: str, code: int, reason: str) -> int:
    reason = " ".join(str(reason).split())
    print(json.dumps({"error": kind, "exit": code, "reason": reason}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "verb", None) == "check" and args.suite == "kirby" and args.l is None:
            args.l = 5
        if args.max_cost < 1:
            raise _Fail("validation", EXIT_VALIDATION, "--max-cost must be positive")
        return args.func(args)
    except _Fail as f:
        return _fail(f.kind, f.code, f.reason)
    except DiagramParseError as exc:
        return _fail("parse", EXIT_PARSE, exc)
    except CostExceeded as exc:
        return _fail("cost", EXIT_COST, exc)
    except (DiagramValidationError, ModularDataError, ValueError) as exc:
        return _fail("validation", EXIT_VALIDATION, exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
