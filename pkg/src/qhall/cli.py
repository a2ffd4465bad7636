"""Command-line front end: ``python -m qhall <verb> ...`` or ``qhall <verb> ...``.

Exit status is 0 on success, 1 for bad input or a domain error, and 2 when
an internal consistency check fails (or a ``verify`` criterion fails).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import acceptance
from .basis import (
    HallVector,
    canonical_section,
    distinguished_section,
    expand_monomial,
    pbw_expand,
    radical_basis,
    random_section,
    transition_matrix,
)
from .core import MultiPartition, Word, dumps
from .hall import bracket, reduced_filtration_count, top_step
from .monoid import FiberTooLarge, canonical_word, fiber, fiber_cap, fiber_size, is_distinguished, is_separated, wp
from .order import degeneration_poset, ideal, leq_deg


class InputError(ValueError):
    pass


# -- argument decoding --------------------------------------------------------


def _load_json(field: str, text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{field}: malformed JSON ({exc.msg})") from None


def _pi(args, field: str = "pi") -> MultiPartition:
    raw = getattr(args, field)
    if raw is None:
        raise InputError(f"--{field} is required")
    obj = _load_json(f"--{field}", raw)
    if isinstance(obj, dict):
        for key in ("n", "parts"):
            if key not in obj:
                raise InputError(f"--{field}: missing field {key!r}")
        parts, n = obj["parts"], obj["n"]
    elif isinstance(obj, list):
        parts, n = obj, args.n if args.n is not None else len(obj)
    else:
        raise InputError(f"--{field}: expected a list of partitions or an object with 'n' and 'parts'")
    if args.n is not None and n != args.n:
        raise InputError(f"--{field}: has {n} components but --n is {args.n}")
    if not all(isinstance(p, list) and all(isinstance(x, int) for x in p) for p in parts):
        raise InputError(f"--{field}: every component must be a list of integers")
    try:
        return MultiPartition(n, tuple(tuple(p) for p in parts))
    except ValueError as exc:
        raise InputError(f"--{field}: {exc}") from None


def _n(args) -> int:
    if args.n is None:
        raise InputError("--n is required")
    if args.n < 2:
        raise InputError("--n must be at least 2")
    return args.n


def _word(args) -> Word:
    n = _n(args)
    if args.word is not None and args.word_compact is not None:
        raise InputError("give either --word or --word-compact, not both")
    try:
        if args.word_compact is not None:
            if n > 9:
                raise InputError("--word-compact is only accepted for n <= 9")
            return Word(n, tuple(int(c) for c in args.word_compact))
        if args.word is None:
            raise InputError("--word is required")
        text = args.word.strip()
        return Word(n, tuple(int(x) for x in text.split(",")) if text else ())
    except ValueError as exc:
        raise InputError(f"--word: {exc}") from None


def _dimvec(args) -> tuple:
    if args.d is None:
        raise InputError("--d is required")
    text = args.d.strip()
    if text.startswith("["):
        obj = _load_json("--d", text)
    else:
        try:
            obj = [int(x) for x in text.split(",")]
        except ValueError:
            raise InputError("--d: expected comma-separated integers") from None
    if not isinstance(obj, list) or not all(isinstance(x, int) and x >= 0 for x in obj):
        raise InputError("--d: expected a list of non-negative integers")
    if len(obj) < 2:
        raise InputError("--d: need at least two entries")
    if args.n is not None and len(obj) != args.n:
        raise InputError(f"--d: has {len(obj)} entries but --n is {args.n}")
    return tuple(obj)


def _fiber_cap(args) -> int:
    if args.fiber_cap is not None:
        if args.fiber_cap < 1:
            raise InputError("--fiber-cap must be at least 1")
        return args.fiber_cap
    return fiber_cap()


# -- rendering ------------------------------------------------------------------


def _render(args, payload, text=None) -> str:
    if args.format == "text" and text is not None:
        return text if text.endswith("\n") else text + "\n"
    return dumps(payload) + "\n"


def _vector_text(x: HallVector) -> str:
    if x.is_zero():
        return "0"
    return "\n".join(f"{c}  u{pi}" for pi, c in ((p, x.entries[p]) for p in x.support()))


def _matrix_csv(m) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["pi", "word"] + [str(pi) for pi in m.cols])
    for pi, word, row in zip(m.rows, m.words, m.entries):
        w.writerow([str(pi), ",".join(map(str, word.letters))] + [str(c) for c in row])
    return buf.getvalue()


# -- verbs -----------------------------------------------------------------------


def cmd_wp(args):
    pi = wp(_word(args))
    return _render(args, pi.to_json(), str(pi))


def cmd_fiber(args):
    pi = _pi(args)
    if args.count_only:
        count = fiber_size(pi) if is_separated(pi) else 0
        return _render(args, count, str(count))
    words = fiber(pi, cap=_fiber_cap(args))
    return _render(args, [list(w.letters) for w in words], "\n".join(map(str, words)))


def cmd_canonical_word(args):
    w = canonical_word(_pi(args))
    return _render(args, w.to_json(), str(w))


def cmd_distinguished(args):
    ok = is_distinguished(_word(args))
    return _render(args, ok, str(ok).lower())


def cmd_separated(args):
    ok = is_separated(_pi(args))
    return _render(args, ok, str(ok).lower())


def cmd_order(args):
    if args.action == "leq":
        ok = leq_deg(_pi(args, "mu"), _pi(args))
        return _render(args, ok, str(ok).lower())
    if args.action == "poset":
        poset = degeneration_poset(_dimvec(args))
        if args.format == "dot":
            return poset.to_dot()
        return _render(args, poset.to_json())
    if args.action == "ideal":
        items = ideal(_pi(args))
        return _render(args, [x.to_json() for x in items], "\n".join(map(str, items)))
    raise InputError(f"unknown order action {args.action!r}")


def cmd_hall(args):
    if args.action == "bracket":
        c = bracket(_word(args), _pi(args))
        return _render(args, c.to_json(), str(c))
    if args.action == "top-step":
        if args.i is None:
            raise InputError("--i is required")
        pi = _pi(args)
        if not 1 <= args.i <= pi.n:
            raise InputError(f"--i must lie in 1..{pi.n}")
        pairs = top_step(pi, args.i)
        payload = [{"mu": mu.to_json(), "coeff": c.to_json()} for mu, c in pairs]
        return _render(args, payload, "\n".join(f"{c}  {mu}" for mu, c in pairs))
    if args.action == "reduced-count":
        c = reduced_filtration_count(_word(args), _pi(args))
        return _render(args, c.to_json(), str(c))
    raise InputError(f"unknown hall action {args.action!r}")


def _section(args, d):
    kind = args.section
    if kind == "canonical":
        return canonical_section(d)
    if kind == "distinguished":
        return distinguished_section(d)
    if kind == "random":
        return random_section(d, seed=args.seed)
    if kind == "file":
        if not args.section_file:
            raise InputError("--section file needs --section-file")
        with open(args.section_file) as fh:
            obj = _load_json("--section-file", fh.read())
        if not isinstance(obj, list):
            raise InputError("--section-file: expected a list of words")
        words = []
        for k, item in enumerate(obj):
            try:
                words.append(Word.from_json(item) if isinstance(item, dict) else Word(len(d), tuple(item)))
            except (ValueError, TypeError) as exc:
                raise InputError(f"--section-file: entry {k}: {exc}") from None
        return {wp(w): w for w in words}
    raise InputError(f"unknown section {kind!r}")


def cmd_basis(args):
    if args.action == "expand":
        x = expand_monomial(_word(args))
        return _render(args, x.to_json(), _vector_text(x))
    if args.action == "matrix":
        d = _dimvec(args)
        m = transition_matrix(_section(args, d), d)
        if args.format == "csv":
            return _matrix_csv(m)
        return _render(args, m.to_json())
    if args.action == "radical":
        vecs = radical_basis(_dimvec(args))
        return _render(args, [x.to_json() for x in vecs], "\n\n".join(map(_vector_text, vecs)))
    if args.action == "pbw":
        if args.pi is not None:
            x = HallVector.basis_vector(_pi(args))
        else:
            x = expand_monomial(_word(args))
        y = pbw_expand(x)
        return _render(args, y.to_json(), _vector_text(y))
    raise InputError(f"unknown basis action {args.action!r}")


def cmd_verify(args):
    results = []
    lines = []
    for c in acceptance.CRITERIA:
        if args.level == "full" or c.quick:
            r = acceptance.run_one(c)
            results.append(r)
            lines.append(r.line())
            if args.format == "text" and not args.out:
                print(r.line(), flush=True)
    failed = [r.key for r in results if not r.passed]
    if args.format == "json":
        payload = [{"key": r.key, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        out = dumps(payload) + "\n"
    elif args.out:
        out = "\n".join(lines) + "\n"
    else:
        out = ""
    return out, (2 if failed else 0)


VERBS = {
    "wp": cmd_wp,
    "fiber": cmd_fiber,
    "canonical-word": cmd_canonical_word,
    "distinguished": cmd_distinguished,
    "separated": cmd_separated,
    "order": cmd_order,
    "hall": cmd_hall,
    "basis": cmd_basis,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of vertices")
    common.add_argument("--word", help="comma-separated letters, e.g. 1,2,1")
    common.add_argument("--word-compact", help="digit string, e.g. 121 (n <= 9 only)")
    common.add_argument("--pi", help="multipartition as a JSON list of partitions")
    common.add_argument("--mu", help="second multipartition for order leq")
    common.add_argument("--d", help="dimension vector, e.g. 2,1")
    common.add_argument("--i", type=int, help="vertex for hall top-step")
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], help="default json; text for verify")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--fiber-cap", type=int, help="refuse to list fibers larger than this")
    common.add_argument("--seed", type=int, default=0, help="seed for --section random")

    p = argparse.ArgumentParser(prog="qhall", description="Generic extensions and Hall algebras of the cyclic quiver.")
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("wp", parents=[common], help="multipartition of a word")
    f = sub.add_parser("fiber", parents=[common], help="words mapping to a multipartition")
    f.add_argument("--count-only", action="store_true")
    sub.add_parser("canonical-word", parents=[common])
    sub.add_parser("distinguished", parents=[common])
    sub.add_parser("separated", parents=[common])
    o = sub.add_parser("order", parents=[common], help="degeneration order")
    o.add_argument("action", choices=["leq", "poset", "ideal"])
    h = sub.add_parser("hall", parents=[common], help="Hall polynomials")
    h.add_argument("action", choices=["bracket", "top-step", "reduced-count"])
    b = sub.add_parser("basis", parents=[common], help="monomials, radical and PBW expansions")
    b.add_argument("action", choices=["expand", "matrix", "radical", "pbw"])
    b.add_argument("--section", choices=["canonical", "distinguished", "random", "file"], default="canonical")
    b.add_argument("--section-file", help="JSON list of words for --section file")
    v = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    v.add_argument("level", choices=["quick", "full"], nargs="?", default="quick")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; those are bad input here
        return 0 if exc.code == 0 else 1
    status = 0
    try:
        if args.format is None:
            args.format = "text" if args.verb == "verify" else "json"
        if args.n is not None and args.n < 2:
            raise InputError("--n must be at least 2")
        out = VERBS[args.verb](args)
        if isinstance(out, tuple):
            out, status = out
    except (InputError, ValueError, FiberTooLarge, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return status


def main() -> None:
    sys.exit(run())
