"""Command-line front end.

Subcommands: ``table``, ``gram``, ``wgfn``, ``characters``, ``verify``, ``mc``.
Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
error, 3 pole or domain error.

The character-table cache directory comes from ``WG_CACHE_DIR``, defaulting
to ``~/.cache/weingarten``; cache files carry a schema tag.  Symbolic values
render with the variable letter "t".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .coeffring import TAU, PoleError, render
from .groupalg import AlgebraElement, jm_product_unitary
from .haarmc import MomentSpec, estimate_moment, grid_crosscheck
from .orthogonal import (
    verify_doubling,
    verify_gram_commutation,
    verify_key_identity,
    verify_oid,
    verify_stability_lemma,
    weingarten_orthogonal,
)
from .symcore import Partition, partitions_of, permutations_of, standard_tableaux
from .unitary import pseudo_inverse_check, weingarten_unitary, wg_function_unitary
from .young import CharacterTable, central_idempotent, young_idempotent

# default desk-scale caps; --force lifts them
CAPS = {
    "unitary": {"symbolic": 5, "numeric": 5},
    "orthogonal": {"symbolic": 4, "numeric": 5},
}
SUITE_CAPS = {
    "jucys": 6,
    "oid": 5,
    "idempotents": 5,
    "central": 5,
    "pseudoinverse": 5,
    "doubling": 4,
    "keyid": 4,
    "stability": 4,
    "commute": 4,
}
MC_GRID_CAP = 2


def cache_dir() -> Path:
    env = os.environ.get("WG_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "weingarten"


def _parse_tau(text: str):
    """--tau value: 'symbolic' or an exact rational P/Q."""
    if text == "symbolic":
        return TAU
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected 'symbolic' or a rational P/Q: {exc}")


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational P/Q: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weingarten",
        description="Exact Weingarten matrices for U(t) and O(t), with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, tau_default="symbolic"):
        p.add_argument("--group", required=True, choices=("unitary", "orthogonal"))
        p.add_argument("--n", required=True, type=int)
        p.add_argument("--tau", type=_parse_tau, default=_parse_tau(tau_default))
        p.add_argument("--force", action="store_true", help="lift the desk-scale size caps")

    p_table = sub.add_parser("table", help="emit Gram + Weingarten matrices")
    add_common(p_table)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--out", type=Path, default=None)

    p_gram = sub.add_parser("gram", help="emit the Gram matrix only")
    add_common(p_gram)
    p_gram.add_argument("--format", choices=("json", "csv"), default="json")
    p_gram.add_argument("--out", type=Path, default=None)

    p_wgfn = sub.add_parser("wgfn", help="print one unitary Weingarten class-function value")
    p_wgfn.add_argument("--group", required=True, choices=("unitary",))
    p_wgfn.add_argument("--cycle-type", required=True, help='partition text, e.g. "[2,1]"')
    p_wgfn.add_argument("--tau", type=_parse_tau, default=TAU)

    p_chars = sub.add_parser("characters", help="emit/refresh the cached character table")
    p_chars.add_argument("--n", required=True, type=int)

    p_verify = sub.add_parser("verify", help="run verification suites for sizes 1..n")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=(
            "jucys", "oid", "idempotents", "central", "pseudoinverse",
            "doubling", "keyid", "stability", "commute", "all",
        ),
    )
    p_verify.add_argument("--n", required=True, type=int)
    p_verify.add_argument("--tau", type=_parse_rational, default=None,
                          help="rational parameter for the numeric-only sizes")
    p_verify.add_argument("--tau2", type=_parse_rational, default=None,
                          help="second parameter for the commute suite (default 7)")
    p_verify.add_argument("--deep", action="store_true",
                          help="include the 2n=8 doubling check (slow)")
    p_verify.add_argument("--force", action="store_true")

    p_mc = sub.add_parser("mc", help="Monte-Carlo cross-check against exact predictions")
    p_mc.add_argument("--group", required=True, choices=("unitary", "orthogonal"))
    p_mc.add_argument("--n", required=True, type=int)
    p_mc.add_argument("--tau", required=True, type=int)
    p_mc.add_argument("--samples", type=int, default=200_000)
    p_mc.add_argument("--seed", type=int, default=1)
    p_mc.add_argument(
        "--indices",
        default=None,
        help=(
            "explicit index tuples, semicolon-separated comma lists: "
            "unitary rows;cols;conj_rows;conj_cols, orthogonal rows;cols"
        ),
    )
    p_mc.add_argument("--force", action="store_true")
    return parser


def _check_cap(n: int, cap: int, force: bool, what: str) -> str | None:
    if n > cap and not force:
        return f"--n {n} exceeds the {what} cap {cap}; pass --force to run anyway"
    return None


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _matrix_csv(labels: list[str], matrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [render(x) for x in row])
    return buf.getvalue()


def _build_table(group: str, n: int, tau):
    if group == "unitary":
        return weingarten_unitary(n, tau)
    CharacterTable.load_or_build(2 * n, cache_dir())
    return weingarten_orthogonal(n, tau)


def _cmd_table(args) -> int:
    from .coeffring import is_symbolic

    kind = "symbolic" if is_symbolic(args.tau) else "numeric"
    message = _check_cap(args.n, CAPS[args.group][kind], args.force, f"{kind} {args.group}")
    if message:
        print(message, file=sys.stderr)
        return 2
    table = _build_table(args.group, args.n, args.tau)
    if args.format == "json":
        _emit(json.dumps(table.to_json_dict()), args.out)
    else:
        labels = [p.to_text() for p in table.basis]
        _emit(_matrix_csv(labels, table.weingarten), args.out)
    return 0


def _cmd_gram(args) -> int:
    from .coeffring import is_symbolic
    from .orthogonal import gram_orthogonal
    from .unitary import gram_unitary

    kind = "symbolic" if is_symbolic(args.tau) else "numeric"
    message = _check_cap(args.n, CAPS[args.group][kind], args.force, f"{kind} {args.group}")
    if message:
        print(message, file=sys.stderr)
        return 2
    if args.group == "unitary":
        basis = permutations_of(args.n)
        gram = gram_unitary(args.n, args.tau)
    else:
        from .symcore import enumerate_pairings

        basis = enumerate_pairings(args.n)
        gram = gram_orthogonal(args.n, args.tau)
    labels = [p.to_text() for p in basis]
    if args.format == "json":
        payload = {
            "group": args.group,
            "n": args.n,
            "tau": "symbolic" if is_symbolic(args.tau) else render(Fraction(args.tau)),
            "basis": labels,
            "gram": [[render(x) for x in row] for row in gram],
        }
        _emit(json.dumps(payload), args.out)
    else:
        _emit(_matrix_csv(labels, gram), args.out)
    return 0


def _cmd_wgfn(args) -> int:
    mu = Partition.from_text(args.cycle_type)
    print(render(wg_function_unitary(mu, args.tau)))
    return 0


def _cmd_characters(args) -> int:
    if args.n < 1:
        print(f"--n must be positive, got {args.n}", file=sys.stderr)
        return 2
    table = CharacterTable.build(args.n)
    table.save(cache_dir() / f"characters-n{args.n}.json")
    print(json.dumps(table.to_json_dict()))
    return 0


# -- verify suites -----------------------------------------------------------


def _suite_jucys(max_n, tau, tau2, deep):
    for n in range(1, max_n + 1):
        lhs = jm_product_unitary(n, TAU)
        rhs = AlgebraElement(n, {s: TAU**s.num_cycles() for s in permutations_of(n)})
        yield f"jucys identity n={n}", lhs == rhs


def _suite_oid(max_n, tau, tau2, deep):
    for n in range(1, max_n + 1):
        if n <= 4:
            report = verify_oid(n)
            yield f"odd JM expansion n={n} (symbolic)", report.ok
        else:
            t = tau if tau is not None else Fraction(7)
            report = verify_oid(n, t)
            yield f"odd JM expansion n={n} (tau={t})", report.ok


def _suite_idempotents(max_n, tau, tau2, deep):
    from .groupalg import jm_element

    for n in range(1, max_n + 1):
        tableaux = [t for lam in partitions_of(n) for t in standard_tableaux(lam)]
        idems = [young_idempotent(t) for t in tableaux]
        ok = True
        total = AlgebraElement.zero(n)
        for i, (t, e) in enumerate(zip(tableaux, idems)):
            total = total + e
            for j, e2 in enumerate(idems):
                prod = e * e2
                ok = ok and (prod == e if i == j else not prod)
            for k in range(1, n + 1):
                target = e.scale(Fraction(t.content(k)))
                m = jm_element(k, n)
                ok = ok and m * e == target and e * m == target
        ok = ok and total == AlgebraElement.unit(n)
        yield f"orthogonal idempotents complete n={n} ({len(tableaux)} tableaux)", ok


def _suite_central(max_n, tau, tau2, deep):
    for n in range(1, max_n + 1):
        ok = True
        projs = []
        for lam in partitions_of(n):
            a = central_idempotent(lam, "tableau-sum")
            b = central_idempotent(lam, "character")
            ok = ok and a == b
            projs.append(a)
        for i, p in enumerate(projs):
            for j, q in enumerate(projs):
                prod = p * q
                ok = ok and (prod == p if i == j else not prod)
        total = AlgebraElement.zero(n)
        for p in projs:
            total = total + p
        ok = ok and total == AlgebraElement.unit(n)
        yield f"central idempotents, both routes n={n}", ok


def _suite_pseudoinverse(max_n, tau, tau2, deep):
    numeric_tau = tau if tau is not None else Fraction(7)
    for n in range(1, max_n + 1):
        t = TAU if n <= 4 else numeric_tau
        table = weingarten_unitary(n, t)
        report = pseudo_inverse_check(table.gram, table.weingarten)
        label = "symbolic" if n <= 4 else f"tau={t}"
        yield f"pseudo-inverse unitary n={n} ({label})", report.ok
    for n in range(1, min(max_n, 4) + 1):
        t = TAU if n <= 3 else numeric_tau
        table = weingarten_orthogonal(n, t)
        report = pseudo_inverse_check(table.gram, table.weingarten)
        label = "symbolic" if n <= 3 else f"tau={t}"
        yield f"pseudo-inverse orthogonal n={n} ({label})", report.ok


def _suite_doubling(max_n, tau, tau2, deep):
    top = max_n if (deep or max_n <= 3) else 3
    for n in range(1, top + 1):
        report = verify_doubling(n)
        yield f"doubling survivors 2n={2 * n}", report.ok


def _suite_keyid(max_n, tau, tau2, deep):
    for n in range(1, max_n + 1):
        ok = all(verify_key_identity(n, k) for k in range(1, n + 1))
        yield f"projector key identity n={n}", ok


def _suite_stability(max_n, tau, tau2, deep):
    numeric_tau = tau if tau is not None else Fraction(7)
    for n in range(1, max_n + 1):
        t = TAU if n <= 3 else numeric_tau
        report = verify_stability_lemma(n, t)
        label = "symbolic" if n <= 3 else f"tau={t}"
        yield f"stability lemma n={n} ({label})", report.ok


def _suite_commute(max_n, tau, tau2, deep):
    t1 = tau if tau is not None else Fraction(3)
    t2 = tau2 if tau2 is not None else Fraction(7)
    for n in range(1, max_n + 1):
        yield f"Gram commutation n={n} (tau={t1},{t2})", verify_gram_commutation(n, t1, t2)


SUITES = {
    "jucys": _suite_jucys,
    "oid": _suite_oid,
    "idempotents": _suite_idempotents,
    "central": _suite_central,
    "pseudoinverse": _suite_pseudoinverse,
    "doubling": _suite_doubling,
    "keyid": _suite_keyid,
    "stability": _suite_stability,
    "commute": _suite_commute,
}


def _cmd_verify(args) -> int:
    if args.n < 1:
        print(f"--n must be positive, got {args.n}", file=sys.stderr)
        return 2
    if args.suite == "all":
        chosen = [(name, min(args.n, SUITE_CAPS[name])) for name in SUITES]
    else:
        cap = SUITE_CAPS[args.suite]
        message = _check_cap(args.n, cap, args.force, f"'{args.suite}' suite")
        if message:
            print(message, file=sys.stderr)
            return 2
        chosen = [(args.suite, args.n)]
    all_ok = True
    for name, max_n in chosen:
        for label, ok in SUITES[name](max_n, args.tau, args.tau2, args.deep):
            print(f"{'ok  ' if ok else 'FAIL'} {label}")
            sys.stdout.flush()
            all_ok = all_ok and ok
    return 0 if all_ok else 1


def _parse_indices(text: str, group: str) -> list[tuple[int, ...]]:
    groups = [chunk.strip() for chunk in text.split(";")]
    expected = 4 if group == "unitary" else 2
    if len(groups) != expected:
        raise ValueError(
            f"--indices for {group} needs {expected} semicolon-separated lists, got {len(groups)}"
        )
    return [
        tuple(int(v) for v in chunk.split(",")) if chunk else ()
        for chunk in groups
    ]


def _cmd_mc(args) -> int:
    if args.tau < 1:
        print(f"--tau must be a positive integer, got {args.tau}", file=sys.stderr)
        return 2
    if args.indices is None:
        message = _check_cap(args.n, MC_GRID_CAP, args.force, "mc full-grid")
        if message:
            print(message, file=sys.stderr)
            return 2
        report = grid_crosscheck(args.group, args.n, args.tau, args.samples, args.seed)
        print(json.dumps(report.to_json_dict()))
        return 0 if report.ok else 1
    parts = _parse_indices(args.indices, args.group)
    if args.group == "unitary":
        rows, cols, conj_rows, conj_cols = parts
    else:
        (rows, cols), conj_rows, conj_cols = parts, (), ()
    spec = MomentSpec(
        group=args.group,
        tau=args.tau,
        rows=rows,
        cols=cols,
        conj_rows=conj_rows,
        conj_cols=conj_cols,
        samples=args.samples,
        seed=args.seed,
    )
    report = estimate_moment(spec)
    print(json.dumps(report.to_json_dict()))
    return 0 if abs(report.z) <= 4.0 else 1


HANDLERS = {
    "table": _cmd_table,
    "gram": _cmd_gram,
    "wgfn": _cmd_wgfn,
    "characters": _cmd_characters,
    "verify": _cmd_verify,
    "mc": _cmd_mc,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except PoleError as exc:
        print(f"pole error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
