"""Command-line entry point.

Exit status: 0 on success, 1 when a violation or refutation is found, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus, freewords, ideals, morphisms, separators
from .core import (
    Semigroup,
    SemigroupError,
    format_semigroup,
    format_subset,
    parse_semigroup,
    parse_semigroups,
    parse_subset,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args) -> Semigroup:
    return parse_semigroup(_read(args.table))


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _subset_json(S, A):
    return {"subset": format_subset(S, A), "mask": A.bits}


# ---------------------------------------------------------------------------
# semigroup commands


def cmd_validate(args) -> int:
    total = 0
    for path in args.files:
        tables = parse_semigroups(_read(path))
        total += len(tables)
    _emit(args, f"ok: {total} tables", {"accepted": total})
    return 0


def cmd_sep(args) -> int:
    S = _load(args)
    A = parse_subset(S, args.subset)
    fn = separators.idealizer if args.command == "idealizer" else separators.separator
    R = fn(S, A)
    _emit(args, format_subset(S, R), {"input": _subset_json(S, A), "result": _subset_json(S, R)})
    return 0


def cmd_classify(args) -> int:
    S = _load(args)
    A = parse_subset(S, args.subset)
    kind = separators.classify(S, A)
    _emit(args, str(kind), {"input": _subset_json(S, A), "kind": str(kind),
                            "separator": _subset_json(S, separators.separator(S, A))})
    return 0


def cmd_fixed_points(args) -> int:
    S = _load(args)
    pts = separators.separator_fixed_points(S)
    _emit(args, "\n".join(format_subset(S, A) for A in pts), [_subset_json(S, A) for A in pts])
    return 0


def cmd_ideals(args) -> int:
    S = _load(args)
    rows = []
    for A in S.subsets():
        if not A or not ideals.is_ideal(S, A):
            continue
        flags = {
            "prime": ideals.is_prime_ideal(S, A),
            "maximal": ideals.is_maximal_ideal(S, A),
        }
        if args.which == "prime" and not flags["prime"]:
            continue
        if args.which == "maximal" and not flags["maximal"]:
            continue
        rows.append((A, flags))
    text = "\n".join(
        format_subset(S, A) + "".join(f" {k}" for k, v in sorted(f.items()) if v) for A, f in rows
    )
    _emit(args, text, [{"subset": format_subset(S, A), "mask": A.bits, "flags": f} for A, f in rows])
    return 0


def cmd_unitary(args) -> int:
    S = _load(args)
    if args.subset is not None:
        A = parse_subset(S, args.subset)
        res = ideals.is_unitary(S, A)
        _emit(args, str(res).lower(), {"input": _subset_json(S, A), "unitary": res})
        return 0
    us = ideals.unitary_subsemigroups(S)
    _emit(args, "\n".join(format_subset(S, U) for U in us), [_subset_json(S, U) for U in us])
    return 0


def _corpus_from(args) -> tuple[list[Semigroup], dict]:
    if getattr(args, "table", None):
        tables = parse_semigroups(_read(args.table))
        return tables, {"source": args.table, "size": len(tables)}
    if args.order is None:
        raise UsageError("give --table or --order")
    if args.order_only:
        c = corpus.enumerate_semigroups(args.order)
        spec = {"orders": [args.order]}
    else:
        c = corpus.corpus_up_to(args.order)
        spec = {"orders": list(range(1, args.order + 1))}
    spec["size"] = len(c)
    return c, spec


def cmd_hom(args) -> int:
    if args.action == "list":
        S = _load(args)
        maps = morphisms.enumerate_endomorphisms(S, surjective_only=args.surjective)
        _emit(args, "\n".join(" ".join(map(str, m.map)) for m in maps), [list(m.map) for m in maps])
        return 0
    if args.action == "verify-th4":
        c, spec = _corpus_from(args)
        rep = corpus.run_property("P-T4", c, corpus_spec=spec)
        _emit(args, f"P-T4 {'pass' if rep.passed else 'FAIL'} instances={rep.instances_checked} "
                    f"violations={len(rep.violations)}", rep.to_dict())
        return 0 if rep.passed else 1
    c, spec = _corpus_from(args)
    scan = morphisms.remark5_scan(c, args.separators)
    d = scan.to_dict() | {"corpus_spec": spec}
    if scan.witness is None:
        text = f"no witness over {scan.semigroups} semigroups ({scan.triples_checked} maps checked)"
    else:
        w = scan.witness
        text = (f"witness: table={w['semigroup']} A={w['A']} B={w['B']} map={w['map']} "
                f"phi(Sep A)={w['lhs']} Sep B={w['rhs']}")
    _emit(args, text, d)
    return 0


def cmd_enumerate(args) -> int:
    c = corpus.enumerate_semigroups(args.order)
    if args.dedupe:
        c = corpus.dedupe(c, include_anti=args.dedupe == "iso-anti")
    if args.json:
        print(json.dumps([S.to_list() for S in c]))
    else:
        sys.stdout.write("\n".join(format_semigroup(S) for S in c))
    return 0


def cmd_verify(args) -> int:
    c, spec = _corpus_from(args)
    ids = args.props.split(",") if args.props else None
    reports = corpus.run_registry(c, ids, seed=args.seed, corpus_spec=spec, jobs=args.jobs)
    for r in reports:
        print(f"{r.property_id:6s} {'pass' if r.passed else 'FAIL'} semigroups={len(c)} "
              f"instances={r.instances_checked} violations={len(r.violations)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2, sort_keys=True)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# free semigroup commands


def _gens(args) -> freewords.GeneratorSet:
    return freewords.GeneratorSet.parse(args.gens, args.alphabet)


def cmd_free(args) -> int:
    G = _gens(args)
    fw = freewords.format_word
    if args.action == "factorize":
        w = freewords.parse_word(args.word)
        facs = freewords.factorizations(w, G, listing=True)
        text = f"{len(facs)}" + "".join("\n" + "·".join(fw(g) for g in f) for f in facs)
        _emit(args, text, {"word": fw(w), "count": len(facs), "factorizations": [[fw(g) for g in f] for f in facs]})
        return 0
    if args.action == "is-code":
        r = freewords.is_code(G)
        payload = {"gens": str(G), "is_code": r.is_code}
        text = "true"
        if not r.is_code:
            payload |= {"witness": fw(r.witness), "left": [fw(g) for g in r.left], "right": [fw(g) for g in r.right]}
            text = f"false witness={fw(r.witness)} {'·'.join(map(fw, r.left))} = {'·'.join(map(fw, r.right))}"
        _emit(args, text, payload)
        return 0
    if args.action == "is-free":
        b = freewords.base(G)
        res = freewords.is_free_subsemigroup(G)
        _emit(args, str(res).lower(), {"gens": str(G), "base": str(b), "free": res})
        return 0
    if args.action == "sep-bounded":
        r = freewords.bounded_separator(G, args.max_len, args.depth)
        _emit(args, "\n".join(fw(w) for w in r.words), r.to_dict())
        return 0
    if args.action == "check-th13":
        r = freewords.check_theorem13_condition(G, args.bound)
        text = "pass" if r.passed else f"FAIL {r.violation or r.mismatches}"
        _emit(args, text, r.to_dict())
        return 0 if r.passed else 1
    r = freewords.check_theorem14(G, args.n, args.bound)
    text = (f"hypothesis={'holds' if r.hypothesis_holds else 'fails'} vacuous={r.vacuous} "
            f"free={r.free} consistent={r.consistent}")
    _emit(args, text, r.to_dict())
    return 0 if r.consistent else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semisep", description="Separators of subsets of semigroups.")
    sub = p.add_subparsers(dest="command", required=True)

    def table_cmd(name, help_, func, subset=False, subset_required=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--table", required=True, help="Cayley table file ('-' for stdin)")
        if subset:
            sp.add_argument("--subset", required=subset_required, help="subset literal, e.g. '{0,a}'")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    sp = sub.add_parser("validate", help="check that files contain associative tables")
    sp.add_argument("files", nargs="+")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_validate)

    table_cmd("sep", "separator of a subset", cmd_sep, subset=True)
    table_cmd("idealizer", "idealizer of a subset", cmd_sep, subset=True)
    table_cmd("classify", "EmptySeparator / Including / Excluding", cmd_classify, subset=True)
    table_cmd("fixed-points", "subsets A with Sep A = A", cmd_fixed_points)
    sp = table_cmd("ideals", "ideals with prime/maximal flags", cmd_ideals)
    sp.add_argument("which", nargs="?", choices=["list", "prime", "maximal"], default="list")
    table_cmd("unitary", "unitary test, or list unitary subsemigroups", cmd_unitary, subset=True,
              subset_required=False)

    def corpus_args(sp):
        sp.add_argument("--table", help="file with one or more tables")
        sp.add_argument("--order", type=int, help="use all labeled semigroups of order 1..n")
        sp.add_argument("--order-only", action="store_true", help="only order n, not 1..n")

    sp = sub.add_parser("hom", help="homomorphisms")
    sp.add_argument("action", choices=["list", "verify-th4", "remark5-search"])
    corpus_args(sp)
    sp.add_argument("--surjective", action="store_true")
    sp.add_argument("--separators", choices=["ambient", "restricted"], default="ambient")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("enumerate", help="all labeled semigroups of one order")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--dedupe", choices=["iso", "iso-anti"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the theorem registry over a corpus")
    corpus_args(sp)
    sp.add_argument("--props", help="comma-separated ids: " + ",".join(corpus.PROPERTY_IDS))
    sp.add_argument("--json", metavar="OUT", help="write the reports to this file")
    sp.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED)
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("free", help="subsemigroups of free semigroups")
    sp.add_argument("action", choices=["factorize", "is-code", "is-free", "sep-bounded", "check-th13", "check-th14"])
    sp.add_argument("word", nargs="?", help="word to factorize")
    sp.add_argument("--gens", required=True, help="comma-separated generators, e.g. ab,ba,aba")
    sp.add_argument("--alphabet", type=int, help="alphabet size (default: inferred)")
    sp.add_argument("--max-len", type=int, default=4)
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--bound", type=int, default=8)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_free)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if args.command == "free" and args.action == "factorize" and not args.word:
        print("semisep: factorize needs a word", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (SemigroupError, UsageError, ValueError, OSError) as e:
        print(f"semisep: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
