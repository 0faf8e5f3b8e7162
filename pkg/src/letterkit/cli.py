"""Command-line surface: generators, decoding, the exact solver, modular
decomposition, obstruction profiles, the composer, and the claim-
verification suite.

Exit codes: 0 success/pass, 1 check failure, 2 usage error. Budget
exhaustion is reported as its own status (and exits 1, since the run did
not complete).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import composer, graphs, letters, modular, obstructions, solver


def _read_graph(path: str) -> graphs.Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return graphs.from_graph6(text)


def _cmd_gen(args) -> int:
    g, labels = graphs.generate(args.family, n=args.n, seq=_parse_seq(args.seq))
    if args.dot:
        print(graphs.to_dot(g))
    elif args.json:
        obj = {"n": g.n, "edges": g.edges(), "graph6": graphs.to_graph6(g)}
        if labels is not None:
            obj["labels"] = [list(t) for t in labels.roles]
        print(json.dumps(obj))
    else:
        print(graphs.to_graph6(g))
    return 0


def _parse_seq(seq: str | None):
    if seq is None:
        return None
    table = {"i": graphs.ISOLATED, "d": graphs.DOMINATING}
    try:
        return [table[c] for c in seq]
    except KeyError:
        raise ValueError(f"creation sequence must be over i/d, got {seq!r}")


def _cmd_decode(args) -> int:
    dec = letters.Decoder.from_shorthand(args.decoder, args.word)
    word = tuple(dec.index(c) for c in args.word)
    g = letters.decode(dec, word)
    print(graphs.to_graph6(g))
    return 0


def _parse_classes(path: str):
    with open(path) as fh:
        data = json.load(fh)
    return solver.LetterClassConstraint.of(*data)


def _cmd_lettericity(args) -> int:
    g = _read_graph(args.graph)
    if args.classes or args.max_k is not None:
        k = args.max_k if args.max_k is not None else min(g.n, 5)
        constraint = _parse_classes(args.classes) if args.classes else None
        report = solver.is_k_letterable(g, k, constraint,
                                        max_n=max(12, g.n), max_k=max(5, k),
                                        budget=args.budget)
        print(report.to_json())
        return 0
    k, lett = solver.lettericity(g, max_n=max(12, g.n), budget=args.budget)
    if args.json:
        print(json.dumps({"lettericity": k,
                          "lettering": json.loads(
                              letters.lettering_to_json(lett))}))
    else:
        print(k)
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    if args.tree:
        print(json.dumps(modular.decomposition_tree(g)))
    else:
        print(modular.quotient(g).to_json())
    return 0


def _cmd_profile(args) -> int:
    g = _read_graph(args.graph)
    prof = obstructions.profile(g)
    out = {"p": prof.p, "q": prof.q, "r": prof.r}
    if args.m is not None:
        b = obstructions.bounds(args.m, prof.p, prof.q, prof.r)
        out.update({"m": args.m, "g": b.g, "f_paper": b.f_paper,
                    "F_impl": b.f_impl})
    print(json.dumps(out))
    return 0


def _cmd_compose(args) -> int:
    g = _read_graph(args.graph)
    cert = composer.compose(g, max_n=max(12, g.n), budget=args.budget)
    if args.verify and not letters.verify(g, cert.lettering):
        print("verification failed", file=sys.stderr)
        return 1
    if args.json:
        print(cert.to_json())
    else:
        print(f"alphabet_size={cert.alphabet_size} "
              f"word={cert.lettering.word_string()}")
    return 0


# -- the claim-verification suite --------------------------------------------

def _check_matching_lettericity() -> dict:
    ok = all(solver.lettericity(graphs.matching(m))[0] == m
             for m in (1, 2, 3))
    ok = ok and solver.is_k_letterable(
        graphs.matching(3), 2).outcome == "exhausted"
    return {"pass": ok}


def _check_constrained_stacked() -> dict:
    g, labels = graphs.stacked_path(2)
    constraint = solver.LetterClassConstraint.of(
        {labels.id_of("s", 1, 1), labels.id_of("s", 2, 1)},
        {labels.id_of("c", 1, 1), labels.id_of("c", 2, 1)},
        {labels.id_of("c", 1, 2), labels.id_of("c", 2, 2)},
        {labels.id_of("s", 1, 2), labels.id_of("s", 2, 2)})
    report = solver.is_k_letterable(g, 4, constraint)
    return {"pass": report.outcome == "exhausted",
            "decoders_tried": report.decoders_tried,
            "nodes_expanded": report.nodes_expanded}


def _check_prime_classification() -> dict:
    checked = 0
    for n in range(4, 8):
        for g in graphs.all_graphs(n):
            if not modular.is_prime(g):
                continue
            for v in range(g.n):
                role = modular.classify_vertex(g, v)
                if not modular.verify_role(g, v, role):
                    return {"pass": False, "graph": graphs.to_graph6(g),
                            "vertex": v}
                checked += 1
    return {"pass": True, "vertices_checked": checked}


def _check_composer(seed: int) -> dict:
    import random
    rng = random.Random(seed)
    count = 0
    for n in range(1, 7):
        for g in graphs.all_graphs(n):
            cert = composer.compose(g)
            if not cert.bound_check["within_F_impl"]:
                return {"pass": False, "graph": graphs.to_graph6(g)}
            count += 1
    for _ in range(25):
        base = rng.choice([graphs.path(4), graphs.bull(), graphs.cycle(5)])
        mods = [_random_cograph(rng, rng.randint(1, 5)) for _ in range(base.n)]
        g, _ = graphs.inflate(base, mods)
        cert = composer.compose(g)
        if not cert.bound_check["within_F_impl"]:
            return {"pass": False, "graph": graphs.to_graph6(g)}
        count += 1
    return {"pass": True, "graphs_checked": count}


def _random_cograph(rng, n: int) -> graphs.Graph:
    if n == 1:
        return graphs.path(1)
    left = rng.randint(1, n - 1)
    op = graphs.join if rng.random() < 0.5 else graphs.disjoint_union
    return op(_random_cograph(rng, left), _random_cograph(rng, n - left))


def _check_dualities() -> dict:
    count = 0
    for n in range(1, 6):
        for g in graphs.all_graphs(n):
            if solver.lettericity(g)[0] != solver.lettericity(g.complement())[0]:
                return {"pass": False, "graph": graphs.to_graph6(g)}
            count += 1
    return {"pass": True, "graphs_checked": count}


_SUITES = {
    "prop41": lambda seed: _check_matching_lettericity(),
    "prop43": lambda seed: _check_constrained_stacked(),
    "thm32": lambda seed: _check_prime_classification(),
    "thm51": _check_composer,
    "dualities": lambda seed: _check_dualities(),
}


def _cmd_verify_paper(args) -> int:
    names = sorted(args.suite.split(",")) if args.suite else sorted(_SUITES)
    for name in names:
        if name not in _SUITES:
            print(f"unknown suite {name!r}", file=sys.stderr)
            return 2
    deadline = time.monotonic() + args.budget if args.budget else None
    threads = int(os.environ.get("LETTERKIT_THREADS", "0"))

    def run_one(name: str) -> tuple[str, dict]:
        start = time.monotonic()
        if deadline is not None and start > deadline:
            return name, {"status": "budget-exhausted"}
        try:
            result = _SUITES[name](args.seed)
        except solver.BudgetExceeded:
            return name, {"status": "budget-exhausted"}
        result["status"] = "pass" if result.pop("pass") else "FAIL"
        result["elapsed"] = round(time.monotonic() - start, 3)
        return name, result

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(run_one, names))
    else:
        results = dict(run_one(name) for name in names)
    failed = False
    for name in names:  # output ordering fixed by check name
        result = results[name]
        print(json.dumps({"check": name, **result}))
        if result["status"] != "pass":
            failed = True
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="letterkit",
        description="letter graphs: exact lettericity, modular "
                    "decomposition, obstructions, and lettering composition")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument("--family", required=True, choices=graphs._FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--seq", help="threshold creation sequence over i/d")
    p.add_argument("--g6", action="store_true", help="graph6 output (default)")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("decode", help="decode a word against a decoder")
    p.add_argument("--decoder", required=True,
                   help='comma-separated ordered pairs, e.g. "ab,ba"')
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("lettericity", help="exact lettericity of a graph")
    p.add_argument("graph", help="graph6 file path or - for stdin")
    p.add_argument("--max-k", type=int, default=None,
                   help="run a single k-letterability check instead")
    p.add_argument("--classes", help="JSON file with same-letter classes")
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lettericity)

    p = sub.add_parser("decompose", help="modular decomposition")
    p.add_argument("graph")
    p.add_argument("--tree", action="store_true",
                   help="full recursive decomposition tree")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("profile", help="(p, q, r) obstruction profile")
    p.add_argument("graph")
    p.add_argument("--m", type=int, default=None,
                   help="also print the bound tables for this m")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("compose", help="constructive lettering with certificate")
    p.add_argument("graph")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=float, default=None)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("verify-paper", help="run the claim-verification suite")
    p.add_argument("--suite", help="comma-separated subset: "
                                   + ",".join(sorted(_SUITES)))
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized checks")
    p.set_defaults(func=_cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except solver.BudgetExceeded as exc:
        print(json.dumps({"status": "budget-exhausted", "detail": str(exc)}))
        return 1
    except (ValueError, OSError, graphs.ScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
