"""Command-line front end.

    seaweed kg --type F --rank 4
    seaweed cascade --type A --rank 3 --s 1,2,3
    seaweed index --type A --rank 2 --s 1,2 --t 1
    seaweed bound --type B --rank 3 --s 1,2 --t 3
    seaweed verify --type B --rank 2
    seaweed construct-parabolic --type E --rank 6 --i 0
    seaweed meander --rank 2 --s 1,2 --t 1 --svg out.svg

Exit codes: 0 success, 1 some pair misses equality, 2 invalid input,
3 some pair violates the upper bound.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cascade import cascade, kg
from .chevalley import structure_constants
from .meander import CompositionPair, MeanderGraph, compositions_from_subsets, meander_index_sl
from .parabolic import parabolic_of_index
from .rootsys import (
    InputError,
    SimpleType,
    build_root_system,
    format_subset,
    parse_subset,
    subset_from_mask,
    subset_mask,
)
from .seaweed import build_seaweed, d_bound, generic_index, phi_matrix, random_form, verify_pair

SCHEMA = 1
COMMANDS = ("kg", "cascade", "index", "bound", "verify", "construct-parabolic", "meander")

EXIT_OK, EXIT_EQUALITY, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


@dataclass
class CliConfig:
    command: str
    letter: str | None
    rank: int | None
    s: str | None = None
    t: str | None = None
    seed: int = 42
    trials: int = 3
    output: str = "json"
    max_pairs: int | None = None
    workers: int = 1
    target: int | None = None
    a: str | None = None
    b: str | None = None
    svg: str | None = None
    dump_matrix: str | None = None


def default_seed() -> int:
    env = os.environ.get("SEAWEED_SEED")
    if env is None:
        return 42
    try:
        return int(env)
    except ValueError:
        raise InputError(f"SEAWEED_SEED={env!r} is not an integer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seaweed", description="Index of seaweed subalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", dest="letter", required=name != "meander", default="A" if name == "meander" else None)
        p.add_argument("--rank", type=int, required=name != "meander")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=3)
        p.add_argument("--output", choices=("json", "text"), default="json")
        if name in ("cascade", "index", "bound", "meander"):
            p.add_argument("--s", default=None, help='subset such as "1,3,4" or "none"')
        if name in ("index", "bound", "meander"):
            p.add_argument("--t", default=None)
        if name == "index":
            p.add_argument("--dump-matrix", default=None, help="write Phi_f of the first trial as JSON rows")
        if name == "verify":
            p.add_argument("--max-pairs", type=int, default=None)
            p.add_argument("--workers", type=int, default=1)
        if name == "construct-parabolic":
            p.add_argument("--i", dest="target", type=int, required=True)
        if name == "meander":
            p.add_argument("--a", default=None, help="top composition, e.g. 3")
            p.add_argument("--b", default=None, help="bottom composition, e.g. 2,1")
            p.add_argument("--svg", default=None)
    return parser


def config_from_args(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(
        command=ns.command,
        letter=ns.letter,
        rank=ns.rank,
        s=getattr(ns, "s", None),
        t=getattr(ns, "t", None),
        seed=ns.seed if ns.seed is not None else default_seed(),
        trials=ns.trials,
        output=ns.output,
        max_pairs=getattr(ns, "max_pairs", None),
        workers=getattr(ns, "workers", 1),
        target=getattr(ns, "target", None),
        a=getattr(ns, "a", None),
        b=getattr(ns, "b", None),
        svg=getattr(ns, "svg", None),
        dump_matrix=getattr(ns, "dump_matrix", None),
    )


def _rs(cfg: CliConfig):
    if cfg.letter is None or cfg.rank is None:
        raise InputError("--type and --rank are required")
    return build_root_system(SimpleType(cfg.letter, cfg.rank))


def _subset(text: str | None, rank: int, default):
    return default if text is None else parse_subset(text, rank)


def _verify_task(args):
    letter, rank, sm, tm, seed, trials = args
    rs = build_root_system(SimpleType(letter, rank))
    return verify_pair(rs, subset_from_mask(sm), subset_from_mask(tm), seed=seed, trials=trials).as_dict()


def enumerate_pairs(rank: int, max_pairs: int | None, seed: int) -> list[tuple[int, int]]:
    """All (S, T) masks in canonical order, or a seeded sample of max_pairs."""
    total = 1 << (2 * rank)
    if max_pairs is None or max_pairs >= total:
        codes = range(total)
    else:
        codes = sorted(random.Random(seed).sample(range(total), max_pairs))
    return [(c >> rank, c & ((1 << rank) - 1)) for c in codes]


def run(cfg: CliConfig) -> tuple[int, dict]:
    """Dispatch a command; returns (exit code, report)."""
    if cfg.trials < 1:
        raise InputError("--trials must be >= 1")
    report: dict = {"schema": SCHEMA, "command": cfg.command}
    code = EXIT_OK

    if cfg.command == "meander" and cfg.a is not None:
        if cfg.b is None:
            raise InputError("--a needs --b")
        a = tuple(int(x) for x in cfg.a.split(","))
        b = tuple(int(x) for x in cfg.b.split(","))
        cp = CompositionPair(sum(a), a, b)
    else:
        rs = _rs(cfg)
        report["type"] = str(rs.simple_type)

    if cfg.command == "kg":
        report["k"] = kg(rs)
    elif cfg.command == "cascade":
        S = _subset(cfg.s, rs.rank, rs.pi)
        report["S"] = sorted(S)
        report["cascade"] = [
            {"subset": sorted(m.subset), "epsilon_coeffs": list(m.epsilon), "gamma_size": len(m.gamma)}
            for m in cascade(rs, S)
        ]
    elif cfg.command in ("index", "bound"):
        S = _subset(cfg.s, rs.rank, rs.pi)
        T = _subset(cfg.t, rs.rank, frozenset())
        report["S"], report["T"] = sorted(S), sorted(T)
        report["d"] = d_bound(rs, S, T)
        if cfg.command == "index":
            q = build_seaweed(rs, S, T)
            sc = structure_constants(rs)
            report["dim"] = q.dim
            report["chi"] = generic_index(q, sc, cfg.trials, cfg.seed)
            if cfg.dump_matrix:
                f = random_form(q, random.Random(cfg.seed))
                with open(cfg.dump_matrix, "w") as fh:
                    json.dump(phi_matrix(q, sc, f), fh)
    elif cfg.command == "verify":
        pairs = enumerate_pairs(rs.rank, cfg.max_pairs, cfg.seed)
        tasks = [(rs.simple_type.letter, rs.rank, sm, tm, cfg.seed, cfg.trials) for sm, tm in pairs]
        if cfg.workers > 1:
            with ProcessPoolExecutor(cfg.workers) as pool:
                rows = list(pool.map(_verify_task, tasks, chunksize=16))
        else:
            rows = [_verify_task(t) for t in tasks]
        rows.sort(key=lambda r: (subset_mask(r["S"]), subset_mask(r["T"])))
        report["pairs"] = rows
        report["n_pairs"] = len(rows)
        report["bound_failures"] = sum(not r["bound_ok"] for r in rows)
        report["equality_failures"] = sum(not r["equality"] for r in rows)
        if report["bound_failures"]:
            code = EXIT_BOUND
        elif report["equality_failures"]:
            code = EXIT_EQUALITY
    elif cfg.command == "construct-parabolic":
        S, T = parabolic_of_index(rs, cfg.target)
        q = build_seaweed(rs, S, T)
        report["i"] = cfg.target
        report["S"], report["T"] = sorted(S), sorted(T)
        report["chi"] = generic_index(q, structure_constants(rs), cfg.trials, cfg.seed)
        if report["chi"] != cfg.target:
            code = EXIT_EQUALITY
    elif cfg.command == "meander":
        if cfg.a is None:
            S = _subset(cfg.s, rs.rank, rs.pi)
            T = _subset(cfg.t, rs.rank, frozenset())
            cp = compositions_from_subsets(rs, S, T)
        report["n"], report["a"], report["b"] = cp.n, list(cp.a), list(cp.b)
        graph = MeanderGraph.from_pair(cp)
        cycles, paths = graph.components()
        report["cycles"], report["paths"] = cycles, paths
        report["index"] = meander_index_sl(cp)
        if cfg.svg:
            with open(cfg.svg, "w") as fh:
                fh.write(graph.svg())
    return code, report


def format_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "pairs":
            for r in value:
                lines.append(
                    f"S={format_subset(r['S']):<12} T={format_subset(r['T']):<12} "
                    f"chi={r['chi']} d={r['d']} bound_ok={r['bound_ok']} equality={r['equality']}"
                )
        elif key == "cascade":
            for m in value:
                lines.append(f"K={format_subset(m['subset'])} eps={m['epsilon_coeffs']} |Gamma|={m['gamma_size']}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        code, report = run(cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if cfg.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(format_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
