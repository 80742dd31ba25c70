"""Command-line front end.

Every run first echoes its effective configuration, then its results, as
``key=value`` lines (``--format human`` prints ``key: value`` instead).
Exit status: 0 success, 1 a "none"/failure result, 2 usage or input errors,
3 internal-invariant failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import coloring as col
from .errors import BudgetExhausted, InternalInvariantError, ParseError, PreconditionError, PremiseViolated
from .generators import BUILTIN_GRAPHS, MAX_SEED, builtin_embeddings, builtin_graph, generate
from .graph import euler_discharge, format_graph, parse_graph
from .hall import DEFAULT_NODE_BUDGET, extendable
from .nullstellensatz import (
    DEFAULT_CANDIDATE_BUDGET,
    LEMMA_C5_SIZES,
    LEMMA_C5_TARGET,
    cn_certificate,
    coefficient,
    lemma_c5_factors,
)
from .reducibility import KINDS, build_configuration, stress_test

DEFAULT_SEED = 0
DEFAULT_TRIALS = 1000
DEFAULT_LIST_SIZE = 10

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _seed(text):
    v = int(text)
    if not 0 <= v <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    def kv(self, key, value):
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ",".join(str(x) for x in value)
        sep = ": " if self.fmt == "human" else "="
        self.stream.write(f"{key}{sep}{value}\n")

    def text(self, line):
        if self.fmt == "human":
            self.stream.write(line + "\n")

    def coloring(self, coloring):
        for e in sorted(coloring):
            self.kv(f"color.{e}", coloring[e])


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args, out):
    if args.builtin and args.graph:
        raise UsageError("give either a graph file or --builtin, not both")
    if args.builtin:
        if args.builtin not in BUILTIN_GRAPHS:
            raise UsageError(f"unknown built-in graph {args.builtin!r}")
        out.kv("input", f"builtin:{args.builtin}")
        return builtin_graph(args.builtin)
    if not args.graph:
        raise UsageError("a graph file or --builtin is required")
    out.kv("input", args.graph)
    return parse_graph(_read(args.graph))


def _load_lists(args, g, out, default_size=None):
    picked = [x is not None for x in (args.lists, args.uniform, args.random)]
    if sum(picked) > 1:
        raise UsageError("use only one of --lists, --uniform, --random")
    if args.lists:
        out.kv("lists", args.lists)
        ls = col.parse_lists(_read(args.lists))
        if len(ls) != g.edge_count:
            raise UsageError(f"list file covers {len(ls)} edges, graph has {g.edge_count}")
        return ls
    if args.random is not None:
        universe = args.universe or 3 * args.random
        out.kv("lists", f"random:{args.random}")
        out.kv("universe", universe)
        out.kv("seed", args.seed)
        return col.random_lists(g, args.random, universe, args.seed)
    k = args.uniform if args.uniform is not None else default_size
    if k is None:
        raise UsageError("lists required: --lists FILE, --uniform K or --random K")
    out.kv("lists", f"uniform:{k}")
    return col.uniform_lists(g, k)


def _graph_args(p):
    p.add_argument("graph", nargs="?", help="edge-list file")
    p.add_argument("--builtin", help="named instance: " + ", ".join(BUILTIN_GRAPHS))


def _list_args(p):
    p.add_argument("--lists", help="list-assignment file ('<edge>: <colours...>' per line)")
    p.add_argument("--uniform", type=_positive, help="every edge gets {1..K}")
    p.add_argument("--random", type=_positive, metavar="K", help="random K-subsets of {1..universe}")
    p.add_argument("--universe", type=_positive, help="colour universe for --random (default 3K)")


def _common(p):
    p.add_argument("--format", choices=("machine", "human"), default="machine")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--node-budget", type=_positive, default=DEFAULT_NODE_BUDGET)


def build_parser():
    parser = _Parser(prog="strongcolor", description="Strong edge colouring toolkit for subcubic graphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("verify", help="check a colouring against the see-relation")
    _graph_args(p)
    p.add_argument("--coloring", required=True, help="colouring file ('<edge>: <colour>' per line)")
    _common(p)

    p = sub.add_parser("chi-s", help="exact strong chromatic index")
    _graph_args(p)
    _common(p)

    p = sub.add_parser("list-color", help="exact strong list colouring")
    _graph_args(p)
    _list_args(p)
    _common(p)

    for name, help_ in (
        ("color11", "constructive colouring from lists of size >= 11"),
        ("color10-planar", "constructive colouring of a planar input from lists of size >= 10"),
    ):
        p = sub.add_parser(name, help=help_)
        _graph_args(p)
        _list_args(p)
        _common(p)

    p = sub.add_parser("greedy", help="far-to-near greedy extension around a vertex")
    _graph_args(p)
    _list_args(p)
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--precolor", action="append", default=[], metavar="EDGE:COLOUR")
    _common(p)

    p = sub.add_parser("coeff", help="coefficient of a monomial in a product of differences")
    p.add_argument("instance", nargs="?", help="file with 'target ...' and 'factor k l' lines")
    p.add_argument("--builtin", choices=("lemma-c5",))
    p.add_argument("--target", help="comma-separated exponents (overrides the file)")
    _common(p)

    p = sub.add_parser("cn-cert", help="search for a Nullstellensatz certificate")
    p.add_argument("instance", nargs="?", help="file with 'sizes ...' and 'conflict k l' lines")
    p.add_argument("--builtin", choices=("lemma-c5",))
    p.add_argument("--budget", type=_positive, default=DEFAULT_CANDIDATE_BUDGET, help="candidate monomials to try")
    _common(p)

    p = sub.add_parser("lemma-test", help="randomized extension test of a reducible configuration")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--list-size", type=int, choices=(10, 11), default=DEFAULT_LIST_SIZE)
    p.add_argument("--trials", type=_positive, default=DEFAULT_TRIALS)
    p.add_argument("--universe", type=_positive)
    _common(p)

    p = sub.add_parser("discharge", help="Euler discharge sum of a built-in planar embedding")
    p.add_argument("--embedding", help="built-in embedding name")
    p.add_argument("--all", action="store_true", help="every built-in embedding")
    _common(p)

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", help="also write the edge list to this file")
    _common(p)

    p = sub.add_parser("extend", help="list assignment on an arbitrary conflict graph")
    p.add_argument("instance", help="file with 'list c1 c2 ...' and 'conflict i j' lines")
    _common(p)
    return parser


def _cmd_verify(args, out):
    g = _load_graph(args, out)
    c = col.parse_coloring(_read(args.coloring))
    bad = [e for e in c if not 0 <= e < g.edge_count]
    if bad:
        raise UsageError(f"colouring mentions edge {bad[0]} not in graph")
    res = col.verify(g, c)
    out.kv("edges", g.edge_count)
    out.kv("coloured", len(c))
    out.kv("valid", res.valid)
    out.kv("violations", len(res.violations))
    for e, f in res.violations:
        out.kv("violation", f"{e},{f}")
    return EXIT_OK if res.valid else EXIT_NONE


def _cmd_chi_s(args, out):
    g = _load_graph(args, out)
    out.kv("node_budget", args.node_budget)
    out.kv("vertices", g.vertex_count)
    out.kv("edges", g.edge_count)
    out.kv("chi_s", col.strong_chromatic_index(g, node_budget=args.node_budget))
    return EXIT_OK


def _cmd_list_color(args, out):
    g = _load_graph(args, out)
    ls = _load_lists(args, g, out)
    out.kv("node_budget", args.node_budget)
    found = col.exact_list_color(g, ls, args.node_budget)
    if found is None:
        out.kv("result", "none")
        return EXIT_NONE
    out.kv("result", "found")
    out.kv("valid", col.verify(g, found).valid)
    out.coloring(found)
    return EXIT_OK


def _cmd_construct(args, out, size, planar):
    g = _load_graph(args, out)
    ls = _load_lists(args, g, out, default_size=size)
    out.kv("list_size", size)
    try:
        cons = col.construct_coloring(g, ls, size, planar=planar, node_budget=args.node_budget)
    except PremiseViolated as exc:
        out.kv("result", "premise-violated")
        out.kv("error", str(exc))
        return EXIT_NONE
    res = col.verify(g, cons.coloring)
    out.kv("result", "found")
    out.kv("valid", res.valid and col.respects_lists(cons.coloring, ls))
    for kind, n in sorted(Counter(cons.kinds()).items()):
        out.kv(f"steps.{kind}", n)
    out.coloring(cons.coloring)
    return EXIT_OK if res.valid else EXIT_INTERNAL


def _cmd_greedy(args, out):
    g = _load_graph(args, out)
    ls = _load_lists(args, g, out, default_size=11)
    pre = {}
    for item in args.precolor:
        e, sep, c = item.partition(":")
        try:
            pre[int(e)] = int(c)
        except ValueError:
            raise UsageError(f"bad --precolor {item!r}; expected EDGE:COLOUR") from None
    out.kv("vertex", args.vertex)
    out.kv("precolor", [f"{e}:{c}" for e, c in sorted(pre.items())])
    result = col.greedy_far_to_near(g, args.vertex, pre, ls)
    out.kv("coloured", len(result))
    out.kv("valid", col.verify(g, result).valid)
    out.coloring(result)
    return EXIT_OK


def _parse_instance(text, keys):
    """Lines ``<key> <ints...>``; returns ``{key: [int tuples]}``."""
    found = {k: [] for k in keys}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head not in found:
            raise ParseError(f"unknown directive {head!r}", lineno)
        try:
            found[head].append(tuple(int(x) for x in rest))
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", lineno) from None
    return found


def _pairs(rows, what):
    bad = [r for r in rows if len(r) != 2]
    if bad:
        raise ParseError(f"each {what} needs exactly two indices")
    return [tuple(r) for r in rows]


def _cmd_coeff(args, out):
    if args.builtin:
        out.kv("input", f"builtin:{args.builtin}")
        factors = list(lemma_c5_factors().pairs)
        target = LEMMA_C5_TARGET
    elif args.instance:
        out.kv("input", args.instance)
        inst = _parse_instance(_read(args.instance), ("target", "factor"))
        factors = _pairs(inst["factor"], "factor")
        target = inst["target"][0] if inst["target"] else None
    else:
        raise UsageError("an instance file or --builtin is required")
    if args.target:
        try:
            target = tuple(int(x) for x in args.target.split(","))
        except ValueError:
            raise UsageError("--target must be comma-separated integers") from None
    if target is None:
        raise UsageError("no target exponent vector given")
    out.kv("factors", len(factors))
    out.kv("target", target)
    try:
        value = coefficient(factors, target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.kv("coefficient", value)
    return EXIT_OK


def _cmd_cn_cert(args, out):
    if args.builtin:
        out.kv("input", f"builtin:{args.builtin}")
        sizes, conflicts = LEMMA_C5_SIZES, lemma_c5_factors()
    elif args.instance:
        out.kv("input", args.instance)
        inst = _parse_instance(_read(args.instance), ("sizes", "conflict"))
        if len(inst["sizes"]) != 1:
            raise UsageError("instance needs exactly one 'sizes' line")
        sizes = inst["sizes"][0]
        conflicts = _pairs(inst["conflict"], "conflict")
    else:
        raise UsageError("an instance file or --builtin is required")
    out.kv("sizes", sizes)
    out.kv("budget", args.budget)
    try:
        cert = cn_certificate(sizes, conflicts, args.budget)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cert is None:
        out.kv("certificate", "inconclusive")
        return EXIT_NONE
    out.kv("certificate", "found")
    out.kv("degree", cert.degree)
    out.kv("target", cert.target)
    out.kv("coefficient", cert.coefficient)
    return EXIT_OK


def _cmd_lemma_test(args, out):
    config = build_configuration(args.kind, args.list_size)
    universe = args.universe or 3 * args.list_size
    out.kv("universe", universe)
    out.kv("seed", args.seed)
    out.text(f"configuration {args.kind}: {len(config.edges)} residual edges, {len(config.conflicts)} conflicting pairs")
    out.text("bounds: " + " ".join(f"e{k + 1}>={b}" for k, b in enumerate(config.bounds)))
    report = stress_test(config, args.trials, args.seed, universe)
    out.text(f"{report.failures} of {report.trials} sampled instances could not be extended")
    if report.first_failure is not None:
        out.text("first failure: " + json.dumps(report.first_failure))
    out.stream.write(report.summary() + "\n")
    return EXIT_OK if report.failures == 0 else EXIT_NONE


def _cmd_discharge(args, out):
    emb = builtin_embeddings()
    if args.all == bool(args.embedding):
        raise UsageError("give exactly one of --embedding NAME or --all")
    names = sorted(emb) if args.all else [args.embedding]
    status = EXIT_OK
    for name in names:
        if name not in emb:
            raise UsageError(f"unknown embedding {name!r}; known: {', '.join(sorted(emb))}")
        value = euler_discharge(emb[name])
        out.kv(f"discharge.{name}" if args.all else "discharge", value)
        if value != -12:
            status = EXIT_NONE
    return status


def _cmd_gen(args, out):
    out.kv("kind", args.kind)
    out.kv("params", args.params)
    out.kv("seed", args.seed)
    try:
        g = generate(args.kind, *args.params, seed=args.seed)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out.kv("vertices", g.vertex_count)
    out.kv("edges", g.edge_count)
    out.kv("graph", json.dumps(g.to_dict(), separators=(",", ":")))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_graph(g))
        out.kv("written", args.out)
    return EXIT_OK


def _cmd_extend(args, out):
    out.kv("input", args.instance)
    out.kv("node_budget", args.node_budget)
    inst = _parse_instance(_read(args.instance), ("list", "conflict"))
    lists = inst["list"]
    conflicts = _pairs(inst["conflict"], "conflict")
    try:
        found = extendable(lists, conflicts, args.node_budget)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    if found is None:
        out.kv("result", "none")
        return EXIT_NONE
    out.kv("result", "found")
    out.kv("assignment", found)
    return EXIT_OK


COMMANDS = {
    "verify": _cmd_verify,
    "chi-s": _cmd_chi_s,
    "list-color": _cmd_list_color,
    "color11": lambda a, o: _cmd_construct(a, o, 11, False),
    "color10-planar": lambda a, o: _cmd_construct(a, o, 10, True),
    "greedy": _cmd_greedy,
    "coeff": _cmd_coeff,
    "cn-cert": _cmd_cn_cert,
    "lemma-test": _cmd_lemma_test,
    "discharge": _cmd_discharge,
    "gen": _cmd_gen,
    "extend": _cmd_extend,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        out = Output(args.format, stdout)
        out.kv("command", args.command)
        if "kind" in vars(args) and args.command == "lemma-test":
            out.kv("kind", args.kind)
            out.kv("list_size", args.list_size)
            out.kv("trials", args.trials)
        return COMMANDS[args.command](args, out)
    except (UsageError, ParseError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        stderr.write(f"error: precondition: {exc}\n")
        return EXIT_USAGE
    except BudgetExhausted as exc:
        stdout.write("result=budget-exhausted\n")
        stderr.write(f"error: {exc}\n")
        return EXIT_NONE
    except InternalInvariantError as exc:
        stderr.write(f"internal invariant failed: {exc}\n")
        stderr.write(json.dumps(exc.bundle, default=str, sort_keys=True) + "\n")
        return EXIT_INTERNAL
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
