"""``wheelkit`` command line.

Every subcommand except ``gen`` prints one JSON object tagged with
``"schema": "wheelkit/1"``. Exit codes: 0 success, 2 negative answer
with a certificate, 1 usage, input or budget error. Vertex names in
certificates are the ones used in the input file.
"""
import argparse
import hashlib
import json
import os
import sys

from . import oracle
from .coloring import Coloring, color3, color4_long, verify_coloring
from .connectivity import COMPLETE, is_minimally_3_connected, kappa
from .cycle3 import Splitter, cycle_or_splitter, verify_cycle_through, verify_splitter
from .errors import BudgetExceeded, NotWheelFreeError, StructuralError, WheelkitError
from .graph import components, cut_vertices, parse_labeled, write_graph
from .structure import ReductionOutcome, TwinPair, reduction_step, twin_pairs, verify_outcome
from .wheels import WheelWitness, classify, find_hub, find_long_wheel, find_wheel, verify_wheel
from . import zoo

SCHEMA = "wheelkit/1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Labels:
    """Translate between dense ids and the caller's vertex names."""

    def __init__(self, names):
        self.names = list(names)
        self.numeric = all(s == str(i) for i, s in enumerate(self.names))
        self.index = {s: i for i, s in enumerate(self.names)}

    def out(self, v):
        return v if self.numeric else self.names[v]

    def many(self, vs):
        return [self.out(v) for v in vs]

    def back(self, name):
        key = str(name)
        if key not in self.index:
            raise UsageError(f"unknown vertex {name!r}")
        return self.index[key]

    def backs(self, names):
        return [self.back(v) for v in names]


def _emit(obj):
    obj = dict(obj, schema=SCHEMA)
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def digest(g):
    return hashlib.sha256(write_graph(g).encode()).hexdigest()


# certificate (de)serialization in caller labels

def wheel_out(w, lab):
    if w is None:
        return None
    return {"center": lab.out(w.center), "rim": lab.many(w.rim),
            "spokes": lab.many(w.spokes), "k": w.k}


def wheel_in(d, lab):
    return WheelWitness(lab.back(d["center"]), tuple(lab.backs(d["rim"])),
                        tuple(lab.backs(d["spokes"])), d.get("k", 3))


def splitter_out(s, lab):
    return {"A": lab.many(s.A), "B": lab.many(s.B),
            "anchors": {k: lab.out(v) for k, v in sorted(s.anchors.items())},
            "X": lab.many(s.X), "Y": lab.many(s.Y), "Z": lab.many(s.Z)}


def splitter_in(d, lab):
    return Splitter(tuple(lab.backs(d["A"])), tuple(lab.backs(d["B"])),
                    {k: lab.back(v) for k, v in d["anchors"].items()},
                    tuple(lab.backs(d["X"])), tuple(lab.backs(d["Y"])), tuple(lab.backs(d["Z"])))


def coloring_out(c, lab):
    out = c.to_json()
    if not lab.numeric:
        out["vertices"] = list(lab.names)
    return out


def outcome_out(o, lab):
    return {"kind": o.kind, "vertices": lab.many(o.vertices),
            "pairs": [lab.many((p.u, p.v)) for p in o.pairs]}


def outcome_in(d, lab):
    return ReductionOutcome(d["kind"], tuple(lab.backs(d["vertices"])),
                            tuple(TwinPair(*lab.backs(p)) for p in d["pairs"]))


def _read(path, fmt):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    g, names = parse_labeled(text, fmt)
    return g, Labels(names)


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("WHEELKIT_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"WHEELKIT_BUDGET must be an integer, got {env!r}") from None
    return None


# subcommands

def cmd_analyze(args):
    g, lab = _read(args.file, args.format)
    cls = classify(g)
    report = {
        "digest": digest(g), "n": g.n, "m": g.num_edges,
        "classification": {"kind": cls.kind.value, "centers": lab.many(sorted(cls.centers))},
        "twin_pairs": [lab.many((p.u, p.v)) for p in twin_pairs(g)],
        "wheel": wheel_out(find_wheel(g), lab),
    }
    if g.n:
        k, cut = kappa(g)
        report["kappa"] = {"k": k, "cut": cut if cut == COMPLETE else lab.many(cut)}
        report["minimally_3_connected"] = bool(is_minimally_3_connected(g))
    if g.n >= 2:
        report["reduction"] = outcome_out(reduction_step(g), lab)
    if cls.kind.value == "WheelFree":
        report["coloring"] = coloring_out(color3(g, check=False), lab)
    elif find_long_wheel(g) is None:
        report["coloring"] = coloring_out(color4_long(g, check=False), lab)
    else:
        report["coloring"] = None
    _emit(report)
    return 0


def cmd_find_wheel(args):
    g, lab = _read(args.file, args.format)
    if args.k < 3:
        raise UsageError("--k must be at least 3")
    w = find_hub(g, args.k, min_rim=4 if args.long else 3)
    out = {"wheel": wheel_out(w, lab)}
    if args.k != 3:
        out["k"] = args.k
    if args.long:
        out["min_rim"] = 4
    _emit(out)
    return 0


def cmd_cycle3(args):
    g, lab = _read(args.file, args.format)
    if None in (args.x, args.y, args.z):
        raise UsageError("cycle3 needs --x, --y and --z")
    x, y, z = lab.backs([args.x, args.y, args.z])
    terms = lab.many((x, y, z))
    try:
        res = cycle_or_splitter(g, x, y, z)
    except StructuralError as exc:
        cut = exc.witness
        _emit({"error": "not 2-connected", "terminals": terms,
               "cut_vertex": None if cut is None else lab.out(cut)})
        return 2
    if isinstance(res, Splitter):
        _emit({"splitter": splitter_out(res, lab), "terminals": terms})
    else:
        _emit({"cycle": lab.many(res), "terminals": terms})
    return 0


def cmd_color(args):
    g, lab = _read(args.file, args.format)
    try:
        c = color3(g) if args.colors == 3 else color4_long(g)
    except NotWheelFreeError as exc:
        out = {"error": str(exc), "witness": wheel_out(exc.witness, lab)}
        if args.colors == 4:
            out["min_rim"] = 4
        _emit(out)
        return 2
    _emit({"coloring": coloring_out(c, lab)})
    return 0


def _check_cut(g, v):
    if v is None:
        return g.n < 3 or len(components(g)) > 1
    return v in cut_vertices(g)


def cmd_verify(args):
    g, lab = _read(args.file, args.format)
    try:
        with open(args.cert, encoding="utf-8") as fh:
            cert = json.load(fh)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load certificate {args.cert}: {exc}") from None
    if not isinstance(cert, dict):
        raise UsageError("certificate must be a JSON object")
    checks = {}
    min_rim = cert.get("min_rim", 3)
    try:
        if "wheel" in cert:
            w = cert["wheel"]
            if w is None:
                found = find_hub(g, cert.get("k", 3), min_rim=min_rim)
                checks["wheel"] = [] if found is None else ["a wheel exists"]
            else:
                checks["wheel"] = [str(v) for v in verify_wheel(g, wheel_in(w, lab), min_rim).violations]
        if "witness" in cert:
            checks["witness"] = [str(v) for v in verify_wheel(g, wheel_in(cert["witness"], lab), min_rim).violations]
        terms = lab.backs(cert.get("terminals", []))
        if "cycle" in cert:
            checks["cycle"] = [str(v) for v in verify_cycle_through(g, lab.backs(cert["cycle"]), terms).violations]
        if "splitter" in cert:
            if len(terms) != 3:
                raise UsageError("splitter certificate needs three terminals")
            checks["splitter"] = [str(v) for v in verify_splitter(g, *terms, splitter_in(cert["splitter"], lab)).violations]
        if "cut_vertex" in cert:
            cv = cert["cut_vertex"]
            ok = _check_cut(g, None if cv is None else lab.back(cv))
            checks["cut_vertex"] = [] if ok else [f"{cv!r} does not disconnect the graph"]
        if cert.get("coloring") is not None:
            c = cert["coloring"]
            checks["coloring"] = [str(v) for v in verify_coloring(g, Coloring.from_json(c), c.get("max", 3)).violations]
        if "reduction" in cert:
            checks["reduction"] = [str(v) for v in verify_outcome(g, outcome_in(cert["reduction"], lab)).violations]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc!r}") from None
    if not checks:
        raise UsageError("no recognizable certificate in input")
    valid = all(not v for v in checks.values())
    _emit({"valid": valid, "violations": {k: v for k, v in checks.items() if v}})
    return 0 if valid else 2


def cmd_gen(args):
    name, params = args.name, args.params
    if name in ("random", "wheel-free"):
        if args.seed is None:
            raise UsageError(f"gen {name} requires --seed")
        if len(params) != 2:
            raise UsageError(f"gen {name} takes N P")
        try:
            n, p = int(params[0]), float(params[1])
        except ValueError:
            raise UsageError("N must be an integer and P a number") from None
        g = zoo.random_graph(n, p, args.seed)
        if name == "wheel-free":
            g = zoo.make_wheel_free(g, args.seed)
    else:
        try:
            g = zoo.fixture(name.replace("-", "_"), *(int(p) for p in params))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    text = write_graph(g, args.format or "el")
    if args.json:
        _emit({"graph": text, "format": args.format or "el", "digest": digest(g)})
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args):
    g, lab = _read(args.file, args.format)
    cap = _budget(args)

    def budget(default):
        return default if cap is None else oracle.OracleBudget(cap, default.max_cycles, default.time_cap)

    out = {}
    agree = True
    checks = ("wheel", "chromatic", "k33") if args.check == "all" else (args.check,)
    for check in checks:
        if check == "wheel":
            brute = oracle.brute_wheel(g, budget(oracle.CYCLE_BUDGET))
            fast = find_wheel(g)
            same = (brute is None) == (fast is None)
            agree &= same
            out["wheel"] = {"brute": wheel_out(brute, lab), "fast": wheel_out(fast, lab), "agree": same}
        elif check == "chromatic":
            b = budget(oracle.COLOR_BUDGET)
            a, w = oracle.alpha_omega(g, b)
            out["chromatic"] = {"chi": oracle.chromatic_number(g, b), "alpha": a, "omega": w}
        elif check == "k33":
            sub = oracle.brute_k33_subdivision(g, budget(oracle.K33_BUDGET))
            out["k33"] = None if sub is None else {
                "left": lab.many(sub.left), "right": lab.many(sub.right),
                "paths": [lab.many(p) for p in sub.paths]}
        elif check == "cycle3":
            if None in (args.x, args.y, args.z):
                raise UsageError("--check cycle3 needs --x, --y and --z")
            x, y, z = lab.backs([args.x, args.y, args.z])
            brute = oracle.brute_cycle_through(g, x, y, z, budget(oracle.CYCLE_BUDGET))
            try:
                fast = cycle_or_splitter(g, x, y, z)
                fast_cycle = not isinstance(fast, Splitter)
            except StructuralError:
                fast_cycle = None
            same = fast_cycle is None or fast_cycle == (brute is not None)
            agree &= same
            out["cycle3"] = {"brute": None if brute is None else lab.many(brute), "agree": same}
    _emit(dict(out, agree=agree))
    return 0 if agree else 2


def build_parser():
    p = _Parser(prog="wheelkit", description="Wheels, cycles through three vertices, and colorings.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("file", help="edge list or graph6 file, '-' for stdin")
        sp.add_argument("--format", choices=("el", "g6"), help="input format (default: detect)")
        sp.add_argument("--json", action="store_true", help="JSON output (always on)")
        return sp

    with_input(sub.add_parser("analyze", help="full structural report"))
    sp = with_input(sub.add_parser("find-wheel", help="find a wheel or k-hub"))
    sp.add_argument("--k", type=int, default=3, help="hub order")
    sp.add_argument("--long", action="store_true", help="rim of at least four vertices")
    sp = with_input(sub.add_parser("cycle3", help="cycle through three vertices or a splitter"))
    for t in ("x", "y", "z"):
        sp.add_argument(f"--{t}")
    sp = with_input(sub.add_parser("color", help="3-color wheel-free or 4-color long-wheel-free graphs"))
    sp.add_argument("--colors", type=int, choices=(3, 4), default=3)
    sp = with_input(sub.add_parser("verify", help="re-check a certificate emitted by another subcommand"))
    sp.add_argument("--cert", required=True, help="certificate JSON file")
    sp = sub.add_parser("gen", help="print a fixture or a seeded random graph")
    sp.add_argument("name", help="fixture name, 'random' or 'wheel-free'")
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--format", choices=("el", "g6"))
    sp.add_argument("--json", action="store_true")
    sp = with_input(sub.add_parser("oracle", help="brute-force cross-checks on small graphs"))
    sp.add_argument("--check", choices=("wheel", "chromatic", "k33", "cycle3", "all"), default="all")
    sp.add_argument("--budget", type=int, help="largest vertex count the oracles accept")
    for t in ("x", "y", "z"):
        sp.add_argument(f"--{t}")
    return p


COMMANDS = {"analyze": cmd_analyze, "find-wheel": cmd_find_wheel, "cycle3": cmd_cycle3,
            "color": cmd_color, "verify": cmd_verify, "gen": cmd_gen, "oracle": cmd_oracle}


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"wheelkit: {exc}\n")
        return 1
    except (BudgetExceeded, WheelkitError) as exc:
        sys.stderr.write(f"wheelkit: {exc}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
