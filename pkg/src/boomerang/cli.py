"""Command-line interface: ``boomerang <command> ...``.

Exit codes: 0 all checks pass, 1 a check failed, 2 unparsable input,
3 a generation budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import acceptance, cartan as K, ecgraph as E, fixtures
from .errors import (BoomerangError, BudgetExceeded, InconsistentQuiddity, InvalidCartanGraph,
                     IsomorphismFailed, NotFinite, NotPathSimplyConnected, ParseError)
from .formats import (bicharacter_from_json, cartan_from_json, cartan_to_dot, cartan_to_json,
                      dumps, graph_from_json, graph_to_json, load_json_text, name_of, to_dot)
from .frieze import (QuidditySequence, cartan_graph_from_quiddity, frieze_from_cartan_graph,
                     verify_conway_coxeter)
from . import nichols as NI
from . import superalg as SA

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class Report:
    """Per-check statuses plus a mirror as JSON; exit code 0 iff every check passed."""

    def __init__(self, command):
        self.command = command
        self.checks = []
        self.data = {}
        self.started = time.perf_counter()

    def check(self, name, passed, witness=None):
        self.checks.append({"check": name, "passed": bool(passed),
                            "witness": None if witness is None else str(witness)})
        return passed

    @property
    def exit_code(self):
        return EXIT_OK if all(c["passed"] for c in self.checks) else EXIT_FAIL

    def to_json(self, timing=False):
        out = {"command": self.command, "checks": self.checks, "data": self.data,
               "exit_code": self.exit_code}
        if timing:
            out["seconds"] = round(time.perf_counter() - self.started, 3)
        return out

    def table(self):
        lines = [f"$ {self.command}"]
        for c in self.checks:
            mark = "pass" if c["passed"] else "FAIL"
            w = f"  witness: {c['witness']}" if c["witness"] and not c["passed"] else ""
            lines.append(f"  [{mark}] {c['check']}{w}")
        for k, v in self.data.items():
            if isinstance(v, (list, dict)):
                v = json.dumps(v)
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)


def _read_source(source):
    """A path, ``-`` for stdin, or the name of a bundled fixture."""
    if source in (None, "-"):
        return load_json_text(sys.stdin.read())
    if os.path.exists(source):
        with open(source) as fh:
            return load_json_text(fh.read())
    if source in fixtures.fixture_names():
        return fixtures.load(source)
    raise ParseError(f"no such file or bundled fixture: {source}")


def _emit(report, args):
    if getattr(args, "format", "table") == "json":
        sys.stdout.write(dumps(report.to_json(getattr(args, "timing", False))))
    else:
        print(report.table())
    return report.exit_code


# ----------------------------------------------------------------------------

def cmd_rb_check(args):
    g = graph_from_json(_read_source(args.path))
    rep = Report(args.echo)
    try:
        E.validate_proper(g)
        rep.check("properly colored", True)
    except BoomerangError as exc:
        rep.check("properly colored", False, exc.witness)
        return _emit(rep, args)
    if not g.is_connected():
        rep.check("connected", False, [sorted(c) for c in g.components()])
        return _emit(rep, args)
    res = E.is_rainbow_boomerang(g)
    rep.check("rainbow boomerang", res.verdict, f"{res.reason}: {res.witness}" if not res else None)
    if len(g.colors) <= E.ORACLE_MAX_COLORS:
        oracle = E.rb_oracle(g)
        rep.check("oracle agrees", oracle == res.verdict)
        rep.data["oracle"] = oracle
    rep.data["verdict"] = res.verdict
    return _emit(rep, args)


def _load_cartan(source):
    return cartan_from_json(_read_source(source))


def cmd_cartan(args):
    G = _load_cartan(args.path)
    rep = Report(args.echo)
    wanted = [f for f in ("axioms", "roots", "lwnw", "sc", "rb") if getattr(args, f)] or ["axioms"]
    W = K.generate_groupoid(G)
    rep.data["vertices"] = len(G.vertices)
    rep.data["morphisms"] = len(W)
    if "axioms" in wanted:
        for name, (ok, wit) in K.check_axioms(G, W).items():
            rep.check(name, ok, wit)
    if "roots" in wanted:
        pos = W.positive_roots()
        rep.data["positive_roots"] = {name_of(x): [list(r) for r in sorted(pos[x])] for x in G.vertices}
        rep.data["positive_root_count"] = len(pos[G.vertices[0]])
    if "lwnw" in wanted:
        bad = [m for m in W.morphisms() if len(set(K.length_and_N(W, m))) != 1]
        rep.check(f"l(w) = N(w) on {len(W)} morphisms", not bad, bad[0] if bad else None)
    if "sc" in wanted:
        sc, _ = K.simply_connected_cover(G, G.vertices[0], W)
        rep.data["sc_vertices"] = len(sc.vertices)
        if args.format == "dot":
            sys.stdout.write(cartan_to_dot(sc, "SC"))
            return rep.exit_code
        rep.data["sc"] = cartan_to_json(sc)
    if "rb" in wanted:
        try:
            rb = K.build_rb(G, W=W)
        except NotPathSimplyConnected as exc:
            rep.check("path simply connected", False, exc)
            return _emit(rep, args)
        rep.check("path simply connected", True)
        rep.check("RB(G) is rainbow boomerang", bool(E.is_rainbow_boomerang(rb)))
        if args.format == "dot":
            sys.stdout.write(to_dot(rb, "RB"))
            return rep.exit_code
        rep.data["rb"] = graph_to_json(rb)
    if args.format == "dot":
        sys.stdout.write(cartan_to_dot(G, "G"))
        return rep.exit_code
    return _emit(rep, args)


def cmd_frieze(args):
    try:
        q = QuidditySequence.parse(args.quiddity)
    except ValueError as exc:
        raise ParseError(f"bad quiddity sequence: {exc}") from exc
    G = cartan_graph_from_quiddity(q)
    p = frieze_from_cartan_graph(G, width=args.width)
    rep = Report(args.echo)
    rep.check("diamond rule", verify_conway_coxeter(p))
    if args.format == "json":
        rep.data["frieze"] = [list(r) for r in p.rows]
        rep.data["cartan_graph"] = cartan_to_json(G)
        return _emit(rep, args)
    print(p)
    print(dumps(cartan_to_json(G)), end="")
    print(rep.table())
    return rep.exit_code


def cmd_superalg(args):
    if args.family == "gl":
        m, n = args.m, args.n
        if args.emit == "exchange":
            G = SA.exchange_graph_gl(m, n)
            text = cartan_to_dot(G, f"E(gl({m}|{n}))") if args.format == "dot" else dumps(cartan_to_json(G))
        else:
            g = SA.or_graph_gl(m, n) if args.emit == "or" else K.build_rb(SA.exchange_graph_gl(m, n))
            text = to_dot(g, f"{args.emit.upper()}(gl({m}|{n}))") if args.format == "dot" else dumps(graph_to_json(g))
        sys.stdout.write(text)
        return EXIT_OK
    G, expected = SA.d21alpha()
    rep = Report(args.echo)
    W = K.generate_groupoid(G)
    for x in G.vertices:
        rep.check(f"R^{{{x}+}} matches the stored list", W.positive_roots(x) == expected["positive_roots"][x])
    orb = K.orbits_delta(G, W=W)
    rep.check("|Delta| = 14", len(orb) == expected["delta_size"])
    rep.check("|Delta pure+| = 4", len(orb.pure_positive()) == expected["pure_positive_size"])
    try:
        bij = SA.verify_or_equals_rb("d21a")
        rep.check("OR = RB", True)
        rep.data["color_bijection"] = {k: name_of(v) for k, v in bij.items()}
    except IsomorphismFailed as exc:
        rep.check("OR = RB", False, exc.witness)
    rep.data["positive_roots"] = {x: [list(r) for r in sorted(W.positive_roots(x))] for x in G.vertices}
    return _emit(rep, args)


def _parse_vector(text, theta):
    try:
        v = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer vector {text!r}") from exc
    if len(v) != theta:
        raise ParseError(f"expected {theta} entries, got {len(v)}")
    return v


def cmd_nichols(args):
    q = bicharacter_from_json(_read_source(args.path))
    G = NI.build_G(q)
    rep = Report(args.echo)
    roots = NI.positive_roots_with_orders(G)
    if args.action == "build-g":
        rep.check("axioms", all(ok for ok, _ in K.check_axioms(G.graph, G.groupoid).values()))
        rep.data["cartan_matrix"] = [list(r) for r in NI.cartan_matrix_of(q)]
        rep.data["base_vertices"] = len(G.base_graph.vertices)
        rep.data["vertices"] = len(G.graph.vertices)
        rep.data["positive_roots"] = [[list(b), o] for b, o in roots]
        rep.data["two_rho"] = list(NI.weyl_vector(G))
        if args.format == "dot":
            sys.stdout.write(cartan_to_dot(G.graph, "G"))
            return rep.exit_code
    elif args.action == "dlambda":
        lam = _parse_vector(args.lam, q.theta)
        fast = NI.d_lambda(q, roots, lam)
        oracle = NI.d_lambda(q, roots, lam, method="oracle")
        rep.check("fast path agrees with the cyclotomic oracle", fast == oracle)
        rep.data["D_lambda"] = [list(b) for b in sorted(fast)]
        g, _, _ = NI.rb_lambda(G, lam)
        rep.check("RB[q, lambda] is rainbow boomerang", bool(E.is_rainbow_boomerang(g)))
        rep.data["quotient"] = graph_to_json(g)
    elif args.action == "verma-check":
        rb = NI.rb_qbar(G)
        walks = 0
        for lam in NI.lambda_box(q.theta, args.lambda_range):
            g, _, _ = NI.rb_lambda(G, lam, rb)
            if not rep.check(f"RB[q, {lam}] rainbow boomerang", bool(E.is_rainbow_boomerang(g))):
                continue
            dist = E.distances(g)
            bad = None
            for w in NI.enumerate_walks(g, args.max_walk):
                walks += 1
                if not NI.verma_walk_verdict(G, lam, w, g, dist).consistent:
                    bad = w
                    break
            rep.check(f"verdicts agree for lambda = {lam}", bad is None, bad)
        rep.data["walks"] = walks
    elif args.action == "char":
        lam = _parse_vector(args.lam, q.theta) if args.lam else (0,) * q.theta
        verts = G.graph.vertices
        if not 0 <= args.vertex < len(verts):
            raise ParseError(f"vertex index must lie in 0..{len(verts) - 1}")
        v = verts[args.vertex]
        ch = NI.verma_character(G, v, lam)
        rep.check("independent of the vertex",
                  all(NI.verma_character(G, u, lam) == ch for u in verts))
        rep.check("highest weight coefficient is 1", ch.coefficient(NI.highest_weight(G, v, lam)) == 1)
        rep.data["vertex"] = v
        rep.data["dimension"] = ch.total()
        rep.data["terms_doubled_exponents"] = [[list(k), c] for k, c in ch.sorted_terms()]
    return _emit(rep, args)


def cmd_suite(args):
    only = None
    if args.only:
        only = {int(t) for t in args.only.split(",")}
    results = acceptance.run_suite(seed=args.seed, fast=args.fast, only=only)
    if args.format == "json":
        out = {"command": args.echo,
               "criteria": [r.to_json(args.timing) for r in results],
               "exit_code": EXIT_OK if all(r.ok for r in results) else EXIT_FAIL}
        sys.stdout.write(dumps(out))
    else:
        for r in results:
            print(r.line(timing=True))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# ----------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="boomerang", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, choices=("table", "json")):
        sp.add_argument("--format", choices=choices, default="table")
        sp.add_argument("--timing", action="store_true", help="include wall time in JSON output")

    sp = sub.add_parser("rb-check", help="decide whether a colored graph is rainbow boomerang")
    sp.add_argument("path", nargs="?", help="graph JSON file, bundled fixture name, or - for stdin")
    fmt(sp)
    sp.set_defaults(func=cmd_rb_check)

    sp = sub.add_parser("cartan", help="analyse a semi Cartan graph")
    sp.add_argument("path")
    for flag, text in (("axioms", "check (CG1)-(CG4)"), ("roots", "list positive real roots"),
                       ("lwnw", "check l(w) = N(w) on every morphism"),
                       ("sc", "build the simply connected cover"), ("rb", "build RB(G)")):
        sp.add_argument(f"--{flag}", action="store_true", help=text)
    fmt(sp, ("table", "json", "dot"))
    sp.set_defaults(func=cmd_cartan)

    sp = sub.add_parser("frieze", help="frieze and Cartan graph of a quiddity sequence")
    sp.add_argument("--quiddity", required=True, help="comma separated, e.g. 2,1,3,1,2,2,1,3,1,2")
    sp.add_argument("--width", type=int, default=15)
    fmt(sp)
    sp.set_defaults(func=cmd_frieze)

    sp = sub.add_parser("superalg", help="gl(m|n) and D(2,1;alpha) graphs")
    fam = sp.add_subparsers(dest="family", required=True)
    gl = fam.add_parser("gl")
    gl.add_argument("m", type=int)
    gl.add_argument("n", type=int)
    gl.add_argument("--emit", choices=("or", "exchange", "rb"), default="or")
    gl.add_argument("--format", choices=("dot", "json"), default="json")
    gl.set_defaults(func=cmd_superalg)
    d = fam.add_parser("d21a")
    fmt(d)
    d.set_defaults(func=cmd_superalg)

    sp = sub.add_parser("nichols", help="bicharacters, D_lambda and Verma characters")
    act = sp.add_subparsers(dest="action", required=True)
    for name in ("build-g", "dlambda", "verma-check", "char"):
        a = act.add_parser(name)
        a.add_argument("path", help="bicharacter JSON file or bundled fixture name")
        fmt(a, ("table", "json", "dot") if name == "build-g" else ("table", "json"))
        if name in ("dlambda", "char"):
            a.add_argument("--lambda", dest="lam", required=name == "dlambda", default=None)
        if name == "verma-check":
            a.add_argument("--lambda-range", type=int, default=2)
            a.add_argument("--max-walk", type=int, default=6)
        if name == "char":
            a.add_argument("--vertex", type=int, default=0)
        a.set_defaults(func=cmd_nichols)

    sp = sub.add_parser("suite", help="run the acceptance suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--fast", action="store_true", help="skip oracle cross-checks")
    sp.add_argument("--only", help="comma separated criterion numbers")
    fmt(sp)
    sp.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    args.echo = " ".join(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (BudgetExceeded, NotFinite) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidCartanGraph, InconsistentQuiddity) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BoomerangError as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
