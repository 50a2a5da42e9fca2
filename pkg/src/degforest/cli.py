"""Command-line front end.

Exit codes: 0 a tree/forest (or a passing check), 1 a certificate or
witness, 2 bad usage or input, 3 a broken internal invariant.
"""
import argparse
import json
import sys

from .cograph import b_value, cograph_forest
from .errors import (
    DisconnectedGraph,
    GraphFormatError,
    InstanceTooLarge,
    InternalError,
    NotCograph,
    PreconditionRefuted,
)
from .forest import degree_forest, degree_spanning_tree, verify_certificate
from .graph import Certificate, parse_constraints, parse_graph
from .oracle import brute_condition_min, brute_forest_exists, check_solution
from .wndt import DensityWitness, defect_forest, planar_girth_tree

OK, FOUND, BAD_INPUT, INTERNAL = 0, 1, 2, 3


class Report:
    """Collects one answer and renders it as text or JSON."""

    def __init__(self, status, head, edges=None, certificate=None, lhs=None, rhs=None, extra=()):
        self.status = status
        self.head = head
        self.edges = edges
        self.certificate = certificate
        self.lhs = lhs
        self.rhs = rhs
        self.extra = list(extra)

    def text(self) -> str:
        lines = [self.head]
        if self.edges is not None:
            lines += [f"{u} {v}" for u, v in sorted(self.edges)]
        if self.certificate is not None:
            lines += [str(v) for v in self.certificate]
        lines += self.extra
        return "\n".join(lines) + "\n"

    def json(self) -> str:
        out = {"status": self.status}
        if self.edges is not None:
            out["edges"] = [list(e) for e in sorted(self.edges)]
        if self.certificate is not None:
            out["certificate"] = list(self.certificate)
        if self.lhs is not None:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
        return json.dumps(out) + "\n"


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args, need_constraints=True):
    try:
        G = parse_graph(_read(args.graph))
    except GraphFormatError as exc:
        raise GraphFormatError(f"{args.graph}: {exc}") from None
    if not need_constraints:
        return G, None
    if args.constraints is None:
        raise ValueError("this command needs -c <constraintfile>")
    try:
        spec = parse_constraints(_read(args.constraints), n=G.n)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{args.constraints}: {exc}") from None
    return G, spec


def _certificate(cert: Certificate) -> Report:
    return Report("violation", f"VIOLATION {cert.condition}", certificate=sorted(cert.vertices),
                  lhs=cert.lhs, rhs=cert.rhs)


def _witness(w: DensityWitness) -> Report:
    return Report("witness", f"WITNESS {w.lhs} {w.rhs}", certificate=sorted(w.X), lhs=w.lhs, rhs=w.rhs)


def cmd_check(args):
    G, spec = _load(args)
    out = degree_forest(G, spec)
    if isinstance(out, Certificate):
        return FOUND, _certificate(out)
    return OK, Report("ok", "OK")


def cmd_forest(args):
    G, spec = _load(args)
    out = degree_forest(G, spec)
    if isinstance(out, Certificate):
        return FOUND, _certificate(out)
    return OK, Report("forest", "FOREST", edges=out.edges)


def cmd_tree(args):
    G, spec = _load(args)
    try:
        out = degree_spanning_tree(G, spec)
    except DisconnectedGraph:
        return BAD_INPUT, Report("error", "ERROR disconnected")
    if isinstance(out, Certificate):
        return FOUND, _certificate(out)
    return OK, Report("tree", "TREE", edges=out.edges)


def cmd_wndt(args):
    G, _ = _load(args, need_constraints=False)
    out = defect_forest(G, args.d)
    if isinstance(out, DensityWitness):
        return FOUND, _witness(out)
    return OK, Report("forest", "FOREST", edges=out.edges)


def cmd_planar_tree(args):
    G, _ = _load(args, need_constraints=False)
    try:
        out = planar_girth_tree(G, args.girth)
    except DisconnectedGraph:
        return BAD_INPUT, Report("error", "ERROR disconnected")
    except PreconditionRefuted as exc:
        if isinstance(exc.witness, DensityWitness):
            return FOUND, _witness(exc.witness)
        cycle = list(exc.witness)
        return FOUND, Report("refuted", f"REFUTED girth {len(cycle)}", certificate=cycle)
    return OK, Report("tree", "TREE", edges=out.edges)


def cmd_cograph(args):
    G, spec = _load(args)
    try:
        out = cograph_forest(G, spec)
    except NotCograph as exc:
        return BAD_INPUT, Report("error", "ERROR not-cograph", certificate=list(exc.path))
    if isinstance(out, Certificate):
        return FOUND, _certificate(out)
    return OK, Report("forest", "FOREST", edges=out.edges)


def _parse_answer(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty solution file", 1)
    head = lines[0].split()
    body = []
    for i, ln in enumerate(lines[1:], start=2):
        try:
            body.append(tuple(int(t) for t in ln.split()))
        except ValueError:
            raise GraphFormatError(f"expected integers, got {ln!r}", i) from None
    return head, body


def cmd_verify(args):
    G, spec = _load(args)
    head, body = _parse_answer(_read(args.solution))
    if head[0] in ("TREE", "FOREST"):
        if any(len(t) != 2 for t in body):
            raise GraphFormatError("edge lines need two ids")
        ok = check_solution(G, spec, body, spanning=head[0] == "TREE")
    elif head[:2] == ["VIOLATION", "theorem1"]:
        ok = verify_certificate(G, spec, [t[0] for t in body])
    elif head[:2] == ["VIOLATION", "theorem9"]:
        X = frozenset(t[0] for t in body)
        ok = bool(X) and X <= spec.S and b_value(G, spec, X) <= 0
    else:
        raise GraphFormatError(f"unknown answer kind {' '.join(head)!r}", 1)
    return (OK, Report("valid", "VALID")) if ok else (FOUND, Report("invalid", "INVALID"))


def cmd_brute(args):
    G, spec = _load(args)
    value, X = brute_condition_min(G, spec)
    exists = brute_forest_exists(G, spec)
    shown = "inf" if X == frozenset() else str(value)
    extra = [f"EXISTS {'yes' if exists else 'no'}"]
    return OK, Report("min", f"MIN {shown}", certificate=sorted(X), extra=extra)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degforest", description="Forests and spanning trees with degree lower bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, constraints=True, help=None):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("-g", dest="graph", required=True, help="graph file ('-' for stdin)")
        if constraints:
            sp.add_argument("-c", dest="constraints", required=True, help="constraint file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("check", cmd_check, help="test the neighbourhood condition")
    add("forest", cmd_forest, help="forest meeting the degree bounds")
    add("tree", cmd_tree, help="spanning tree meeting the degree bounds")
    add("wndt", cmd_wndt, constraints=False, help="forest with every defect at most d").add_argument(
        "--d", type=int, required=True)
    add("planar-tree", cmd_planar_tree, constraints=False, help="spanning tree of a planar graph of large girth").add_argument(
        "--girth", type=int, choices=(5, 6), required=True)
    add("cograph", cmd_cograph, help="exact answer when the constrained part is a cograph")
    add("verify", cmd_verify, help="audit a printed answer").add_argument("solution", help="answer file to check")
    add("brute", cmd_brute, help="exhaustive condition minimum and forest search")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        code, report = args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (GraphFormatError, InstanceTooLarge, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    sys.stdout.write(report.json() if args.json else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
