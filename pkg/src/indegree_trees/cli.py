"""Command-line front end.

    indegree-trees count --lambda 3,2,2,1
    indegree-trees count --pi 8/5,6,9/3,7/2,4 --n 9
    indegree-trees phi --tree fig1.tree
    indegree-trees encode --sigma 8/7/6/5,9/3/2,4 --tree fig1.tree
    indegree-trees decode --sigma 8/7/6/5,9/3/2,4 --code 5,9,7,1,5 --n 9
    indegree-trees enumerate --n 5 --pi 4,5/3/2
    indegree-trees omega --pi 4,5/3/2 --n 5 --format grid
    indegree-trees swap --tree fig1.tree --i 5
    indegree-trees verify --n 6 --suite all

Exit codes: 0 success, 1 invalid input or failed verification, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, codec, omega, verify
from .errors import BoundError, OrderError, PreconditionError, RefinementError, ValidationError
from .involution import swap_involution
from .model import IntegerPartition, LabelledTree, parse_code, parse_partition, parse_tree
from .treemap import indegree_partition, phi


def _read_tree(path: str) -> LabelledTree:
    if path == "-":
        return parse_tree(sys.stdin.read())
    with open(path) as fh:
        return parse_tree(fh.read())


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_count(args) -> int:
    if args.lam is not None:
        lam = IntegerPartition.parse(args.lam)
        n = lam.size + 1
        value = census.count_by_lambda(lam, n)
        _emit(args, str(value), {"lambda": list(lam.parts), "n": n, "count": value})
    else:
        if args.pi is None or args.n is None:
            args.usage_error("give --lambda, or --pi together with --n")
        pi = parse_partition(args.pi, args.n)
        value = census.f_closed(pi)
        _emit(args, str(value), {"pi": pi.to_json(), "count": value})
    return 0


def cmd_phi(args) -> int:
    t = _read_tree(args.tree)
    pi = phi(t)
    _emit(args, str(pi), {**pi.to_json(), "type": list(indegree_partition(t).parts)})
    return 0


def cmd_encode(args) -> int:
    t = _read_tree(args.tree)
    sigma = parse_partition(args.sigma, t.n)
    w = codec.encode(sigma, t)
    _emit(args, str(w), w.to_json())
    return 0


def cmd_decode(args) -> int:
    sigma = parse_partition(args.sigma, args.n)
    w = parse_code(args.code, args.n)
    t = codec.decode(sigma, w)
    _emit(args, str(t).rstrip("\n"), t.to_json())
    return 0


def cmd_enumerate(args) -> int:
    n = args.n
    bound = census.EXTENDED_BOUND if args.extended else census.DEFAULT_BOUND
    lam = IntegerPartition.parse(args.lam) if args.lam is not None else None
    pi = parse_partition(args.pi, n) if args.pi is not None else None
    if lam is not None and lam.size != n - 1:
        raise ValidationError(f"lambda {lam} does not sum to n-1 = {n - 1}")
    for t in census.all_trees(n, bound):
        if lam is not None and indegree_partition(t) != lam:
            continue
        if pi is not None and phi(t) != pi:
            continue
        if args.json:
            print(json.dumps(t.to_json()))
        else:
            print(str(t))
    return 0


def cmd_omega(args) -> int:
    pi = parse_partition(args.pi, args.n)
    words = omega.omega_set(pi)
    fmt = args.format or ("json" if args.json or len(pi) != 3 else "grid")
    if fmt == "grid":
        sys.stdout.write(omega.render_grid(pi, words))
    else:
        print(omega.render_json(pi, words))
    return 0


def cmd_swap(args) -> int:
    t = _read_tree(args.tree)
    t2 = swap_involution(t, args.i)
    _emit(args, str(t2).rstrip("\n"), t2.to_json())
    return 0


def cmd_verify(args) -> int:
    checks = verify.run(args.suite, args.n)
    ok = all(c.ok for c in checks)
    if args.json:
        print(json.dumps({"ok": ok, "checks": [c.to_json() for c in checks]}))
    else:
        for c in checks:
            print(c.line())
        print(f"{sum(c.ok for c in checks)}/{len(checks)} checks passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="indegree-trees", description=__doc__.split("\n")[0] or None)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", parents=[common], help="a_lambda or f(pi)")
    s.add_argument("--lambda", dest="lam")
    s.add_argument("--pi")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_count, usage_error=s.error)

    s = sub.add_parser("phi", parents=[common], help="partition of a tree")
    s.add_argument("--tree", required=True)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("encode", parents=[common], help="generalized Pruefer code")
    s.add_argument("--sigma", required=True)
    s.add_argument("--tree", required=True)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", parents=[common], help="tree from a code word")
    s.add_argument("--sigma", required=True)
    s.add_argument("--code", required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("enumerate", parents=[common], help="list trees on [n]")
    s.add_argument("--n", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--lambda", dest="lam")
    g.add_argument("--pi")
    s.add_argument("--extended", action="store_true", help=f"allow n = {census.EXTENDED_BOUND}")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("omega", parents=[common], help="code set of a partition")
    s.add_argument("--pi", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["grid", "json"])
    s.set_defaults(func=cmd_omega)

    s = sub.add_parser("swap", parents=[common], help="apply the label-swap involution")
    s.add_argument("--tree", required=True)
    s.add_argument("--i", type=int, required=True)
    s.set_defaults(func=cmd_swap)

    s = sub.add_parser("verify", parents=[common], help="run exhaustive checks")
    s.add_argument("--n", type=int, default=6)
    s.add_argument("--suite", default="all", choices=["all", *verify.SUITES])
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, RefinementError, PreconditionError, OrderError, BoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
