"""Command-line interface: every analysis as a reproducible report.

Exit codes: 0 success, 2 domain rejection (bad parameters or an operation
outside its defined range), 1 internal failure.  All rational inputs are
"p/q" strings; no floating point is accepted anywhere.  Reports embed the
full configuration and serialize deterministically.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .b2 import Weight, classify_weight, strongly_linked, default_depth
from .cyclo import QParams, DegenerateParameterError
from . import uqsl2
from .uqso5 import irreps, tensor, verma
from .scalars import CycloDomain, SymbolicDomain


class DomainRejection(Exception):
    pass


def _frac(s):
    try:
        return Fraction(s)
    except ValueError:
        raise DomainRejection(f"not a rational number: {s!r}")


def _parse_weight(args):
    if args.weight is not None:
        e0, s = ((_frac(x) for x in args.weight.split(",")))
        return Weight(e0, s)
    if args.weight_alpha is not None:
        a, b = (_frac(x) for x in args.weight_alpha.split(","))
        return Weight.from_alpha(a, b)
    raise DomainRejection("a weight is required (--weight or --weight-alpha)")


def _params(args):
    try:
        return QParams(args.m, args.n)
    except ValueError as e:
        raise DomainRejection(str(e))


def _emit(report, args):
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2, default=str))
    else:
        _emit_text(report)


def _emit_text(report, indent=0):
    pad = "  " * indent
    for key in sorted(report):
        val = report[key]
        if isinstance(val, dict):
            print(f"{pad}{key}:")
            _emit_text(val, indent + 1)
        elif isinstance(val, list):
            print(f"{pad}{key}: " + json.dumps(val, sort_keys=True, default=str))
        else:
            print(f"{pad}{key}: {val}")


def _config(args, **extra):
    cfg = {"m": args.m, "n": args.n, "format": args.format, "seed": args.seed}
    cfg.update(extra)
    return cfg


# ---------------------------------------------------------------------------
# sl2 commands

def cmd_sl2(args):
    params = _params(args)
    cfg = _config(args, command=f"sl2 {args.sl2_cmd}")
    if args.sl2_cmd == "build":
        rep = uqsl2.build_irrep2(args.d, args.z, params)
        return {
            "config": dict(cfg, d=args.d, z=args.z),
            "dimension": rep.dim,
            "highest_weight": str(rep.j),
            "weights": [str(w) for w in rep.weights()],
            "matrices": {
                "H": [[c.to_json() for c in row] for row in rep.matrix_h()],
                "X+": [[c.to_json() for c in row] for row in rep.matrix_xp()],
                "X-": [[c.to_json() for c in row] for row in rep.matrix_xm()],
            },
        }
    if args.sl2_cmd == "unitarity":
        res = uqsl2.unitarity_sl2(args.d, args.z, params, args.star)
        return {
            "config": dict(cfg, d=args.d, z=args.z, star=args.star),
            "verdict": res["verdict"],
            "pivot_signs": res["pivot_signs"],
            "signature": list(res["signature"]),
        }
    a_d, a_z = (int(x) for x in args.a.split(","))
    b_d, b_z = (int(x) for x in args.b.split(","))
    ra = uqsl2.build_irrep2(a_d, a_z, params)
    rb = uqsl2.build_irrep2(b_d, b_z, params)
    if args.sl2_cmd == "fuse":
        dec = uqsl2.tensor_decompose2(ra, rb)
        return {
            "config": dict(cfg, a=args.a, b=args.b),
            "summands": [{"type": "V", "d": d, "z": z} for d, z in dec["v_parts"]]
            + [blk.label() for blk in dec["i_parts"]],
            "dimension_check": ra.d * rb.d,
        }
    if args.sl2_cmd == "truncfuse":
        try:
            res = uqsl2.truncated_tensor2(ra, rb)
        except ValueError as e:
            raise DomainRejection(str(e))
        return {
            "config": dict(cfg, a=args.a, b=args.b),
            "kept": [{"type": "V", "d": d, "z": z} for d, z in res["kept"]],
            "convention": res["convention"],
        }
    if args.sl2_cmd == "rmatrix":
        if ra.d > params.M or rb.d > params.M:
            raise DomainRejection("R-matrix needs dimensions <= M")
        uqsl2.check_rmatrix_properties(ra, rb)
        R, _ = uqsl2.rmatrix2(ra, rb)
        return {
            "config": dict(cfg, a=args.a, b=args.b),
            "identities": {"intertwiner": True, "star_inverse": True},
            "matrix": [[c.to_json() for c in row] for row in R],
        }
    raise DomainRejection(f"unknown sl2 subcommand {args.sl2_cmd}")


# ---------------------------------------------------------------------------
# so5 commands

def cmd_so5(args):
    params = _params(args)
    cfg = _config(args, command=f"so5 {args.so5_cmd}")
    if args.so5_cmd == "verma":
        lam = _parse_weight(args)
        eta = _parse_eta(args)
        dom = CycloDomain(params)
        vm = verma.VermaModule(dom, lam)
        basis = vm.basis(eta)
        G = vm.gram(eta)
        return {
            "config": dict(cfg, weight=lam.to_json(), eta=list(map(int, eta.alpha))),
            "dimension": len(basis),
            "basis": [list(k) for k in basis],
            "gram": [[c.to_json() for c in row] for row in G],
        }
    if args.so5_cmd == "detcheck":
        lam = _parse_weight(args)
        eta = _parse_eta(args)
        dom = SymbolicDomain() if args.generic else CycloDomain(params)
        res = verma.verify_det(lam, eta, dom, None if args.generic else params)
        out = {
            "config": dict(cfg, weight=lam.to_json(),
                           eta=list(map(int, eta.alpha)), generic=args.generic),
            "match": res["match"],
            "calibration": list(res["calibration"]),
        }
        if "vanishing_order" in res:
            out["vanishing_order"] = list(res["vanishing_order"])
        return out
    if args.so5_cmd == "singular":
        lam = _parse_weight(args)
        res = irreps.singular_vectors(lam, params, args.depth or 6)
        return {
            "config": dict(cfg, weight=lam.to_json(), depth=args.depth or 6),
            "singular_vectors": [
                {"eta": list(map(int, s["eta"].alpha)),
                 "weight": s["weight"].to_json(),
                 "multiplicity": len(s["kernel"])} for s in res],
        }
    if args.so5_cmd == "character":
        lam = _parse_weight(args)
        rep = irreps.irrep_character(lam, params, args.depth)
        return {"config": dict(cfg, weight=lam.to_json()), **rep.to_json()}
    if args.so5_cmd == "unitarity":
        lam = _parse_weight(args)
        rep = irreps.unitarity_so5(lam, params, args.depth)
        return {"config": dict(cfg, weight=lam.to_json()), **rep.to_json()}
    if args.so5_cmd == "physical":
        rep = irreps.physical_rep((_frac(args.E0), _frac(args.s)), params,
                                  args.depth)
        return {"config": dict(cfg, E0=args.E0, s=args.s), **rep.to_json()}
    if args.so5_cmd == "truncfuse":
        mu = (_frac(args.E0), _frac(args.s))
        mu2 = (_frac(args.E0b), _frac(args.sb))
        depth = args.depth or int(Fraction(params.m, 2 * params.n))
        try:
            res = tensor.truncated_tensor_so23(mu, mu2, params, depth)
        except ValueError as e:
            raise DomainRejection(str(e))
        return {
            "config": dict(cfg, mu=[args.E0, args.s], mu2=[args.E0b, args.sb],
                           depth=depth),
            "kept": [{"E0": str(k[0]), "s": str(k[1]), "multiplicity": v}
                     for k, v in sorted(res["kept"].items())],
            "all_lowest_weights": [
                {"E0": str(k[0]), "s": str(k[1]), "multiplicity": v}
                for k, v in sorted(res["all"].items())],
        }
    if args.so5_cmd == "linkage":
        lam = _parse_weight(args)
        depth = args.depth or default_depth(params)
        linked = strongly_linked(lam, params, depth)
        items = sorted(((str(w.e0), str(w.s)) for w in linked))
        return {
            "config": dict(cfg, weight=lam.to_json(), depth=depth),
            "count": len(items),
            "weights": [{"E0": a, "s": b} for a, b in items],
        }
    raise DomainRejection(f"unknown so5 subcommand {args.so5_cmd}")


def _parse_eta(args):
    if args.eta is None:
        raise DomainRejection("--eta a,b is required")
    a, b = (int(x) for x in args.eta.split(","))
    if a < 0 or b < 0:
        raise DomainRejection("eta must lie in the positive root cone")
    return Weight.from_alpha(a, b)


# ---------------------------------------------------------------------------
# atlas

MAX_GRID = 80


def cmd_atlas(args):
    params = _params(args)
    cfg = _config(args, command="atlas")
    e_lo, e_hi = (_frac(x) for x in args.E0_range.split(","))
    s_values = [_frac(x) for x in args.s_values.split(",")]
    e_step = _frac(args.E0_step)
    points = []
    e = e_lo
    while e <= e_hi:
        for s in s_values:
            points.append((e, s))
        e += e_step
    if len(points) > MAX_GRID:
        raise DomainRejection(
            f"grid of {len(points)} points exceeds the limit {MAX_GRID}")
    rows = []
    for e0, s in points:
        entry = {"E0": str(e0), "s": str(s)}
        entry["physical_class"] = tensor.is_physical_label(e0, s, params)
        if args.verify:
            mu = Weight(e0, -s)
            cls = irreps._classify_physical(e0, s, params)
            if cls["flag"] == "unsupported":
                entry["verdict"] = None
                entry["note"] = "non-integral outside singleton family"
            else:
                rep = irreps.physical_rep((e0, s), params, args.depth)
                entry["verdict"] = rep.unitary
                entry["dim"] = rep.dim
        rows.append(entry)
    return {"config": dict(cfg, E0_range=args.E0_range, s_values=args.s_values,
                           verify=args.verify),
            "grid": rows}


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="qads",
        description="exact workbench for quantum AdS representations at roots of unity")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    sl2 = sub.add_parser("sl2", help="rank-1 representations")
    sl2.add_argument("sl2_cmd",
                     choices=("build", "unitarity", "fuse", "truncfuse", "rmatrix"))
    sl2.add_argument("--m", type=int, required=True)
    sl2.add_argument("--n", type=int, default=1)
    sl2.add_argument("--d", type=int)
    sl2.add_argument("--z", type=int, default=1)
    sl2.add_argument("--star", choices=(uqsl2.SO21, uqsl2.SU2), default=uqsl2.SO21)
    sl2.add_argument("--a", help="first factor as d,z")
    sl2.add_argument("--b", help="second factor as d,z")
    sl2.set_defaults(func=cmd_sl2)

    so5 = sub.add_parser("so5", help="rank-2 representations")
    so5.add_argument("so5_cmd",
                     choices=("verma", "detcheck", "singular", "character",
                              "unitarity", "physical", "truncfuse", "linkage"))
    so5.add_argument("--m", type=int, required=True)
    so5.add_argument("--n", type=int, default=1)
    so5.add_argument("--weight", help="highest weight as E0,s (rationals)")
    so5.add_argument("--weight-alpha", help="highest weight in simple-root coords a,b")
    so5.add_argument("--eta", help="weight-space label a,b in simple-root coords")
    so5.add_argument("--E0", help="lowest-weight energy (rational)")
    so5.add_argument("--s", help="spin (rational)")
    so5.add_argument("--E0b", help="second factor energy")
    so5.add_argument("--sb", help="second factor spin")
    so5.add_argument("--depth", type=int)
    so5.add_argument("--generic", action="store_true",
                     help="work at generic q instead of the root of unity")
    so5.set_defaults(func=cmd_so5)

    atl = sub.add_parser("atlas", help="unitarity sweep over a weight grid")
    atl.add_argument("--m", type=int, required=True)
    atl.add_argument("--n", type=int, default=1)
    atl.add_argument("--E0-range", required=True, help="lo,hi rationals")
    atl.add_argument("--E0-step", default="1")
    atl.add_argument("--s-values", required=True, help="comma list of rationals")
    atl.add_argument("--verify", action="store_true",
                     help="run the full signature verdicts, not just the class test")
    atl.add_argument("--depth", type=int)
    atl.set_defaults(func=cmd_atlas)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except DomainRejection as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DegenerateParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # internal failure
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    _emit(report, args)
    return 0


if __name__ == "__main__":
    sys.exit(main())
