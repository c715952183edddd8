"""Command line front end.

Exit codes: 0 success, 1 invalid input, 2 non-convergence or a residual over
the ``--strict`` bound, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import blades as _b
from .algebra import AlgebraContext
from .decomp import k_subspace, polar_from_svd_ga, svd_ga
from .documents import DocumentError, parse_multivector, serialize_multivector
from .errors import InternalInvariantViolation, NoConvergence, UnsupportedDimension
from .groups import DEFAULT_MEMBERSHIP_TOL, iso_class, membership_residual
from .repmat import build_rep
from .ring_svd import DEFAULT_TOL

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_INTERNAL = 0, 1, 2, 3

# residuals that are quadratic in M get a squared scale in --strict checks
_QUADRATIC = {"p_squared", "s_squared", "b_witness", "c_witness"}
STRICT_FACTOR = 10.0


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read_doc(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Fail(EXIT_INPUT, f"cannot read input: {exc}")


def _write(obj, path):
    text = json.dumps(obj, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _strict_check(residuals, tol, mnorm):
    bad = {}
    for key, value in residuals.items():
        scale = max(1.0, mnorm) ** (2 if key in _QUADRATIC else 1)
        if value > STRICT_FACTOR * tol * scale:
            bad[key] = value
    if bad:
        raise _Fail(EXIT_NUMERIC, f"residuals over the strict bound: {bad}")


def _context_args(args) -> AlgebraContext:
    p = args.p if args.p is not None else args.pos_p
    q = args.q if args.q is not None else args.pos_q
    if p is None or q is None:
        raise _Fail(EXIT_INPUT, "signature required: --p INT --q INT")
    try:
        return AlgebraContext.of(p, q, args.complexified)
    except (ValueError, UnsupportedDimension) as exc:
        raise _Fail(EXIT_INPUT, str(exc))


def _entries(mat):
    data = mat.data
    if mat.ring == "R":
        return data.tolist()
    if mat.ring == "C":
        return np.stack([data.real, data.imag], axis=-1).tolist()
    return data.tolist()


def cmd_svd(args):
    m = parse_multivector(_read_doc(args.input))
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    res = svd_ga(m, tol=tol)
    residuals = res.residuals()
    out = {
        "U": serialize_multivector(res.U),
        "Sigma": serialize_multivector(res.Sigma),
        "V": serialize_multivector(res.V),
        "singular_values": res.singular_values.tolist(),
        "k_subspace": k_subspace(m.ctx).labels,
        "tol": tol,
        "residuals": residuals,
    }
    _write(out, args.output)
    if args.strict:
        _strict_check(residuals, tol, m.norm())


def cmd_polar(args):
    m = parse_multivector(_read_doc(args.input))
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    svd_res = svd_ga(m, tol=tol)
    res = polar_from_svd_ga(svd_res)
    residuals = res.residuals()
    out = {name: serialize_multivector(getattr(res, name)) for name in ("W", "P", "S", "B", "C")}
    out.update(singular_values=svd_res.singular_values.tolist(), tol=tol, residuals=residuals)
    _write(out, args.output)
    if args.strict:
        _strict_check(residuals, tol, m.norm())


def cmd_repr(args):
    ctx = _context_args(args)
    rep = build_rep(ctx)
    if args.blade is None:
        wanted = [0] + [1 << a for a in range(ctx.n)]
    else:
        try:
            idx = [int(a) for a in args.blade.split(",") if a.strip()]
        except ValueError:
            raise _Fail(EXIT_INPUT, f"bad --blade {args.blade!r}")
        if any(a < 1 or a > ctx.n for a in idx) or any(b <= a for a, b in zip(idx, idx[1:])):
            raise _Fail(EXIT_INPUT, f"--blade needs ascending indices in 1..{ctx.n}")
        wanted = [_b.from_indices(idx)]
    images = []
    for blade in wanted:
        img = rep.blade_image(blade)
        images.append({"blade": list(_b.indices(blade)), "label": _b.blade_name(blade),
                       "entries": _entries(img)})
    _write({"p": ctx.p, "q": ctx.q, "complexified": ctx.complexified, "ring": ctx.ring,
            "size": rep.size, "blocks": ctx.blocks, "images": images}, args.output)


def cmd_ksubspace(args):
    ctx = _context_args(args)
    k = k_subspace(ctx)
    _write({"p": ctx.p, "q": ctx.q, "complexified": ctx.complexified, "dim": k.dim,
            "members": k.labels,
            "blades": [list(_b.indices(el.blade)) for el in k.members],
            "imaginary": [el.imaginary for el in k.members]}, args.output)


def cmd_groupinfo(args):
    ctx = _context_args(args)
    info = iso_class(ctx)
    _write({"p": ctx.p, "q": ctx.q, "complexified": ctx.complexified, "class": info.family,
            "k": info.k, "factors": info.factors, "name": info.name, "dim": info.dim}, args.output)


def cmd_check(args):
    m = parse_multivector(_read_doc(args.input))
    tol = args.tol if args.tol is not None else DEFAULT_MEMBERSHIP_TOL
    residual = membership_residual(m)
    _write({"norm": m.norm(), "membership_residual": residual, "member": residual <= tol,
            "tol": tol}, args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gasvd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def io_opts(p):
        p.add_argument("-i", "--input", default="-", help="input document (default: stdin)")
        p.add_argument("-o", "--output", default="-", help="output path (default: stdout)")
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--strict", action="store_true",
                       help="exit 2 when a reported residual exceeds the tolerance bound")

    def sig_opts(p):
        p.add_argument("pos_p", nargs="?", type=int, metavar="P")
        p.add_argument("pos_q", nargs="?", type=int, metavar="Q")
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--complexified", action="store_true")
        p.add_argument("-o", "--output", default="-")

    for name, func, helptext in [
        ("svd", cmd_svd, "singular value decomposition M = U Sigma V^dagger"),
        ("polar", cmd_polar, "polar decomposition M = W P = S W"),
        ("check", cmd_check, "norm and unit-group membership of a multivector"),
    ]:
        p = sub.add_parser(name, help=helptext)
        io_opts(p)
        p.set_defaults(func=func)

    p = sub.add_parser("repr", help="matrix images of basis blades")
    sig_opts(p)
    p.add_argument("--blade", default=None, help="comma-separated generator indices")
    p.set_defaults(func=cmd_repr)
    for name, func in [("ksubspace", cmd_ksubspace), ("groupinfo", cmd_groupinfo)]:
        p = sub.add_parser(name)
        sig_opts(p)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors as 2, which is reserved for numerical failures
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.func(args)
    except _Fail as exc:
        print(f"gasvd: {exc}", file=sys.stderr)
        return exc.code
    except DocumentError as exc:
        print(f"gasvd: invalid document: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NoConvergence as exc:
        print(f"gasvd: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except InternalInvariantViolation as exc:
        print(f"gasvd: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
