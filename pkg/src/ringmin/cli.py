"""Command line entry point.

Subcommands:

    solve    extend Cauchy data from a JSON file to a minimal surface
    example  emit a named closed-form surface (optionally as an OBJ mesh)
    bounds   evaluate or sweep the sharp modulus/distortion bounds
    verify   run a numerical verification suite
    check    re-read a solve output and reproduce its certificate

Exit codes: 0 success/pass, 1 verification failure, 2 invalid input,
3 geometric obstruction (period / compatibility / branch).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import bjorling, extremals, io, surface as surface_mod, verify
from .errors import DataError, ObstructionError
from .series import Annulus

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_OBSTRUCTION = 3


@dataclass
class Config:
    """Shared numerical knobs; every invariant is checked on construction."""

    truncation: int = 32
    quadrature: int = 0  # 0 -> max(256, 4 * truncation + 4)
    tol: float = 1e-10
    seed: int = 42
    mesh_grid: tuple[int, int] = (33, 128)

    def __post_init__(self):
        if self.truncation < 1:
            raise DataError("truncation must be >= 1")
        if self.quadrature == 0:
            self.quadrature = max(256, 4 * self.truncation + 4)
        if self.quadrature < 2 * self.truncation + 2:
            raise DataError("quadrature grid must satisfy M >= 2N + 2")
        if not self.tol > 0:
            raise DataError("tol must be positive")


def _cmd_solve(args) -> int:
    cfg = Config(tol=args.tol)
    data = io.load_bjorling_data(args.data)
    opts = bjorling.SolveOptions(
        truncation=cfg.truncation, samples=cfg.quadrature, tol=cfg.tol,
        sign=args.sign,
    )
    surf, report = bjorling.solve(data, opts)
    io.dump_json(io.surface_to_json(surf, report), args.out)
    if args.mesh:
        mesh = surface_mod.build_mesh(surf, *cfg.mesh_grid)
        surface_mod.write_obj(mesh, args.mesh)
    print(
        f"solved: annulus ({report.annulus[0]:.6f}, {report.annulus[1]:.6f}), "
        f"residual_max {report.residual_max:.3e}, "
        f"w_crosscheck {report.w_crosscheck:.3e}, "
        f"decay_rate {report.decay_rate:.3f}"
    )
    return EXIT_OK


def _cmd_example(args) -> int:
    kwargs = {}
    if args.name in ("catenoidal_slab", "extremal_th34"):
        kwargs["K"] = args.K
    if args.name == "nitsche_critical":
        kwargs["r"] = args.r
    if args.name == "upsilon":
        h = extremals.principal("upsilon", args.upsilon)
        w = surface_mod.lift_w(h, basepoint=1.0 + 0.0j)
        surf = surface_mod.MinimalSurface(h, w, Annulus(1.0, args.R))
    else:
        surf = extremals.fixture(args.name, **kwargs)
        if args.R is not None and args.name != "upsilon":
            surf = surface_mod.MinimalSurface(
                surf.h, surf.w, Annulus(surf.annulus.r, args.R),
                w_kind=surf.w_kind, w_sign=surf.w_sign,
                recorded_defect=surf.recorded_defect,
            )
    if args.mesh:
        mesh = surface_mod.build_mesh(surf, *Config().mesh_grid)
        surface_mod.write_obj(mesh, args.mesh)
    if surf.w_kind == "harmonic":
        resid, scale = surface_mod.conformality_report(surf)
        print(
            f"{args.name}: annulus ({surf.annulus.r:.6f}, {surf.annulus.R:.6f}), "
            f"modulus {surf.modulus:.6f}, residual {resid:.3e} (scale {scale:.3e})"
        )
    else:
        print(
            f"{args.name}: annulus ({surf.annulus.r:.6f}, {surf.annulus.R:.6f}), "
            f"modulus {surf.modulus:.6f}, "
            f"height period {surf.recorded_defect:.6f} (multivalued height)"
        )
    return EXIT_OK


def _parse_sweep(spec: str) -> dict:
    """Parse 'name=start:stop:count,name=...' into linspace grids."""
    grids = {}
    for part in spec.split(","):
        name, _, rng = part.partition("=")
        pieces = rng.split(":")
        if len(pieces) != 3:
            raise DataError(f"bad sweep range {part!r}, want name=start:stop:count")
        start, stop, count = float(pieces[0]), float(pieces[1]), int(pieces[2])
        grids[name.strip()] = np.linspace(start, stop, count)
    return grids


def _cmd_bounds(args) -> int:
    if args.kind not in extremals.BOUND_KINDS:
        raise DataError(f"unknown bound kind {args.kind!r}")
    params = {"t": args.ratio if args.ratio is not None else args.R,
              "K": args.K, "sigma": args.sigma, "modulus": args.modulus}
    if args.sweep:
        grids = _parse_sweep(args.sweep)
        names = sorted(grids)
        meshes = np.meshgrid(*[grids[n] for n in names], indexing="ij")
        rows = [",".join(names + ["value", "conjectured"])]
        conjectured = False
        for idx in np.ndindex(meshes[0].shape):
            point = dict(params)
            for name, mesh in zip(names, meshes):
                key = {"ratio": "t", "R": "t"}.get(name, name)
                point[key] = float(mesh[idx])
            res = extremals.bound(extremals.BoundRequest(kind=args.kind, **point))
            conjectured = conjectured or res.conjectured
            rows.append(
                ",".join([repr(float(mesh[idx])) for mesh in meshes]
                         + [repr(res.value), "1" if res.conjectured else "0"])
            )
        io.atomic_write_text(args.out, "\n".join(rows) + "\n")
        if conjectured:
            print("CONJECTURED: this bound is a conjecture, not a theorem")
        print(f"wrote {len(rows) - 1} rows to {args.out}")
        return EXIT_OK
    res = extremals.bound(extremals.BoundRequest(kind=args.kind, **params))
    if res.conjectured:
        print("CONJECTURED: this bound is a conjecture, not a theorem")
    if res.interval is not None and args.kind.startswith("grotzsch"):
        print(f"{res.value!r}  (interval {res.interval[0]!r} .. {res.interval[1]!r})")
    else:
        print(repr(res.value))
    return EXIT_OK


def _cmd_verify(args) -> int:
    known = ("boundary", "prop51", "prop52", "qforms", "jacobian-energy", "all")
    if args.suite not in known:
        raise DataError(f"unknown suite {args.suite!r}; choose from {known}")
    reports = verify.run_suite(args.suite, samples=args.samples, seed=args.seed)
    if args.report:
        verify.write_report_csv(reports, args.report)
    ok = True
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        detail = ""
        if not rep.passed:
            detail = (
                f"  argmin: lambda={rep.arg_lambda} rho={rep.arg_rho} n={rep.arg_n}"
            )
        print(f"{rep.suite}: {status} (min margin {rep.min_margin:.3e}){detail}")
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _cmd_check(args) -> int:
    doc = io.load_json(args.surface)
    surf, stored = io.surface_from_json(doc)
    resid, scale = surface_mod.conformality_report(surf)
    rel = resid / scale if scale else 0.0
    print(f"recomputed residual {rel!r} (max {resid!r} over scale {scale!r})")
    if stored is not None:
        opts = bjorling.SolveOptions()
        try:
            ann, residual_max = bjorling._validity_annulus(
                surf.h, surf.w, opts, max(256, 4 * surf.h.degree + 4)
            )
        except DataError as exc:
            print(f"stored report cannot be reproduced: {exc}")
            return EXIT_VERIFY_FAIL
        same = (
            ann.r == stored.annulus[0]
            and ann.R == stored.annulus[1]
            and residual_max == stored.residual_max
        )
        print(
            f"stored residual_max {stored.residual_max!r}, "
            f"recomputed {residual_max!r}: {'identical' if same else 'MISMATCH'}"
        )
        return EXIT_OK if same else EXIT_VERIFY_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringmin",
        description="Minimal surfaces over ring domains: Björling solver, "
        "sharp bounds, inequality verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="extend Cauchy data to a minimal surface")
    p.add_argument("--data", required=True, help="Cauchy data JSON file")
    p.add_argument("--out", required=True, help="surface JSON output")
    p.add_argument("--mesh", help="optional OBJ mesh output")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--sign", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("example", help="emit a named closed-form surface")
    p.add_argument(
        "--name",
        required=True,
        help="one of: " + ", ".join(extremals.FIXTURE_NAMES + ("upsilon",)),
    )
    p.add_argument("--K", type=float, default=2.0)
    p.add_argument("--upsilon", type=float, default=1.0)
    p.add_argument("--r", type=float, default=0.5)
    p.add_argument("--R", type=float, default=None)
    p.add_argument("--mesh", help="optional OBJ mesh output")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("bounds", help="evaluate or sweep a sharp bound")
    p.add_argument("--kind", required=True)
    p.add_argument("--K", type=float)
    p.add_argument("--ratio", type=float, help="radii ratio t = R/r")
    p.add_argument("--R", type=float, help="outer radius (alias for --ratio)")
    p.add_argument("--sigma", type=float)
    p.add_argument("--modulus", type=float)
    p.add_argument("--sweep", help="grid spec name=start:stop:count[,...]")
    p.add_argument("--out", help="CSV output for sweeps")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--report", help="CSV report output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check", help="reproduce the certificate of a solve output")
    p.add_argument("--surface", required=True, help="surface JSON from solve")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ObstructionError as exc:
        print(f"obstruction: {exc}", file=sys.stderr)
        return EXIT_OBSTRUCTION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
