"""Command line front end.

Exit codes: 0 on success, 1 when a verify suite fails a mathematical check,
2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .analytic import hausdorff_analytic, real_interval, square_params
from .dynamics import EscapeParams, escape_bound
from .geometry import (
    Box3D,
    Window2D,
    octahedron_mesh,
    raster_hyperbrot,
    raster_multibrot,
    voxelize_perplexbrot,
    write_csv,
    write_obj,
    write_pgm,
)
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser"]

_DEFAULT_RES_2D = 1024
_DEFAULT_RES_3D = 128
_HYPERBROT_WINDOW = (-2.0, 1.0, -1.5, 1.5)
_PERPLEXBROT_BOX = (-2.0, 2.0, -2.0, 2.0, -2.0, 2.0)


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"{what} expects {count} comma-separated numbers, got {text!r}")
    try:
        return tuple(float(s) for s in parts)
    except ValueError:
        raise ValueError(f"{what} must contain numbers, got {text!r}") from None


def _parse_res(text: str, dims: int) -> tuple[int, ...]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) not in (1, dims):
        raise ValueError(f"--res expects 1 or {dims} comma-separated integers, got {text!r}")
    try:
        values = tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError(f"--res must contain integers, got {text!r}") from None
    return values * dims if len(values) == 1 else values


def _write_rows(path: str | None, rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        text = json.dumps(payload, indent=2)
        if path is None:
            print(text)
        else:
            with open(path, "w", encoding="ascii") as fh:
                fh.write(text + "\n")
    else:
        if path is None:
            writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        else:
            write_csv(path, rows)
    if path is not None:
        print(f"wrote {path}")


def _summary_2d(kind: str, grid, args) -> dict:
    w = grid.window
    return {
        "kind": kind, "p": args.p,
        "x_lo": w.x_lo, "x_hi": w.x_hi, "y_lo": w.y_lo, "y_hi": w.y_hi,
        "nx": w.nx, "ny": w.ny, "max_iter": args.max_iter,
        "member_cells": grid.member_count,
        "member_fraction": grid.member_fraction,
    }


def _cmd_render(args) -> int:
    params = EscapeParams(p=args.p, max_iter=args.max_iter)
    if args.kind == "perplexbrot":
        return _render_perplexbrot(args, params)

    if args.box is not None:
        raise ValueError("--box applies to perplexbrot; use --window for 2-D renders")
    fmt = args.format or "pgm"
    if fmt == "obj":
        raise ValueError("obj output holds a 3-D mesh; render perplexbrot for it")
    nx, ny = _parse_res(args.res, 2) if args.res else (_DEFAULT_RES_2D,) * 2
    if args.window is not None:
        x_lo, x_hi, y_lo, y_hi = _parse_floats(args.window, 4, "--window")
    elif args.kind == "multibrot":
        bound = escape_bound(args.p)
        x_lo, x_hi, y_lo, y_hi = -bound, bound, -bound, bound
    else:
        x_lo, x_hi, y_lo, y_hi = _HYPERBROT_WINDOW
    window = Window2D(x_lo, x_hi, y_lo, y_hi, nx, ny)
    if args.kind == "multibrot":
        grid = raster_multibrot(window, params, threads=args.threads)
    else:
        grid = raster_hyperbrot(window, params)

    out = args.out or f"{args.kind}_p{args.p}.{fmt}"
    if fmt == "pgm":
        write_pgm(grid, out)
        print(f"wrote {out} ({grid.member_count} member cells of {nx * ny})")
    else:
        _write_rows(out if args.out else None, [_summary_2d(args.kind, grid, args)], fmt)
    return 0


def _render_perplexbrot(args, params: EscapeParams) -> int:
    if args.window is not None:
        raise ValueError("--window applies to 2-D renders; use --box for perplexbrot")
    fmt = args.format
    if fmt == "pgm":
        raise ValueError("pgm output is 2-D; perplexbrot writes obj and csv")
    want_mesh = fmt in (None, "obj")
    if want_mesh and args.p % 2 != 0:
        raise ValueError("the octahedron mesh is defined for even degrees only")

    bounds = (_parse_floats(args.box, 6, "--box") if args.box is not None
              else _PERPLEXBROT_BOX)
    res = _parse_res(args.res, 3) if args.res else (_DEFAULT_RES_3D,) * 3
    box = Box3D(*bounds, *res)
    grid = voxelize_perplexbrot(box, params)

    row = {
        "kind": "perplexbrot", "p": args.p,
        "x_lo": box.x_lo, "x_hi": box.x_hi, "y_lo": box.y_lo, "y_hi": box.y_hi,
        "z_lo": box.z_lo, "z_hi": box.z_hi,
        "nx": box.nx, "ny": box.ny, "nz": box.nz, "max_iter": args.max_iter,
        "member_voxels": grid.member_count,
        "voxel_volume": grid.voxel_volume,
        "estimated_volume": grid.member_count * grid.voxel_volume,
    }
    if args.p % 2 == 0:
        sq = square_params(args.p)
        row["analytic_volume"] = sq.l ** 3 / 6.0

    base, ext = os.path.splitext(args.out) if args.out else (f"perplexbrot_p{args.p}", "")
    if fmt is None:
        obj_path, table_path = base + ".obj", base + ".csv"
    elif fmt == "obj":
        obj_path, table_path = (args.out or base + ".obj"), None
    else:
        obj_path, table_path = None, (args.out or base + "." + fmt)

    if obj_path is not None:
        sq = square_params(args.p)
        write_obj(octahedron_mesh(sq.t, sq.l), obj_path)
        print(f"wrote {obj_path} (octahedron mesh, 6 vertices, 8 faces)")
    if table_path is not None:
        _write_rows(table_path, [row], "json" if fmt == "json" else "csv")
    print(f"{grid.member_count} member voxels of {box.nx * box.ny * box.nz}")
    return 0


def _cmd_info(args) -> int:
    interval = real_interval(args.p)
    info: dict = {"p": args.p, "lo": interval.lo, "hi": interval.hi}
    if args.p % 2 == 0:
        sq = square_params(args.p)
        info["t"] = sq.t
        info["l"] = sq.l
        info["edge"] = sq.side
        info["hausdorff"] = hausdorff_analytic(args.p)
    _write_rows(args.out, [info], args.format)
    return 0


def _cmd_verify(args) -> int:
    name = args.suite
    overrides: dict = {}
    if args.p is not None:
        if name in ("interval", "square"):
            overrides["ps"] = (args.p,)
        elif name == "octahedron":
            overrides["p"] = args.p
        else:
            raise ValueError(f"--p does not apply to the {name} suite")
    if args.res is not None:
        if name in ("square", "octahedron"):
            overrides["res"] = args.res
        elif name == "hausdorff":
            overrides["per_side"] = args.res
        else:
            raise ValueError(f"--res does not apply to the {name} suite")
    if args.max_iter is not None:
        if name in ("interval", "square", "octahedron"):
            overrides["max_iter"] = args.max_iter
        else:
            raise ValueError(f"--max-iter does not apply to the {name} suite")
    if args.samples is not None:
        if name == "algebra":
            overrides["samples"] = args.samples
        else:
            raise ValueError("--samples applies to the algebra suite only")

    report = run_suite(name, **overrides)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        bound = "" if check.threshold is None else f" (<= {check.threshold:g})"
        print(f"[{status}] {name}:{check.name} value={check.value:.6g}{bound}  {check.detail}")
    good = sum(1 for c in report.checks if c.passed)
    print(f"suite {name}: {'PASS' if report.passed else 'FAIL'} "
          f"({good}/{len(report.checks)} checks)")
    if args.out is not None:
        _write_rows(args.out, report.rows(), args.format)
    return 0 if report.passed else 1


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(
        prog="multibrot",
        description="Render and cross-check multibrot, hyperbrot, and "
                    "perplexbrot sets for z -> z**p + c.")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    render = sub.add_parser("render", help="rasterize a set and write an image, mesh, or table")
    render.add_argument("kind", choices=("multibrot", "hyperbrot", "perplexbrot"))
    render.add_argument("--p", type=int, default=2, help="polynomial degree, 2..64 (default 2)")
    render.add_argument("--window", metavar="X0,X1,Y0,Y1",
                        help="2-D sample window (defaults depend on kind)")
    render.add_argument("--box", metavar="X0,X1,Y0,Y1,Z0,Z1",
                        help="3-D sample box for perplexbrot (default [-2,2]^3)")
    render.add_argument("--res", metavar="N[,N[,N]]",
                        help=f"grid resolution (default {_DEFAULT_RES_2D} squared, "
                             f"{_DEFAULT_RES_3D} cubed)")
    render.add_argument("--max-iter", type=int, default=1000, dest="max_iter",
                        help="iteration cap per orbit (default 1000)")
    render.add_argument("--threads", type=int, default=None,
                        help="worker threads for the multibrot raster "
                             "(default: MULTIBROT_THREADS or the CPU count)")
    render.add_argument("--out", help="output path (default derived from kind and degree)")
    render.add_argument("--format", choices=("pgm", "obj", "csv", "json"),
                        help="pgm image, obj mesh, or csv/json summary")
    render.add_argument("--config", help="JSON file of option defaults; flags override")
    render.set_defaults(func=_cmd_render)

    info = sub.add_parser("info", help="print closed-form constants for one degree")
    info.add_argument("--p", type=int, default=2, help="polynomial degree, 2..64 (default 2)")
    info.add_argument("--format", choices=("json", "csv"), default="json")
    info.add_argument("--out", help="write to a file instead of stdout")
    info.add_argument("--config", help="JSON file of option defaults; flags override")
    info.set_defaults(func=_cmd_info)

    verify = sub.add_parser("verify", help="run a named self-check suite")
    verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    verify.add_argument("--p", type=int, help="restrict the suite to one degree")
    verify.add_argument("--res", type=int, help="grid resolution or boundary samples per side")
    verify.add_argument("--max-iter", type=int, dest="max_iter",
                        help="iteration cap override")
    verify.add_argument("--samples", type=int, help="random sample count (algebra suite)")
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--out", help="write the per-check report to a file")
    verify.add_argument("--config", help="JSON file of option defaults; flags override")
    verify.set_defaults(func=_cmd_verify)

    return parser, {"render": render, "info": info, "verify": verify}


def _config_path(argv: list[str]) -> str | None:
    for k, token in enumerate(argv):
        if token == "--config":
            return argv[k + 1] if k + 1 < len(argv) else None
        if token.startswith("--config="):
            return token.split("=", 1)[1]
    return None


def _apply_config(argv: list[str],
                  subparsers: dict[str, argparse.ArgumentParser]) -> list[str]:
    """Turn config-file entries into flags placed before the user's own."""
    path = _config_path(argv)
    if path is None or not argv:
        return argv
    with open(path, encoding="ascii") as fh:
        config = json.load(fh)
    if not isinstance(config, dict):
        raise ValueError(f"config file {path} must hold a JSON object")

    known = {opt for sp in subparsers.values() for opt in sp._option_string_actions}
    active = subparsers.get(argv[0])
    accepted = set(active._option_string_actions) if active is not None else known

    extra: list[str] = []
    for key, value in config.items():
        flag = "--" + str(key).replace("_", "-")
        if flag == "--config":
            raise ValueError("config files cannot nest --config")
        if flag not in known:
            raise ValueError(f"unknown config key {key!r} in {path}")
        if flag not in accepted:
            continue
        if isinstance(value, bool):
            raise ValueError(f"config key {key!r} must not be a boolean")
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        # the joined form survives argparse's negative-number heuristic
        extra.append(f"{flag}={value}")
    return [argv[0], *extra, *argv[1:]]


_SIGNED_VALUE_FLAGS = ("--window", "--box")


def _join_signed_values(argv: list[str]) -> list[str]:
    """Fold "--window -2,0.5,..." into one token; argparse reads the bare
    value as an unknown flag because it starts with a dash."""
    out: list[str] = []
    skip = False
    for k, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if (token in _SIGNED_VALUE_FLAGS and k + 1 < len(argv)
                and argv[k + 1].startswith("-")):
            out.append(f"{token}={argv[k + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser, subparsers = build_parser()
    try:
        argv = _apply_config(argv, subparsers)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(_join_signed_values(argv))
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
