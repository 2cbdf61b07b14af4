"""Command-line front door; a thin client over the service layer.

Subcommands mirror the HTTP endpoints: ``analyze``, ``realize``,
``booksum``, ``profiles``, plus ``serve`` to run the FastAPI app.  All
input is JSON files in the schemas defined in ``schemas``; JSON output
is printed with sorted keys so identical inputs give byte-identical
bytes.

Exit codes:

* 0 success / profile passed
* 2 parse or schema error in an input file
* 3 pipeline cannot proceed (UnsupportedAssembly, NonCoprime,
  matrix-cap exceeded), offending page named
* 4 target is not almost contact (or Chern parity mismatch)
* 5 profile validation failed (first violated condition named)
* 6 profile grid too coarse

The environment variable OPENBOOK_MAX_MATRIX (default 4096) caps the
dimension of any Smith normal form computation, guarding against
runaway exponent input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import NoReturn

from pydantic import BaseModel, ValidationError

from . import analysis, contactgeom
from .errors import (
    ChernParityMismatch,
    GridTooCoarse,
    MatrixTooLarge,
    NonCoprime,
    NotAlmostContact,
    OpenBookError,
    UnsupportedAssembly,
)
from .schemas import (
    AnalysisReportModel,
    BindingProfileModel,
    DeformationProfileModel,
    ProfileVerdictModel,
    RecipeModel,
    TargetModel,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PIPELINE = 3
EXIT_NOT_ALMOST_CONTACT = 4
EXIT_PROFILE_FAIL = 5
EXIT_GRID = 6


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str) -> NoReturn:
    raise _CliError(code, message)


def _load_model(path: str, model: type[BaseModel]) -> BaseModel:
    try:
        raw = Path(path).read_text()
    except OSError as e:
        _fail(EXIT_PARSE, f"cannot read {path}: {e}")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        _fail(EXIT_PARSE, f"{path}: invalid JSON: {e}")
    try:
        return model.model_validate(data)
    except ValidationError as e:
        _fail(EXIT_PARSE, f"{path}: {e}")


def _print_json(model: BaseModel) -> None:
    payload = model.model_dump(mode="json")
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _two_col(key: str, value, indent: int = 0) -> str:
    pad = " " * indent
    return f"{pad}{key:<20}{value}"


def _print_text_report(rep: AnalysisReportModel) -> None:
    def group(g) -> str:
        parts = []
        if g.rank == 1:
            parts.append("Z")
        elif g.rank > 1:
            parts.append(f"Z^{g.rank}")
        parts.extend(f"C{d}" for d in g.torsion)
        return " x ".join(parts) if parts else "0"

    lines = [
        _two_col("identification", rep.identification),
        _two_col("h2", group(rep.homology.h2)),
        _two_col("h3", group(rep.homology.h3)),
        _two_col("spin", str(rep.spin).lower()),
        _two_col("almost_contact", str(rep.almost_contact).lower()),
        _two_col("chern", " ".join(str(c) for c in rep.chern) or "-"),
        _two_col("pages", len(rep.pages)),
    ]
    for i, p in enumerate(rep.pages, start=1):
        lines.append(_two_col(f"page {i}", p.label))
        lines.append(_two_col("mapping_torus_h2", group(p.mapping_torus.h2), 2))
        lines.append(_two_col("mapping_torus_h3", group(p.mapping_torus.h3), 2))
        lines.append(_two_col("binding_h1", group(p.binding_h1), 2))
        if p.isotopy_t0 is not None:
            lines.append(_two_col("isotopy_t0", p.isotopy_t0, 2))
        if p.chern is not None:
            lines.append(_two_col("chern", p.chern, 2))
        if p.manifold is not None:
            lines.append(_two_col("manifold", p.manifold, 2))
    sys.stdout.write("\n".join(lines) + "\n")


def _print_trace(rep: AnalysisReportModel) -> None:
    for i, p in enumerate(rep.pages, start=1):
        if p.trace is None:
            continue
        sys.stderr.write(f"# trace page {i} [{p.label}]\n")
        sys.stderr.write("monodromy:\n")
        for row in p.trace.monodromy:
            sys.stderr.write("  " + " ".join(f"{v:>3}" for v in row) + "\n")
        diag = " ".join(str(d) for d in p.trace.snf_diagonal)
        sys.stderr.write(f"snf diagonal of (monodromy - id): {diag}\n")


def _strip_trace(rep: AnalysisReportModel) -> AnalysisReportModel:
    return rep.model_copy(
        update={"pages": [p.model_copy(update={"trace": None}) for p in rep.pages]}
    )


def _emit_report(rep_core, fmt: str, trace: bool) -> None:
    rep = AnalysisReportModel.from_core(rep_core)
    if trace:
        _print_trace(rep)
        rep = _strip_trace(rep)
    if fmt == "json":
        _print_json(rep)
    else:
        _print_text_report(rep)


def _run_analyze(args: argparse.Namespace) -> int:
    recipe = _load_model(args.recipe, RecipeModel)
    try:
        core = recipe.to_core()
        report = analysis.analyze_recipe(core, trace=args.trace)
    except (UnsupportedAssembly, NonCoprime, MatrixTooLarge) as e:
        _fail(EXIT_PIPELINE, f"{type(e).__name__}: {e}")
    except ValueError as e:
        _fail(EXIT_PARSE, str(e))
    _emit_report(report, args.format, args.trace)
    return EXIT_OK


def _run_booksum(args: argparse.Namespace) -> int:
    recipes = [_load_model(path, RecipeModel) for path in args.recipes]
    try:
        report = analysis.booksum([r.to_core() for r in recipes], trace=args.trace)
    except (UnsupportedAssembly, NonCoprime, MatrixTooLarge) as e:
        _fail(EXIT_PIPELINE, f"{type(e).__name__}: {e}")
    except ValueError as e:
        _fail(EXIT_PARSE, str(e))
    _emit_report(report, args.format, args.trace)
    return EXIT_OK


def _run_realize(args: argparse.Namespace) -> int:
    target = _load_model(args.target, TargetModel)
    try:
        recipe = analysis.realize_target(target.to_core())
    except (NotAlmostContact, ChernParityMismatch) as e:
        _fail(EXIT_NOT_ALMOST_CONTACT, f"{type(e).__name__}: {e}")
    except ValueError as e:
        _fail(EXIT_PARSE, str(e))
    _print_json(RecipeModel.from_core(recipe))
    return EXIT_OK


def _run_profiles(args: argparse.Namespace) -> int:
    if args.kind == "binding":
        profile = _load_model(args.profile, BindingProfileModel)
        try:
            verdict = contactgeom.validate_binding_profiles(
                profile.to_core(), args.tolerance
            )
        except GridTooCoarse as e:
            _fail(EXIT_GRID, f"GridTooCoarse: {e}")
        except ValueError as e:
            _fail(EXIT_PARSE, str(e))
    else:
        profile = _load_model(args.profile, DeformationProfileModel)
        try:
            verdict = contactgeom.deformation_profile_verdict(
                profile.to_core(), args.tolerance
            )
        except GridTooCoarse as e:
            _fail(EXIT_GRID, f"GridTooCoarse: {e}")
        except ValueError as e:
            _fail(EXIT_PARSE, str(e))
    if args.format == "json":
        _print_json(ProfileVerdictModel.from_core(args.kind, verdict))
    else:
        if verdict.passed:
            sys.stdout.write("pass\n")
        else:
            sys.stdout.write(f"fail: {verdict.failures[0]}\n")
    return EXIT_OK if verdict.passed else EXIT_PROFILE_FAIL


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="openbook5",
        description=(
            "Analyze abstract contact open books on simply-connected "
            "five-manifolds, and synthesize recipes for admissible targets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze an open-book recipe file")
    p.add_argument("recipe", help="recipe JSON file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--trace", action="store_true",
                   help="dump monodromy matrices and SNF diagonals to stderr")
    p.set_defaults(func=_run_analyze)

    p = sub.add_parser("realize", help="produce a recipe for a target manifold")
    p.add_argument("target", help="target JSON file")
    p.set_defaults(func=_run_realize)

    p = sub.add_parser("booksum", help="analyze the book sum of several recipes")
    p.add_argument("recipes", nargs="+", help="recipe JSON files")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--trace", action="store_true",
                   help="dump monodromy matrices and SNF diagonals to stderr")
    p.set_defaults(func=_run_booksum)

    p = sub.add_parser("profiles", help="validate sampled profile functions")
    p.add_argument("profile", help="profile JSON file")
    p.add_argument("--kind", choices=("binding", "deformation"), required=True)
    p.add_argument("--tolerance", type=float, default=contactgeom.DEFAULT_TOLERANCE)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_run_profiles)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_run_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as e:
        sys.stderr.write(f"error: {e}\n")
        return e.code
    except OpenBookError as e:
        # Domain error that escaped a specific mapping; treat as pipeline.
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_PIPELINE


if __name__ == "__main__":
    sys.exit(main())
