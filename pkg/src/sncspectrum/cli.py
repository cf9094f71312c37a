"""Command-line interface: ``sncspectrum <command> ...``.

Exit status: 0 on success, 1 for unreadable input or validation violations,
2 when two independent derivations of a polynomial disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import IdentityFailure, InvalidSpec, SpectrumError
from .hodge import HodgeData, from_catalog
from .kkp import f_lg_numbers, kkp_equality_check, load_weights, to_limiting_table
from .snc import enumerate_strata, load_spec, missing_strata, validate
from .spectrum import SpectrumReport, irregular_spectrum

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IDENTITY = 2


def _use_color(stream) -> bool:
    if os.environ.get("SNC_SPECTRUM_COLOR", "1") == "0":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _bold(text: str, color: bool) -> str:
    return f"\033[1m{text}\033[0m" if color else text


def _fmt_table(table: dict) -> str:
    return "{" + ", ".join(f"{k}:{v}" for k, v in sorted(table.items())) + "}"


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    json: bool = False
    check: str = "none"
    jobs: int = 1
    out: str | None = None
    weights: str | None = None
    params: tuple[str, ...] = ()


class _Failure(Exception):
    def __init__(self, status: int, text: str):
        super().__init__(text)
        self.status = status
        self.text = text


def _compute(path: str, check: str) -> SpectrumReport:
    try:
        spec = load_spec(path)
        return irregular_spectrum(spec, check=check)
    except IdentityFailure as exc:
        raise _Failure(
            EXIT_IDENTITY,
            f"{path}: internal identity failure ({type(exc).__name__})\n"
            f"  left:  {exc.left}\n  right: {exc.right}",
        ) from None
    except InvalidSpec as exc:
        lines = "\n".join(f"  - {v}" for v in exc.violations)
        raise _Failure(EXIT_INVALID, f"{path}: {len(exc.violations)} violation(s)\n{lines}") from None
    except (SpectrumError, OSError) as exc:
        raise _Failure(EXIT_INVALID, f"{path}: {type(exc).__name__}: {exc}") from None


def _report_text(path: str, report: SpectrumReport, full: bool, color: bool) -> str:
    lines = [
        _bold(f"Sp_f = {report.sp_f}", color),
        f"h_irr(U, f, {report.n}) = {_fmt_table(report.irregular)}",
    ]
    if full:
        lines += [
            f"Sp_psi = {report.sp_psi}",
            f"Sp_U = {report.sp_u}",
            f"Sp_f(1) = {report.euler_value}",
            f"palindrome about {report.n}: {report.palindrome_about_n}",
            f"checks: {report.check_level}",
        ]
    lines += [f"warning: {w}" for w in report.warnings]
    return "\n".join(lines)


def _report_json(path: str, report: SpectrumReport) -> dict:
    return {"schema_version": SCHEMA_VERSION, "input": path, "report": report.to_dict()}


def _cmd_spectrum(cfg: RunConfig, color: bool, full: bool) -> tuple[int, str]:
    path = cfg.inputs[0]
    report = _compute(path, cfg.check)
    if cfg.json:
        return EXIT_OK, json.dumps(_report_json(path, report), sort_keys=True, indent=2)
    return EXIT_OK, _report_text(path, report, full, color)


def _cmd_kkp(cfg: RunConfig, color: bool) -> tuple[int, str]:
    path = cfg.inputs[0]
    report = _compute(path, cfg.check)
    table = to_limiting_table(report)
    f_lg = f_lg_numbers(report)
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "input": path,
        "limiting": [
            {"alpha": str(a), "p": p, "dim": d} for (a, p), d in table.entries.items()
        ],
        "f_lg": {f"{p},{q}": d for (p, q), d in f_lg.items()},
    }
    verdict = None
    if cfg.weights:
        try:
            w = load_weights(cfg.weights)
            verdict = kkp_equality_check(report, w)
        except (SpectrumError, OSError) as exc:
            raise _Failure(EXIT_INVALID, f"{cfg.weights}: {type(exc).__name__}: {exc}") from None
        doc["verdict"] = verdict.to_dict()
    if cfg.json:
        return EXIT_OK, json.dumps(doc, sort_keys=True, indent=2)
    lines = [_bold(f"Sp_f = {report.sp_f}", color)]
    for alpha in table.alphas():
        lines.append(f"limiting gr_F on H^{report.n}, alpha={alpha}: {_fmt_table(table.row(alpha))}")
    lines.append("f_LG = " + _fmt_table({f"{p},{q}": d for (p, q), d in f_lg.items()}))
    if verdict is not None:
        lines.append("h_LG = " + _fmt_table({f"{p},{q}": d for (p, q), d in verdict.h_lg.items()}))
        status = "holds" if verdict.holds else "FAILS"
        lines.append(_bold(f"f_LG = h_LG: {status}", color))
        lines.append(f"Hodge-Tate: {verdict.hodge_tate}")
        if verdict.witness:
            p, q = verdict.witness
            lines.append(
                f"witness: (p,q)=({p},{q}) f_LG={verdict.f_lg.get((p, q), 0)} "
                f"h_LG={verdict.h_lg.get((p, q), 0)}"
            )
    return EXIT_OK, "\n".join(lines)


def _parse_param(token: str):
    key, sep, value = token.partition("=")
    if not sep:
        raise _Failure(EXIT_INVALID, f"catalog parameter {token!r} must look like key=value")
    if "," in value:
        return key, [int(v) for v in value.split(",")]
    return key, int(value)


def _cmd_catalog(cfg: RunConfig, color: bool) -> tuple[int, str]:
    name = cfg.inputs[0]
    try:
        params = dict(_parse_param(t) for t in cfg.params)
        h: HodgeData = from_catalog(name, **params)
    except (KeyError, ValueError) as exc:
        raise _Failure(EXIT_INVALID, f"catalog: {exc}") from None
    if cfg.json:
        return EXIT_OK, json.dumps({"schema_version": SCHEMA_VERSION, "hodge": h.to_dict()}, sort_keys=True, indent=2)
    return EXIT_OK, "\n".join([
        _bold(f"{name} {' '.join(cfg.params)}".strip(), color),
        h.diamond(),
        f"dim = {h.dim}, components = {h.components}, euler = {h.euler()}",
    ])


def _cmd_check(cfg: RunConfig, color: bool) -> tuple[int, str]:
    path = cfg.inputs[0]
    try:
        spec = load_spec(path)
    except (SpectrumError, OSError) as exc:
        raise _Failure(EXIT_INVALID, f"{path}: {type(exc).__name__}: {exc}") from None
    violations = validate(spec)
    if violations:
        lines = "\n".join(f"  - {v}" for v in violations)
        raise _Failure(EXIT_INVALID, f"{path}: {len(violations)} violation(s)\n{lines}")
    lines = [_bold(f"{path}: valid (n={spec.n}, r={spec.r}, reduced={spec.reduced})", color)]
    for key, d, z in enumerate_strata(spec):
        lines.append(f"  D{list(key)}: dim {d.dim}, D∩Z: dim {z.dim}")
    lines += [f"warning: {w}" for w in missing_strata(spec)]
    if cfg.check != "none" and spec.reduced:
        _compute(path, cfg.check)
        lines.append(f"identity checks ({cfg.check}): passed")
    elif not spec.reduced:
        lines.append("note: non-reduced divisor; the closed stratum formula does not apply")
    return EXIT_OK, "\n".join(lines)


def _batch_one(args: tuple[str, str, bool]) -> tuple[str, int, str]:
    path, check, as_json = args
    try:
        report = _compute(path, check)
    except _Failure as exc:
        return path, exc.status, exc.text
    if as_json:
        return path, EXIT_OK, json.dumps(_report_json(path, report), sort_keys=True)
    return path, EXIT_OK, f"== {path}\n{_report_text(path, report, False, False)}"


def batch(directory: str, parallelism: int = 1, check: str = "none", as_json: bool = False) -> tuple[int, str]:
    """Run every ``*.json`` spec in ``directory``; output is order-independent of ``parallelism``."""
    if parallelism < 1:
        raise ValueError("parallelism must be positive")
    paths = sorted(str(p) for p in Path(directory).glob("*.json"))
    jobs = [(p, check, as_json) for p in paths]
    if parallelism == 1 or len(jobs) <= 1:
        results = [_batch_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_batch_one, jobs))
    ok = sum(1 for _, s, _ in results if s == EXIT_OK)
    invalid = sum(1 for _, s, _ in results if s == EXIT_INVALID)
    identity = sum(1 for _, s, _ in results if s == EXIT_IDENTITY)
    if as_json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "results": [
                {"input": p, "status": s, **({"report": json.loads(t)["report"]} if s == EXIT_OK else {"error": t})}
                for p, s, t in results
            ],
            "summary": {"files": len(results), "ok": ok, "invalid": invalid, "identity_failures": identity},
        }
        text = json.dumps(doc, sort_keys=True, indent=2)
    else:
        blocks = [t if s == EXIT_OK else f"== {p}\nERROR (status {s}): {t}" for p, s, t in results]
        blocks.append(f"summary: {len(results)} files, {ok} ok, {invalid} invalid, {identity} identity failures")
        text = "\n".join(blocks)
    status = EXIT_IDENTITY if identity else EXIT_INVALID if invalid else EXIT_OK
    return status, text


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    color = cfg.out is None and _use_color(stdout)
    try:
        if cfg.command == "batch":
            status, text = batch(cfg.inputs[0], cfg.jobs, cfg.check, cfg.json)
        elif cfg.command in ("spectrum", "irregular"):
            status, text = _cmd_spectrum(cfg, color, full=cfg.command == "spectrum")
        elif cfg.command == "kkp":
            status, text = _cmd_kkp(cfg, color)
        elif cfg.command == "catalog":
            status, text = _cmd_catalog(cfg, color)
        elif cfg.command == "check":
            status, text = _cmd_check(cfg, color)
        else:
            raise _Failure(EXIT_INVALID, f"unknown command {cfg.command!r}")
    except _Failure as exc:
        print(exc.text, file=stderr)
        return exc.status
    if cfg.out:
        Path(cfg.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text, file=stdout)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sncspectrum",
        description="Irregular Hodge numbers of non-degenerate functions on SNC pairs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--check", choices=("none", "forms", "full"), default="none",
                        help="cross-check nearby-cycle forms (forms) and the Sp_U identity (full)")
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="full spectrum report")
    p.add_argument("spec")
    p = sub.add_parser("irregular", parents=[common], help="Sp_f and the irregular Hodge table")
    p.add_argument("spec")
    p = sub.add_parser("kkp", parents=[common], help="limiting Hodge table and LG number comparison")
    p.add_argument("spec")
    p.add_argument("--weights", metavar="FILE", help="JSON map 'p,q' -> dim gr^W_2p H^(p+q)")
    p = sub.add_parser("catalog", parents=[common], help="Hodge diamond of a catalog variety")
    p.add_argument("name")
    p.add_argument("params", nargs="*", help="key=value, e.g. n=4 d=5 or f=1,3,3")
    p = sub.add_parser("check", parents=[common], help="validate a spec file")
    p.add_argument("spec")
    p = sub.add_parser("batch", parents=[common], help="run every spec in a directory")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "catalog":
        inputs, params = [args.name], tuple(args.params)
    else:
        inputs, params = [getattr(args, "spec", None) or args.dir], ()
    return RunConfig(
        command=args.command,
        inputs=inputs,
        json=args.json,
        check=args.check,
        jobs=getattr(args, "jobs", 1),
        out=args.out,
        weights=getattr(args, "weights", None),
        params=params,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "batch" and args.jobs < 1:
        print("--jobs must be positive", file=sys.stderr)
        return EXIT_INVALID
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
