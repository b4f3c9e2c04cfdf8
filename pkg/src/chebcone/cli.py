"""Command line front end: compute family elements, run verification
suites, emit certificate files and growth tables.

Exit codes are exactly 0 for success, 1 for a failed assertion or an
invalid certificate, and 2 for a usage error.  All randomized work is
driven by the --seed flag, and identical (command, seed, n) invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import suites as suite_lib
from .certifier import certify_pair, document_json
from .recurrence_engine import (
    VALID_I,
    VALID_J,
    CheckResult,
    closed_element,
    growth_stats,
    raw_element,
)
from .tilde_ring import TildeElement, fold_L

FORMATS = ("text", "json", "tsv")
MODES = ("raw", "closed", "both")


@dataclass
class RunConfig:
    """Parsed invocation; one field per flag."""

    command: str
    n: int | None = None
    i: int = 0
    j: int = 0
    mode: str = "raw"
    suites: list[str] = field(default_factory=list)
    trials: int | None = None
    seed: int = 0
    format: str = "text"
    out: str | None = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebcone",
        description="exact kernel for the shift-basis module algebra: "
        "compute coefficient families, verify their identities, emit certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="print one family element and its fold")
    p_compute.add_argument("--n", type=int, required=True, help="recursion depth, >= 0")
    p_compute.add_argument("--i", type=int, choices=VALID_I, default=0, help="slot index")
    p_compute.add_argument("--j", type=int, choices=VALID_J, default=0,
                           help="0 = leading, 1 = penultimate leading")
    p_compute.add_argument("--mode", choices=MODES, default="raw")
    p_compute.add_argument("--format", choices=FORMATS, default="text")
    p_compute.add_argument("--out", default=None, help="write output to this file")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all",
                          help="comma separated subset of: " + ",".join(suite_lib.SUITE_NAMES))
    p_verify.add_argument("--n", type=int, default=None,
                          help="depth for recurrence suites / index bound for lemmas "
                          "(defaults: depth 3, bounds 8 and 6)")
    p_verify.add_argument("--trials", type=int, default=None,
                          help="random trials (defaults: 200, cross 500)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=FORMATS, default="text")
    p_verify.add_argument("--out", default=None)

    p_certify = sub.add_parser("certify", help="write certificate documents")
    p_certify.add_argument("--n", type=int, default=3, help="maximum depth, >= 0")
    p_certify.add_argument("--format", choices=("json",), default="json",
                           help="certificate documents are always JSON")
    p_certify.add_argument("--out", default="certificates",
                           help="output directory (default: certificates)")

    p_stats = sub.add_parser("stats", help="growth table for the family elements")
    p_stats.add_argument("--n", type=int, default=3, help="maximum depth, >= 0")
    p_stats.add_argument("--format", choices=FORMATS, default="text")
    p_stats.add_argument("--out", default=None)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("n", "i", "j", "mode", "trials", "seed", "format", "out"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "suite", None) is not None:
        if args.suite == "all":
            cfg.suites = list(suite_lib.SUITE_NAMES)
        else:
            cfg.suites = [s.strip() for s in args.suite.split(",") if s.strip()]
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _terms_doc(terms: list[tuple[int, int]]) -> list[list]:
    return [[idx, str(c)] for idx, c in terms]


def cmd_compute(cfg: RunConfig) -> int:
    g_raw = raw_element(cfg.n, cfg.i, cfg.j)
    if cfg.mode == "raw":
        g = g_raw
    else:
        g_closed = closed_element(cfg.n, cfg.i, cfg.j)
        if cfg.mode == "both" and g_raw != g_closed:
            sys.stderr.write(
                f"compute: raw and closed elements disagree at "
                f"(n={cfg.n}, i={cfg.i}, j={cfg.j})\n"
            )
            return 1
        g = g_closed
    folded = fold_L(g)

    if cfg.format == "text":
        text = f"{g}\nfold: {folded}\n"
    elif cfg.format == "json":
        doc = {
            "command": "compute",
            "n": cfg.n,
            "i": cfg.i,
            "j": cfg.j,
            "mode": cfg.mode,
            "element": _terms_doc(g.terms()),
            "element_text": str(g),
            "fold": _terms_doc(folded.terms()),
            "fold_text": str(folded),
        }
        text = json.dumps(doc, indent=1) + "\n"
    else:
        lines = ["part\tindex\tcoefficient"]
        lines += [f"element\t{idx}\t{c}" for idx, c in g.terms()]
        lines += [f"fold\t{idx}\t{c}" for idx, c in folded.terms()]
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 0


def _render_checks(pairs: list[tuple[str, list[CheckResult]]], cfg: RunConfig) -> tuple[str, int]:
    checks = [(suite, r) for suite, results in pairs for r in results]
    failed = [r for _, r in checks if not r.passed]
    if cfg.format == "json":
        doc = {
            "command": "verify",
            "suites": [s for s, _ in pairs],
            "n": cfg.n,
            "trials": cfg.trials,
            "seed": cfg.seed,
            "checks": [
                {"suite": s, "name": r.name, "passed": r.passed, "detail": r.detail}
                for s, r in checks
            ],
            "total": len(checks),
            "failed": len(failed),
            "all_passed": not failed,
        }
        return json.dumps(doc, indent=1) + "\n", 0 if not failed else 1
    if cfg.format == "tsv":
        lines = ["suite\tcheck\tstatus\tdetail"]
        lines += [
            f"{s}\t{r.name}\t{'PASS' if r.passed else 'FAIL'}\t{r.detail}"
            for s, r in checks
        ]
        return "\n".join(lines) + "\n", 0 if not failed else 1
    lines = [
        f"[{'PASS' if r.passed else 'FAIL'}] {r.name}" + (f": {r.detail}" if r.detail else "")
        for _, r in checks
    ]
    n_label = "auto" if cfg.n is None else cfg.n
    trials_label = "auto" if cfg.trials is None else cfg.trials
    lines.append(
        f"verify: {len(checks)} checks, {len(checks) - len(failed)} passed, "
        f"{len(failed)} failed (suites={','.join(s for s, _ in pairs)}; "
        f"n={n_label}; trials={trials_label}; seed={cfg.seed})"
    )
    return "\n".join(lines) + "\n", 0 if not failed else 1


def cmd_verify(cfg: RunConfig, parser: argparse.ArgumentParser) -> int:
    unknown = [s for s in cfg.suites if s not in suite_lib.SUITE_NAMES]
    if unknown:
        parser.error(f"unknown suite(s): {', '.join(unknown)}")
    pairs = suite_lib.run_suites(cfg.suites, cfg.n, cfg.trials, cfg.seed)
    text, code = _render_checks(pairs, cfg)
    _emit(text, cfg.out)
    return code


def cmd_certify(cfg: RunConfig) -> int:
    outdir = Path(cfg.out or "certificates")
    outdir.mkdir(parents=True, exist_ok=True)
    lines = []
    all_valid = True
    written = 0
    for n in range(cfg.n + 1):
        for j in VALID_J:
            cone_cert, pos_certs = certify_pair(n, j)
            path = outdir / f"cone_n{n}_j{j}.json"
            path.write_text(document_json(cone_cert.to_document()), encoding="utf-8")
            written += 1
            ok = cone_cert.recomposition_ok
            all_valid = all_valid and ok
            lines.append(
                f"{'ok' if ok else 'INVALID'} cone n={n} j={j} "
                f"center={cone_cert.center} file={path.name}"
            )
            for pc in pos_certs:
                path = outdir / f"positivity_n{n}_i{pc.i}_j{j}.json"
                path.write_text(document_json(pc.to_document()), encoding="utf-8")
                written += 1
                all_valid = all_valid and pc.all_nonnegative
                lines.append(
                    f"{'ok' if pc.all_nonnegative else 'INVALID'} positivity "
                    f"n={n} i={pc.i} j={j} cone_bound={pc.cone_bound} file={path.name}"
                )
    lines.append(
        f"certify: wrote {written} certificates to {outdir}, "
        f"{'all valid' if all_valid else 'INVALID CERTIFICATES PRESENT'}"
    )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if all_valid else 1


def cmd_stats(cfg: RunConfig) -> int:
    rows = []
    for n in range(cfg.n + 1):
        rows.extend(growth_stats(n).rows)
    if cfg.format == "json":
        doc = {
            "command": "stats",
            "n": cfg.n,
            "rows": [
                {
                    "n": r.n,
                    "j": r.j,
                    "support": r.support_size,
                    "min_index": r.min_index,
                    "max_index": r.max_index,
                    "mass": str(r.mass),
                }
                for r in rows
            ],
        }
        text = json.dumps(doc, indent=1) + "\n"
    else:
        sep = "\t" if cfg.format == "tsv" else "  "
        lines = [sep.join(("n", "j", "support", "min_index", "max_index", "mass"))]
        for r in rows:
            lines.append(
                sep.join(
                    (
                        str(r.n),
                        str(r.j),
                        str(r.support_size),
                        "" if r.min_index is None else str(r.min_index),
                        "" if r.max_index is None else str(r.max_index),
                        str(r.mass),
                    )
                )
            )
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    if cfg.n is not None and cfg.n < 0:
        parser.error("--n must be >= 0")
    if cfg.trials is not None and cfg.trials <= 0:
        parser.error("--trials must be positive")
    if cfg.seed < 0 or cfg.seed >= 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    try:
        if cfg.command == "compute":
            return cmd_compute(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg, parser)
        if cfg.command == "certify":
            return cmd_certify(cfg)
        return cmd_stats(cfg)
    except ValueError as exc:
        sys.stderr.write(f"chebcone: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
