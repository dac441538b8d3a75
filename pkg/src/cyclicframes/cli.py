"""Command-line interface.

Every verb prints a JSON report to stdout.  Exit codes: 0 on success, 1 on
usage or data errors, 2 when ``verify`` finds a failing check.  The default
tolerance is 1e-9, overridable per run with ``--tol`` or the FRAMES_TOL
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import io as wire
from .cyclic import (
    circulant_frame,
    conjugation_check,
    cyclicity_verdict,
    diagnose,
    is_cyclic,
    kernel_shift_test,
    minimal_period,
    norm_bound_check,
    roots_frame,
    simplex_frame,
)
from .dynamical import detect_dynamical, dynamical_dual, window_report
from .erasure import canonical_tight_cyclic, erasure_analysis, worst_case_csv
from .errors import FrameError
from .frames import Frame, canonical_dual, canonical_tight, classify, frame_bounds
from .linalg import DEFAULT_TOL


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def parse_complex_token(token: str) -> complex:
    """Parse ``re`` or ``re+imi`` tokens such as ``1``, ``-i`` or ``1.5-2i``."""
    s = token.strip().replace(" ", "")
    if not s:
        raise _UsageError("empty complex token")
    s = s.replace("i", "j")
    if s.endswith("j"):
        head = s[:-1]
        if head == "" or head.endswith(("+", "-")):
            s = head + "1j"
    try:
        value = complex(s)
    except ValueError:
        raise _UsageError(f"cannot parse complex token {token!r}") from None
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise _UsageError(f"non-finite complex token {token!r}")
    return value


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex_token(tok) for tok in text.split(",")]


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise _UsageError(f"cannot parse integer list {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclicframes", description=__doc__)
    parser.add_argument("--tol", type=float, default=None, help="tolerance override")
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    sub = parser.add_subparsers(dest="verb", required=True)

    construct = sub.add_parser("construct", help="build a frame")
    kind = construct.add_subparsers(dest="kind", required=True)
    simplex = kind.add_parser("simplex", help="basis plus negated sum, n = d + 1")
    simplex.add_argument("--d", type=int, required=True)
    roots = kind.add_parser("roots", help="diagonal roots-of-unity construction")
    roots.add_argument("--n", type=int, required=True)
    roots.add_argument("--d", type=int, required=True)
    roots.add_argument("--m", type=str, required=True, help="comma-separated exponents")
    roots.add_argument("--f1", type=str, default=None, help="seed (defaults to all ones)")
    circ = kind.add_parser("circulant", help="prescribed-kernel circulant construction")
    circ.add_argument("--n", type=int, required=True)
    circ.add_argument("--d", type=int, required=True)
    circ.add_argument("--a", type=str, required=True, help="symbol vector, n-d nonzeros")
    for p in (simplex, roots, circ):
        p.add_argument("--out", type=str, default=None, help="write the frame JSON here")

    analyze = sub.add_parser("analyze", help="classification plus cyclicity diagnosis")
    analyze.add_argument("frame", type=str)

    dual = sub.add_parser("dual", help="zero-padded dynamical dual")
    dual.add_argument("frame", type=str)
    dual.add_argument("--out", type=str, default=None)

    tight = sub.add_parser("tight", help="canonical tight (Parseval) frame")
    tight.add_argument("frame", type=str)
    tight.add_argument("--out", type=str, default=None)

    erasure = sub.add_parser("erasure", help="exhaustive erasure sweep")
    erasure.add_argument("frame", type=str)
    erasure.add_argument("--m", type=int, default=2, choices=(1, 2))
    erasure.add_argument("--csv", type=str, default=None, help="write worst-case CSV here")

    verify = sub.add_parser("verify", help="run the invariant suite on a frame file")
    verify.add_argument("frame", type=str)
    verify.add_argument("--seed", type=int, default=0, help="seed for probe vectors")
    return parser


def _inspect(frame: Frame, tol: float) -> dict:
    report = {"analysis": wire.analysis_to_dict(classify(frame, tol))}
    system = detect_dynamical(frame, tol)
    if system is None:
        report["dynamical"] = {"detected": False, "system": None}
        report["cyclic"] = None
    else:
        report["dynamical"] = {"detected": True, "system": wire.system_to_dict(system)}
        report["cyclic"] = wire.cyclic_report_to_dict(
            diagnose(system.operator, system.seed, system.length, tol)
        )
    report["kernel_shift_invariant"] = kernel_shift_test(frame, tol)
    return report


def _cmd_construct(args, tol: float) -> tuple[dict, int]:
    if args.kind == "simplex":
        if args.d < 1:
            raise _UsageError("--d must be positive")
        system = simplex_frame(np.eye(args.d, dtype=np.complex128), tol)
        frame = system.frame()
    elif args.kind == "roots":
        ms = parse_int_list(args.m)
        if len(ms) != args.d:
            raise _UsageError(f"--m lists {len(ms)} exponents but --d is {args.d}")
        f1 = None if args.f1 is None else parse_complex_list(args.f1)
        if f1 is not None and len(f1) != args.d:
            raise _UsageError(f"--f1 lists {len(f1)} entries but --d is {args.d}")
        system = roots_frame(args.n, ms, f1, tol=tol)
        frame = system.frame()
    else:
        a = parse_complex_list(args.a)
        if len(a) != args.n:
            raise _UsageError(f"--a lists {len(a)} entries but --n is {args.n}")
        frame, system = circulant_frame(a, args.d, tol)

    if args.out:
        wire.save_frame(frame, args.out)
    report = {
        "verb": "construct",
        "kind": args.kind,
        "frame": wire.frame_to_dict(frame),
        "system": wire.system_to_dict(system),
    }
    report.update(_inspect(frame, tol))
    return report, 0


def _cmd_analyze(args, tol: float) -> tuple[dict, int]:
    frame = wire.load_frame(args.frame)
    return _inspect(frame, tol), 0


def _cmd_dual(args, tol: float) -> tuple[dict, int]:
    frame = wire.load_frame(args.frame)
    perm, dual = dynamical_dual(frame, tol)
    permuted = Frame(frame.synthesis[:, perm])
    residual = float(
        np.linalg.norm(permuted.synthesis @ dual.synthesis.conj().T - np.eye(frame.d))
    )
    if args.out:
        wire.save_frame(dual, args.out)
    return {
        "verb": "dual",
        "permutation": [k + 1 for k in perm],
        "dual": wire.frame_to_dict(dual),
        "duality_residual": residual,
    }, 0


def _cmd_tight(args, tol: float) -> tuple[dict, int]:
    frame = wire.load_frame(args.frame)
    tight = canonical_tight(frame, tol)
    if args.out:
        wire.save_frame(tight, args.out)
    return {
        "verb": "tight",
        "frame": wire.frame_to_dict(tight),
        "bounds": wire.bounds_to_dict(frame_bounds(tight, tol)),
    }, 0


def _cmd_erasure(args, tol: float) -> tuple[dict, int]:
    frame = wire.load_frame(args.frame)
    report = erasure_analysis(frame, args.m, tol)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(worst_case_csv(report))
    return {"verb": "erasure", **wire.erasure_report_to_dict(report)}, 0


def _cmd_verify(args, tol: float) -> tuple[dict, int]:
    frame = wire.load_frame(args.frame)
    rng = np.random.default_rng(args.seed)
    checks: dict[str, dict] = {}

    def record(name: str, passed: bool, detail: float | str | None = None):
        checks[name] = {"passed": bool(passed), "detail": detail}

    analysis = classify(frame, tol)
    record("is_frame", analysis.is_frame, analysis.bounds.lower)
    record("parseval_implies_tight", analysis.is_tight or not analysis.is_parseval)
    record("equiangular_implies_uniform", analysis.is_uniform or not analysis.is_equiangular)

    if analysis.is_frame:
        dual = canonical_dual(frame, tol)
        resid = float(
            np.linalg.norm(frame.synthesis @ dual.synthesis.conj().T - np.eye(frame.d))
        )
        record("dual_reconstruction", resid <= 1e-8, resid)

        tight = canonical_tight(frame, tol)
        tb = frame_bounds(tight, tol)
        record(
            "canonical_tight_parseval",
            abs(tb.lower - 1.0) <= 1e-8 and abs(tb.upper - 1.0) <= 1e-8,
            max(abs(tb.lower - 1.0), abs(tb.upper - 1.0)),
        )

        probe = rng.standard_normal(frame.d) + 1j * rng.standard_normal(frame.d)
        recon = frame.synthesis @ (dual.synthesis.conj().T @ probe)
        err = float(np.linalg.norm(recon - probe) / np.linalg.norm(probe))
        record("random_vector_reconstruction", err <= 1e-8, err)

        shift_invariant = kernel_shift_test(frame, max(tol, 1e-8))
        direct = cyclicity_verdict(frame, max(tol, 1e-8))
        record(
            "kernel_shift_matches_direct_cyclicity",
            shift_invariant == direct,
            f"kernel={shift_invariant} direct={direct}",
        )

        system = detect_dynamical(frame, tol)
        if system is not None and is_cyclic(system.operator, system.length, max(tol, 1e-8)):
            windows = window_report(system, tol)
            record("all_windows_full_rank", all(windows.windows))
            period = minimal_period(system.operator, system.length, max(tol, 1e-8))
            record(
                "minimal_period_divides_length",
                period is not None and system.length % period == 0,
                period,
            )
            bounds_report = norm_bound_check(system, max(tol, 1e-6))
            record("norm_bounds", bounds_report.holds, bounds_report.operator_norm)
            record("conjugation_identity", conjugation_check(system, max(tol, 1e-7)))
            tight_sys = canonical_tight_cyclic(system, tol)
            defect = float(
                np.linalg.norm(
                    tight_sys.operator.conj().T @ tight_sys.operator - np.eye(frame.d)
                )
            )
            record("tightened_operator_unitary", defect <= 1e-8, defect)

        sweep = erasure_analysis(frame, 1, tol)
        norms_sq = np.linalg.norm(
            (tight if sweep.tightened else frame).synthesis, axis=0
        ) ** 2
        worst = max(
            abs(r.error_norm - norms_sq[r.erased[0]]) for r in sweep.records
        )
        record("single_erasure_norm_is_squared_column_norm", worst <= 1e-10, worst)

    passed = all(c["passed"] for c in checks.values())
    return {"verb": "verify", "passed": passed, "checks": checks}, 0 if passed else 2


_COMMANDS = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "dual": _cmd_dual,
    "tight": _cmd_tight,
    "erasure": _cmd_erasure,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    tol = args.tol
    if tol is None:
        env = os.environ.get("FRAMES_TOL")
        try:
            tol = float(env) if env else DEFAULT_TOL
        except ValueError:
            print(f"data error: FRAMES_TOL={env!r} is not a number", file=sys.stderr)
            return 1
    if not tol > 0:
        print("usage error: tolerance must be positive", file=sys.stderr)
        return 1

    try:
        report, code = _COMMANDS[args.verb](args, tol)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FrameError as exc:
        print(f"data error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 1

    print(wire.dumps(report, pretty=args.pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
