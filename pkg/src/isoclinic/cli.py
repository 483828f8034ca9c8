"""Command-line interface.

Subcommands:
    generate   build a matrix family member and export it
    verify     re-check an exported record numerically (and exactly)
    enumerate  classify orders k as admissible / open / excluded
    pipeline   run the full construction and verification chain for one k

Exit codes: 0 success, 1 verification failure, 2 inadmissible parameters,
3 I/O error, 4 parse error or precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from .conference import (
    ConferenceMatrix,
    build_conference,
    conference_residual,
    critical_angle,
    critical_omega,
    equivalence_witnesses,
    verify_counts,
)
from .errors import IsoclinicError, RecordParseError
from .export import KINDS, ExportRecord, read_record, serialize
from .gf import make_field
from .hadamard import double, hadamard_residual
from .orders import OrderInfo, classify_order
from .planes import PlaneTuple, isoclinic_residual, ls_bound, orthonormality_residual, planes_from_seidel
from .seidel import SeidelMatrix, build_seidel, seidel_square_residual, spectrum

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARAMS = 2
EXIT_IO = 3
EXIT_PARSE = 4


def build_record(kind: str, k: int, info: OrderInfo | None = None) -> ExportRecord:
    """Build the requested family member at the critical scalar for order k."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if info is None:
        info = classify_order(k)
    if info.status != "admissible":
        raise ValueError(f"k={k} is not admissible: {info.reason}")
    field = make_field(info.p, info.alpha)
    theta = critical_angle(k)
    omega0 = critical_omega(k)
    meta = {
        "p": info.p,
        "alpha": info.alpha,
        "modulus": list(field.modulus),
        "omega": [omega0.real, omega0.imag],
        "omega_branch": "principal",
        "cos_2theta": (2.0 - k) / (k - 1.0),
    }
    if kind == "conference":
        C = build_conference(field, omega0)
        return ExportRecord("conference", C.q, k, theta, C.values, C.exponents, meta)
    if kind == "seidel":
        S = build_seidel(field)
        return ExportRecord("seidel", 2 * S.q, k, theta, S.dense, None, meta)
    if kind == "gram":
        from .planes import build_gram

        A = build_gram(build_seidel(field))
        meta["lambda"] = [1, 2 * k - 2]
        return ExportRecord("gram", A.shape[0], k, theta, A, None, meta)
    if kind == "planes":
        pt = planes_from_seidel(build_seidel(field))
        meta["lambda"] = [pt.lam.numerator, pt.lam.denominator]
        meta["planes"] = pt.n
        return ExportRecord("planes", pt.r, k, theta, pt.basis, None, meta)
    # hadamard
    H = double(build_conference(field, omega0))
    return ExportRecord("hadamard", H.n2, k, theta, H.values, None, meta)


class _ExactUnavailable(Exception):
    pass


def _record_checks(record: ExportRecord, tol: float, exact: bool) -> list[tuple[str, bool, str]]:
    """Kind-appropriate checks as (name, ok, detail) rows."""
    checks: list[tuple[str, bool, str]] = []
    kind = record.kind
    if kind == "conference":
        meta = record.metadata
        omega = complex(*meta["omega"]) if "omega" in meta else complex(1.0)
        C = ConferenceMatrix(
            q=record.order,
            k=record.k,
            omega=omega,
            exponents=record.exponents,
            values=record.entries.astype(np.complex128),
        )
        resid = conference_residual(C)
        checks.append(("conference-residual", resid <= tol, f"{resid:.3e}"))
        if exact:
            if record.exponents is None:
                raise _ExactUnavailable("exact layer unavailable: record has no exponent matrix")
            ok = verify_counts(C)
            checks.append(("exact-counts", ok, "match" if ok else "counts differ"))
        return checks
    if exact:
        raise _ExactUnavailable("exact layer unavailable: only conference records carry one")
    if kind == "seidel":
        if record.order % 2 != 0:
            raise RecordParseError("seidel record order must be even")
        S = SeidelMatrix(
            q=record.order // 2,
            k=record.k,
            theta=record.theta,
            dense=record.entries.astype(np.float64),
        )
        resid = seidel_square_residual(S)
        checks.append(("seidel-square", resid <= tol, f"{resid:.3e}"))
        sym = float(np.abs(S.dense - S.dense.T).max())
        checks.append(("symmetry", sym <= tol, f"{sym:.3e}"))
        return checks
    if kind == "gram":
        A = record.entries.astype(np.float64)
        n = A.shape[0]
        sym = float(np.abs(A - A.T).max())
        checks.append(("symmetry", sym <= tol, f"{sym:.3e}"))
        idem = float(np.abs(A @ A - 2.0 * A).max())
        checks.append(("eigenvalues-0-2", idem <= max(tol, 1e-10) * n, f"|A^2-2A| = {idem:.3e}"))
        eye = np.eye(2)
        diag = max(float(np.abs(A[2 * i : 2 * i + 2, 2 * i : 2 * i + 2] - eye).max()) for i in range(n // 2))
        checks.append(("unit-diagonal-blocks", diag <= tol, f"{diag:.3e}"))
        return checks
    if kind == "planes":
        meta = record.metadata
        num, den = meta["lambda"]
        basis = record.entries.astype(np.float64)
        pt = PlaneTuple(
            r=record.order,
            n=basis.shape[1] // 2,
            lam=Fraction(int(num), int(den)),
            basis=basis,
            gram=basis.T @ basis,
        )
        orth = orthonormality_residual(pt)
        checks.append(("orthonormal-pairs", orth <= tol, f"{orth:.3e}"))
        iso = isoclinic_residual(pt)
        checks.append(("isoclinic", iso <= tol, f"{iso:.3e}"))
        return checks
    # hadamard
    from .hadamard import HadamardMatrix

    H = HadamardMatrix(n2=record.order, values=record.entries.astype(np.complex128))
    resid = hadamard_residual(H)
    checks.append(("hadamard-residual", resid <= tol, f"{resid:.3e}"))
    return checks


def run_pipeline(k: int, tol: float) -> list[tuple[str, bool, str]]:
    """Construction and verification chain for one admissible k."""
    info = classify_order(k)
    field = make_field(info.p, info.alpha)
    q = info.q
    stages: list[tuple[str, bool, str]] = []

    def stage(name, fn):
        try:
            ok, detail = fn()
        except IsoclinicError as exc:
            stages.append((name, False, f"{type(exc).__name__}: {exc}"))
            return False
        stages.append((name, ok, detail))
        return ok

    state: dict = {}

    def build_conf():
        state["C"] = build_conference(field, critical_omega(k))
        ok = verify_counts(state["C"])
        kk = (k - 1) // 2
        return ok, f"(r,s,t) = ({k - 2},{kk},{kk}) at every off-diagonal" if ok else "counts differ"

    def conf_resid():
        r = conference_residual(state["C"])
        return r <= tol, f"{r:.3e}"

    def build_seid():
        state["S"] = build_seidel(field)
        r = seidel_square_residual(state["S"])
        return r <= tol, f"{r:.3e}"

    def spectrum_check():
        pairs = spectrum(state["S"])
        ok = all(m == q for _, m in pairs)
        return ok, " ".join(f"{v:+.6f} x{m}" for v, m in pairs)

    def witness_check():
        equivalence_witnesses(field)
        return True, "permutation and all-i scaling verified"

    def extract():
        state["pt"] = planes_from_seidel(state["S"])
        r = orthonormality_residual(state["pt"])
        return r <= tol, f"orthonormality {r:.3e}"

    def iso_check():
        r = isoclinic_residual(state["pt"])
        return r <= tol, f"{r:.3e} at lambda = {state['pt'].lam}"

    def bound_check():
        bc = ls_bound(q, state["pt"].lam, q)
        return bc.tight, f"v = {q} = bound {bc.bound}"

    def hadamard_check():
        H = double(state["C"])
        r = hadamard_residual(H)
        return r <= tol, f"order {H.n2}, residual {r:.3e}"

    todo = [
        ("conference-exact-counts", build_conf),
        ("conference-residual", conf_resid),
        ("seidel-square", build_seid),
        ("spectrum", spectrum_check),
        ("equivalence-witnesses", witness_check),
        ("plane-extraction", extract),
        ("isoclinic", iso_check),
        ("count-bound-tight", bound_check),
        ("hadamard", hadamard_check),
    ]
    for name, fn in todo:
        if not stage(name, fn):
            break
    return stages


def cmd_generate(args) -> int:
    info = classify_order(args.k)
    if info.status != "admissible":
        print(f"k={args.k} (q={info.q}) is not admissible: {info.reason}", file=sys.stderr)
        return EXIT_PARAMS
    record = build_record(args.kind, args.k, info)
    payload = serialize(record, args.format)
    if args.out is None:
        sys.stdout.write(payload)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        record = read_record(args.path)
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except RecordParseError as exc:
        print(f"cannot parse {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(f"kind {record.kind} order {record.order} k {record.k}")
    try:
        checks = _record_checks(record, args.tol, args.exact)
    except _ExactUnavailable as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except RecordParseError as exc:
        print(f"malformed record: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok = True
    for name, passed, detail in checks:
        ok &= passed
        print(f"{name:<22} {'PASS' if passed else 'FAIL':<4} {detail}")
    print(f"result {'PASS' if ok else 'FAIL'} (tol {args.tol:g})")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_enumerate(args) -> int:
    if not 3 <= args.k_min <= args.k_max:
        print(f"need 3 <= k-min <= k-max, got {args.k_min}..{args.k_max}", file=sys.stderr)
        return EXIT_PARAMS
    tally = {"admissible": 0, "open": 0, "excluded": 0}
    for k in range(args.k_min, args.k_max + 1):
        if args.odd_only and k % 2 == 0:
            continue
        info = classify_order(k)
        tally[info.status] += 1
        if info.status == "admissible":
            print(f"k={info.k:<3d} q={info.q:<4d} ADMISSIBLE p={info.p} alpha={info.alpha}")
        else:
            print(f"k={info.k:<3d} q={info.q:<4d} {info.status.upper():<10s} {info.reason}")
    print(f"admissible {tally['admissible']} open {tally['open']} excluded {tally['excluded']}")
    return EXIT_OK


def cmd_pipeline(args) -> int:
    info = classify_order(args.k)
    if info.status != "admissible":
        print(f"k={args.k} (q={info.q}) is not admissible: {info.reason}", file=sys.stderr)
        return EXIT_PARAMS
    stages = run_pipeline(args.k, args.tol)
    ok = True
    for name, passed, detail in stages:
        ok &= passed
        print(f"{name:<24} {'PASS' if passed else 'FAIL':<4} {detail}")
    if not ok:
        failed = next(name for name, passed, _ in stages if not passed)
        print(f"pipeline failed at stage {failed}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoclinic",
        description="Conference matrices, Seidel matrices and equi-isoclinic plane tuples "
        "of odd prime-power order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a family member and export it")
    g.add_argument("--kind", choices=KINDS, default="conference")
    g.add_argument("--k", type=int, required=True, help="order parameter; q = 2k - 1")
    g.add_argument(
        "--format",
        choices=("text", "json", "json-like"),
        default="json",
        help="output serialization (json-like is an alias for json)",
    )
    g.add_argument("--out", default=None, help="output path; stdout when omitted")

    v = sub.add_parser("verify", help="re-check an exported record")
    v.add_argument("path")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--exact", action="store_true", help="also run the integer count certificate")

    e = sub.add_parser("enumerate", help="classify orders as admissible / open / excluded")
    e.add_argument("--k-min", type=int, default=3)
    e.add_argument("--k-max", type=int, default=51)
    e.add_argument("--odd-only", action="store_true")

    pl = sub.add_parser("pipeline", help="full construction + verification chain for one k")
    pl.add_argument("--k", type=int, required=True)
    pl.add_argument("--tol", type=float, default=1e-9)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "format", None) == "json-like":
        args.format = "json"
    handlers = {
        "generate": cmd_generate,
        "verify": cmd_verify,
        "enumerate": cmd_enumerate,
        "pipeline": cmd_pipeline,
    }
    try:
        return handlers[args.command](args)
    except RecordParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    except IsoclinicError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
