"""Command-line entry point: every pipeline as a subcommand.

Exit codes: 0 success, 1 usage or malformed-input errors, 2 validation
failures (a named invariant did not hold).  Identical invocations (including
--seed) produce byte-identical output files; numbers are serialized with 17
significant digits.
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from .errors import InvariantViolation, SpecFileError
from . import gauge as gauge_mod
from . import serialize as ser
from . import sphere as sphere_mod
from . import theta as theta_mod
from .groups import irrep_catalog
from .induction import group_average_induction
from .reduction import reduce as reduce_op


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    p = _Parser(prog="constrq", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sc = sub.add_parser("sphere-check", help="strict-quantization defects per spin level")
    sc.add_argument("--f", required=True, help="polynomial, e.g. 'nx' or '2.5*nx^2*nz'")
    sc.add_argument("--g", required=True, help="second polynomial")
    sc.add_argument("--two-j", required=True, help="comma-separated list of 2j values")
    sc.add_argument("--out", required=True, help="output CSV path")

    rd = sub.add_parser("reduce", help="generalized symplectic reduction of a spec file")
    rd.add_argument("--spec", required=True)
    rd.add_argument("--out", required=True)

    ind = sub.add_parser("induce", help="Rieffel induction for a group/rep case file")
    ind.add_argument("--spec", required=True)
    ind.add_argument("--observables", help="JSON file with operators to descend")
    ind.add_argument("--out", required=True)
    ind.add_argument("--include-v", action="store_true", help="serialize the V map")

    gc = sub.add_parser("gauge-circle", help="physical space of the lattice gauge circle")
    gc.add_argument("--group", help="finite group preset, e.g. S3 (omit for U(1))")
    gc.add_argument("--links", type=int, required=True)
    gc.add_argument("--based", action="store_true")
    gc.add_argument("--u1-cutoff", type=int, help="Fourier cutoff K (selects the U(1) model)")
    gc.add_argument("--out", required=True)

    th = sub.add_parser("theta", help="theta-sector spectra on the discrete circle")
    th.add_argument("--sites-n", type=int, required=True, help="modes per sector (N)")
    th.add_argument("--gauge-m", type=int, required=True, help="gauge group order (M)")
    th.add_argument("--sector", type=int, help="single sector label k (default: all)")
    th.add_argument("--out", required=True)

    an = sub.add_parser("anomaly", help="projective-multiplier anomaly decision")
    an.add_argument("--spec", required=True)
    an.add_argument("--out", help="optional JSON result path")

    va = sub.add_parser("verify-all", help="run the acceptance suite")
    va.add_argument("--out", help="directory for artifacts and results.json")
    va.add_argument("--seed", type=int, default=0)
    va.add_argument("--tol", type=float, default=1.0, help="global tolerance scale factor")

    return p


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [ser.format_float(v) if isinstance(v, float) else v for v in row]
            )


def _parse_poly(text, flag):
    try:
        return sphere_mod.parse_polynomial(text)
    except InvariantViolation as exc:
        raise SpecFileError(f"bad {flag} polynomial: {exc}") from exc


def cmd_sphere_check(args) -> int:
    f = _parse_poly(args.f, "--f")
    g = _parse_poly(args.g, "--g")
    try:
        levels = [int(x) for x in args.two_j.split(",") if x.strip()]
    except ValueError as exc:
        raise SpecFileError(f"bad --two-j list: {exc}") from exc
    if not levels:
        raise SpecFileError("--two-j list is empty")
    rows = sphere_mod.strict_quantization_report(f, g, levels)
    _write_csv(
        args.out,
        ["two_j", "hbar", "dirac_defect", "jordan_defect", "norm_defect"],
        [
            [r["two_j"], r["hbar"], r["dirac_defect"], r["jordan_defect"], r["norm_defect"]]
            for r in rows
        ],
    )
    print(f"wrote {args.out} ({len(rows)} levels)")
    return 0


def cmd_reduce(args) -> int:
    payload = ser.load_json_file(args.spec)
    j, j_rho = ser.load_reduction_problem(payload)
    red = reduce_op(j, j_rho)
    ser.dump_json(
        {
            "quotient_dim": red.quotient_dim,
            "fiber_dim": red.fiber.dim,
            "radical_dim": red.radical.shape[1],
            "radical_basis": [ser.vector_to_json(v) for v in red.radical_basis.T],
            "reduced_omega": [ser.vector_to_json(row) for row in red.reduced_omega],
        },
        args.out,
    )
    print(f"wrote {args.out} (quotient_dim={red.quotient_dim})")
    return 0


def cmd_induce(args) -> int:
    payload = ser.load_json_file(args.spec)
    group, u, rho = ser.load_induction_case(payload)
    weak_ops = []
    if args.observables:
        obs_payload = ser.load_json_file(args.observables)
        entries = obs_payload.get("operators", [])
        for entry in entries:
            weak_ops.append(ser.matrix_from_json(entry))
    result = group_average_induction(u, rho, weak_ops=weak_ops)
    out = {
        "group": group.label,
        "u_dim": u.dim,
        "rho_dim": rho.dim,
        "induced_dim": result.induced_dim,
        "kept_spectrum": [float(v) for v in result.kept_eigenvalues],
        "operator_residuals": [float(r) for r in result.operator_residuals],
        "induced_operators": [ser.matrix_to_json(m) for m in result.induced_operators],
    }
    if args.include_v:
        out["v_map"] = ser.matrix_to_json(result.vmap)
    ser.dump_json(out, args.out)
    print(f"wrote {args.out} (induced_dim={result.induced_dim})")
    return 0


def cmd_gauge_circle(args) -> int:
    if args.u1_cutoff is not None:
        if args.group:
            raise SpecFileError("--group and --u1-cutoff are mutually exclusive")
        model = gauge_mod.LatticeGaugeModel(None, args.links, args.based, args.u1_cutoff)
        group = None
    else:
        if not args.group:
            raise SpecFileError("need --group NAME or --u1-cutoff K")
        try:
            from .groups import group_preset

            group = group_preset(args.group)
        except InvariantViolation as exc:
            raise SpecFileError(str(exc)) from exc
        model = gauge_mod.LatticeGaugeModel(group, args.links, args.based)
    phys = gauge_mod.physical_space(model)
    observables = {}
    electric = gauge_mod.induced_observable(model, "electric", phys=phys)
    observables["electric"] = {
        "spectrum_induced": [float(v) for v in electric["spectrum_induced"]],
        "spectrum_reference": [float(v) for v in electric["spectrum_reference"]],
        "matrix_gap": float(electric["matrix_gap"]),
    }
    if group is None:
        wil = gauge_mod.induced_observable(model, "wilson", 1, phys=phys)
        observables["wilson_m1"] = {
            "spectrum_induced": [float(v) for v in wil["spectrum_induced"]],
            "spectrum_reference": [float(v) for v in wil["spectrum_reference"]],
            "matrix_gap": float(wil["matrix_gap"]),
        }
    else:
        for rep in irrep_catalog(group):
            wil = gauge_mod.induced_observable(
                model, "wilson", rep.character().real, phys=phys
            )
            observables[f"wilson_{rep.name}"] = {
                "spectrum_induced": [float(v) for v in wil["spectrum_induced"]],
                "spectrum_reference": [float(v) for v in wil["spectrum_reference"]],
                "matrix_gap": float(wil["matrix_gap"]),
            }
    ser.dump_json(
        {
            "group": args.group if group is not None else f"U(1),K={args.u1_cutoff}",
            "links": args.links,
            "based": bool(args.based),
            "physical_dim": phys.dim,
            "reference_dim": len(phys.reference_labels),
            "intertwiner_residual": phys.unitarity_residual,
            "observables": observables,
        },
        args.out,
    )
    print(f"wrote {args.out} (physical_dim={phys.dim})")
    return 0


def cmd_theta(args) -> int:
    n, m = args.sites_n, args.gauge_m
    sectors = [args.sector] if args.sector is not None else list(range(m))
    rows = []
    for k in sectors:
        sec = theta_mod.theta_sector(theta_mod.ThetaSectorProblem(n, m, k))
        rows.append([k] + [float(v) for v in sec.spectrum])
    _write_csv(
        args.out,
        ["sector"] + [f"eig_{i}" for i in range(n)],
        rows,
    )
    print(f"wrote {args.out} ({len(rows)} sectors x {n} eigenvalues)")
    return 0


def cmd_anomaly(args) -> int:
    payload = ser.load_json_file(args.spec)
    group, mats = ser.load_projective_case(payload)
    rep = theta_mod.multiplier_of(group, mats)
    verdict, cert = theta_mod.is_anomalous(rep)
    probe = theta_mod.anomalous_induction_probe(rep, np.ones(group.order))
    cert_out = {"kind": cert["kind"]}
    if "ratio" in cert:
        cert_out["pair"] = list(cert["pair"])
        cert_out["ratio"] = [cert["ratio"].real, cert["ratio"].imag]
    if "beta" in cert:
        cert_out["beta"] = [[v.real, v.imag] for v in cert["beta"]]
    result = {
        "anomalous": bool(verdict),
        "certificate": cert_out,
        "projector_defect": float(probe),
    }
    print(f"anomalous: {verdict} ({cert['kind']}); ||P^2-P|| = {ser.format_float(probe)}")
    if args.out:
        ser.dump_json(result, args.out)
        print(f"wrote {args.out}")
    return 0


def cmd_verify_all(args) -> int:
    from .acceptance import run_all

    results = run_all(out_dir=args.out, seed=args.seed, tol_scale=args.tol)
    width = max(len(r.name) for r in results)
    all_ok = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.cid:>3}  {r.name:<{width}}  ({r.runtime_s:.2f} s)")
        all_ok = all_ok and r.passed
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    if not all_ok:
        failing = ", ".join(r.cid for r in results if not r.passed)
        print(f"validation failure in: {failing}", file=sys.stderr)
        return 2
    return 0


_DISPATCH = {
    "sphere-check": cmd_sphere_check,
    "reduce": cmd_reduce,
    "induce": cmd_induce,
    "gauge-circle": cmd_gauge_circle,
    "theta": cmd_theta,
    "anomaly": cmd_anomaly,
    "verify-all": cmd_verify_all,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return _DISPATCH[args.command](args)
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
