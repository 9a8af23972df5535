"""Command-line interface: ``su2particle <command> [options]``.

Exit status is 0 when every check in the report passes, 1 when any fails and
2 on usage errors.  Reports are deterministic for a fixed ``--seed``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .audit import convention_audit
from .core import (DEFAULT_TOL, AlgebraElement, Matrix2, basis_element, commutator, exp_su2,
                   levi_civita, normalized_trace)
from .coset import (constraint_filter, gauge_field, harmonic_matches, reduced_trajectory,
                    sphere_relation)
from .dynamics import (Method, conservation_report, finite_difference_velocity, integrate,
                       poisson_structure_check, trajectory_rows, trajectory_to_json, COLUMNS)
from .haar import (gram_matrix, hermiticity_check, inner_product, integrate as haar_integrate,
                   quadrature_oracle)
from .operators import (mixed_commutator_identities, quantum_L, quantum_R,
                        su2_commutator_identities)
from .rational import ComplexRational, format_fraction
from .ring import GroupPolynomial, monomial_basis
from .spectra import (SpinLabel, build_eigenfunction, multiplet_independence_check,
                      parse_half_integer, seed_function, spectrum_table)


class UsageError(Exception):
    pass


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _vector(text: str) -> AlgebraElement:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"expected three comma-separated numbers, got {text!r}") from exc
    if len(vals) != 3 or not all(np.isfinite(vals)):
        raise UsageError(f"expected three finite comma-separated numbers, got {text!r}")
    return AlgebraElement(tuple(vals))


def _half(text: str, name: str) -> Fraction:
    try:
        return Fraction(parse_half_integer(text), 2)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# -- checks -----------------------------------------------------------------


def check_algebra(args) -> dict:
    items = []
    ok_trace = all(normalized_trace(basis_element(n) @ basis_element(m)) == (1 if n == m else 0)
                   for n in (1, 2, 3) for m in (1, 2, 3))
    items.append({"identity": "<T_n T_m> = delta_nm", "status": _status(ok_trace)})
    ok_comm = all(
        commutator(basis_element(n), basis_element(m))
        == basis_element(6 - n - m).scale(ComplexRational(2 * levi_civita(n, m, 6 - n - m)))
        for n, m in ((1, 2), (2, 3), (3, 1)))
    items.append({"identity": "[T_n,T_m] = 2 eps_nmk T_k", "status": _status(ok_comm)})
    minus_one = Matrix2.identity().scale(-1)
    ok_sq = all(basis_element(n) @ basis_element(n) == minus_one for n in (1, 2, 3))
    items.append({"identity": "T_n^2 = -I", "status": _status(ok_sq)})
    reports = (su2_commutator_identities("R", args.degree) + su2_commutator_identities("L", args.degree)
               + mixed_commutator_identities(args.degree))
    items += [r.to_json() for r in reports]
    return {"suite": "algebra", "max_degree": args.degree, "items": items,
            "status": _status(all(i["status"] == "pass" for i in items))}


def check_ladders(args) -> dict:
    audit = convention_audit(args.degree)
    return {"suite": "ladders", "max_degree": args.degree, "audit": audit.to_json(),
            "status": _status(audit.passed)}


def check_hermiticity(args) -> dict:
    samples = [GroupPolynomial.monomial(m) for m in monomial_basis(args.degree)]
    items = [hermiticity_check(op, samples).to_json()
             for op in [quantum_R(n) for n in (1, 2, 3)] + [quantum_L(m) for m in (1, 2, 3)]]
    seed = seed_function()
    norm = inner_product(seed, seed)
    items.append({"identity": "<seed|seed> = 2", "value": format_fraction(norm.re),
                  "status": _status(norm == 2)})
    gram = gram_matrix(args.jmax)
    items.append({"identity": f"Gram matrix j <= {args.jmax} diagonal, positive",
                  "size": len(gram.labels), "status": _status(gram.passed)})
    return {"suite": "hermiticity", "max_degree": args.degree, "items": items,
            "status": _status(all(i["status"] == "pass" for i in items))}


def check_poisson(args) -> dict:
    rng = np.random.default_rng(args.seed)
    points = []
    ok = True
    for _ in range(args.points):
        r = AlgebraElement(tuple(rng.normal(size=3)))
        g = exp_su2(AlgebraElement(tuple(rng.normal(size=3))))
        rep = poisson_structure_check(r, g, tol=args.tolerance)
        fd = finite_difference_velocity(g, r, float(rng.uniform(0, 5)))
        ok &= rep.passed and fd <= 1e-7
        points.append({**rep.to_json(), "finite_difference_gap": fd,
                       "finite_difference_status": _status(fd <= 1e-7)})
    return {"suite": "poisson", "points": points, "status": _status(ok)}


CHECKS = {"algebra": check_algebra, "ladders": check_ladders,
          "hermiticity": check_hermiticity, "poisson": check_poisson}


def cmd_check(args) -> dict:
    if args.degree < 1:
        raise UsageError("--degree must be at least 1")
    if args.kind == "all":
        suites = [CHECKS[k](args) for k in ("algebra", "ladders", "hermiticity", "poisson")]
        return {"suite": "all", "suites": suites,
                "status": _status(all(s["status"] == "pass" for s in suites))}
    return CHECKS[args.kind](args)


# -- computations -------------------------------------------------------------


def cmd_spectrum(args) -> dict:
    rows = spectrum_table(args.jmax)
    ranks = [multiplet_independence_check(Fraction(k, 2)).to_json()
             for k in range(parse_half_integer(args.jmax) + 1)]
    return {"j_max": format_fraction(args.jmax), "rows": [r.to_json() for r in rows],
            "independence": ranks,
            "status": _status(all(r.verified for r in rows) and all(x["status"] == "pass" for x in ranks))}


def cmd_eigenfunction(args) -> dict:
    try:
        label = SpinLabel.of(args.j, args.l, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ef = build_eigenfunction(label, a=args.a, b=args.b)
    return {**ef.to_json(), "verified": True, "status": "pass"}


def cmd_gram(args) -> dict:
    gram = gram_matrix(args.jmax)
    return {**gram.to_json(), "diagonal_positive": gram.diagonal_positive,
            "off_diagonal_zero": gram.off_diagonal_zero, "status": _status(gram.passed)}


def _check_steps(args) -> None:
    if args.steps < 1:
        raise UsageError("--steps must be a positive integer")
    if not args.t > 0:
        raise UsageError("--t must be positive")


def cmd_geodesic(args) -> dict:
    _check_steps(args)
    g0 = exp_su2(_vector(args.g0))
    r = _vector(args.R)
    traj = integrate(g0, r, args.t / args.steps, args.steps, args.method)
    drift = conservation_report(traj)
    final = traj.gs[-1]
    return {"trajectory": trajectory_to_json(traj), "conservation": drift.to_json(),
            "final_g": [[[float(z.real), float(z.imag)] for z in row] for row in final],
            "status": "pass", "_traj": traj}


def cmd_coset(args) -> dict:
    if args.R is not None:
        _check_steps(args)
        g0 = exp_su2(_vector(args.g0))
        traj = integrate(g0, _vector(args.R), args.t / args.steps, args.steps, args.method)
        red = reduced_trajectory(traj)
        b = gauge_field(traj)
        return {"reduced": red.to_json(), "gauge_field": [float(x) for x in b],
                "status": _status(red.sphere_residual <= 1e-12), "_reduced": red}
    jmax = args.jmax
    relation_ok = sphere_relation() == GroupPolynomial.constant(1)
    filt = constraint_filter(jmax)
    matches = harmonic_matches(int(jmax))
    ok = relation_ok and filt.status == "pass" and all(m.status == "proportional" for m in matches)
    return {"sphere_relation": _status(relation_ok), "constraint": filt.to_json(),
            "matches": [m.to_json() for m in matches], "status": _status(ok)}


def cmd_quadrature(args) -> dict:
    try:
        exps = tuple(int(x) for x in args.monomial.split(","))
    except ValueError as exc:
        raise UsageError(f"--monomial expects a,b,c,d integers, got {args.monomial!r}") from exc
    if len(exps) != 4 or min(exps) < 0:
        raise UsageError("--monomial expects four non-negative integers")
    if args.samples < 1000:
        raise UsageError("--samples must be at least 1000")
    p = GroupPolynomial.monomial(exps)
    exact = haar_integrate(p)
    q = quadrature_oracle(p, args.samples, args.seed)
    gap = abs(q.estimate - complex(exact))
    within = gap <= 4 * q.standard_error or gap == 0.0
    return {"monomial": list(exps), "exact": exact.to_json(), **q.to_json(),
            "gap": gap, "status": _status(within)}


COMMANDS = {"check": cmd_check, "spectrum": cmd_spectrum, "eigenfunction": cmd_eigenfunction,
            "gram": cmd_gram, "geodesic": cmd_geodesic, "coset": cmd_coset,
            "quadrature": cmd_quadrature}


# -- output -------------------------------------------------------------------


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if x is None else (repr(x) if isinstance(x, float) else x) for x in row])
    return buf.getvalue()


def to_csv(command: str, report: dict) -> str:
    if command == "spectrum":
        return _csv(([r["j"], r["l"], r["r"], r["E"], r["degree"], r["verified"]] for r in report["rows"]),
                    ["j", "l", "r", "E", "degree", "verified"])
    if command == "geodesic":
        text = _csv(trajectory_rows(report["_traj"]), COLUMNS)
        return text + "".join(f"# {k}={v!r}\n" for k, v in report["conservation"].items())
    if command == "gram":
        names = [f"{x['j']}|{x['l']}|{x['r']}" for x in report["labels"]]
        return _csv(([n, *row] for n, row in zip(names, report["matrix"])), ["label", *names])
    if command == "eigenfunction":
        return _csv(([*t["m"], t["re"], t["im"]] for t in report["polynomial"]["terms"]),
                    ["a", "b", "c", "d", "re", "im"])
    if command == "coset" and "reduced" in report:
        return _csv(report["reduced"]["rows"], report["reduced"]["columns"])
    if command == "coset":
        return _csv(([m["j"], m["r"], m["m"], m["constant"]["re"] if m["constant"] else "",
                      m["constant"]["im"] if m["constant"] else "", m["status"]] for m in report["matches"]),
                    ["j", "r", "m", "constant_re", "constant_im", "status"])
    if command == "quadrature":
        return _csv([[",".join(map(str, report["monomial"])), report["exact"]["re"], report["exact"]["im"],
                      report["estimate"]["re"], report["estimate"]["im"], report["standard_error"],
                      report["status"]]],
                    ["monomial", "exact_re", "exact_im", "estimate_re", "estimate_im",
                     "standard_error", "status"])
    # check suites: one row per item
    rows = []

    def walk(rep, prefix):
        for item in rep.get("items", []):
            rows.append([prefix, item.get("identity") or item.get("operator"), item["status"]])
        if "audit" in rep:
            for item in rep["audit"]["ladder_identities"] + rep["audit"]["hamiltonian_ladder_forms"]:
                rows.append([prefix, item["identity"], item["status"]])
            for item in rep["audit"]["adjoint_pairings"]:
                rows.append([prefix, item["relation"], item["status"]])
        for k, p in enumerate(rep.get("points", [])):
            rows.append([prefix, f"phase point {k}", p["status"]])
        for sub in rep.get("suites", []):
            walk(sub, sub["suite"])

    walk(report, report.get("suite", command))
    return _csv(rows, ["suite", "item", "status"])


def render(command: str, report: dict, fmt: str) -> str:
    if fmt == "csv":
        return to_csv(command, report)
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(public, indent=2) + "\n"


# -- parser ---------------------------------------------------------------------


_NEGATIVE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "csv"), default=d("json"),
                        help="report format (default json)")
    parser.add_argument("--output", default=d(None), help="write the report to this file")
    parser.add_argument("--tolerance", type=float, default=d(DEFAULT_TOL),
                        help="floating tolerance for numeric checks (default 1e-12)")
    parser.add_argument("--seed", type=int, default=d(0), help="random seed (default 0)")


def _trajectory_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--g0", default="0,0,0", help="initial point as exponential coordinates a1,a2,a3")
    p.add_argument("--R", default=None if not required else "0,0,1", help="body velocity R1,R2,R3")
    p.add_argument("--t", type=float, default=1.0, help="final time")
    p.add_argument("--steps", type=int, default=1000, help="number of steps")
    p.add_argument("--method", choices=[m.value for m in Method], default="exact")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="su2particle", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        # let "-1/2" through as a value rather than an option
        p._negative_number_matcher = _NEGATIVE
        _global_flags(p, suppress=True)
        return p

    p = add("check", "run a verification suite")
    p.add_argument("kind", choices=("algebra", "poisson", "hermiticity", "ladders", "all"))
    p.add_argument("--degree", type=int, default=4, help="monomial degree for operator identities")
    p.add_argument("--jmax", type=lambda s: _half(s, "jmax"), default=Fraction(3, 2),
                   help="largest j for the Gram check (default 3/2)")
    p.add_argument("--points", type=int, default=20, help="random phase points for the Poisson suite")

    p = add("spectrum", "table of verified eigenfunctions for j <= jmax")
    p.add_argument("--jmax", type=lambda s: _half(s, "jmax"), default=Fraction(3, 2))

    p = add("eigenfunction", "one verified eigenfunction psi^j_lr")
    for name in ("j", "l", "r"):
        p.add_argument(f"--{name}", type=lambda s, n=name: _half(s, n), required=True)
    p.add_argument("--a", type=int, default=3, choices=(1, 2, 3))
    p.add_argument("--b", type=int, default=3, choices=(1, 2, 3))

    p = add("gram", "exact Gram matrix of all eigenfunctions with j <= jmax")
    p.add_argument("--jmax", type=lambda s: _half(s, "jmax"), default=Fraction(1, 2))

    p = add("geodesic", "integrate the geodesic flow and report conservation")
    _trajectory_flags(p, required=True)

    p = add("coset", "constraint filter and harmonic matching, or the reduced x(t) series with --R")
    p.add_argument("--jmax", type=lambda s: _half(s, "jmax"), default=Fraction(2))
    _trajectory_flags(p, required=False)

    p = add("quadrature", "Monte-Carlo Haar integral of a monomial against the exact value")
    p.add_argument("--monomial", default="1,0,0,1", help="exponents a,b,c,d of u11^a u12^b u21^c u22^d")
    p.add_argument("--samples", type=int, default=100_000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 after --help/--version, 2 on bad flags
        return int(exc.code or 0)
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"su2particle {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(args.command, report, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.get("status") == "pass" else 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
