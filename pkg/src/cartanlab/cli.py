"""Command-line front end.

Subcommands
-----------
class      Cartan class of a covector on an algebra (file or catalog id).
check      batch property suites: jacobi | nilpotent-parity | center |
           quadra | extension-roundtrip.
contract   diagonal contraction by an exponent vector, optionally after a
           change of basis.
sl         the polynomial contact data on the even special linear group:
           top-form identity, Reeb pairings, rotation invariance, singular
           equations at a point.

Catalog ids use the grammar  name[:key=val,...]  with arrays as [v1,v2],
e.g.  heisenberg:p=2,  frobenius:p=3,a=[1,-2],  mu_c9:a=[1,2,3],
dim5:variant=diag_ii_a,a=1,b=0,c=1,d=1.  Rationals are exact strings; no
floats are parsed or printed anywhere.

Exit codes: 0 pass, 1 I/O or parse error, 2 precondition violation,
3 property failure.  Reports are byte-deterministic for fixed inputs and
seed; CARTANLAB_SEED overrides the default seed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import catalog as cat
from .algebra_io import (
    AlgebraFileError,
    algebra_to_dict,
    canonical_json,
    dump_algebra,
    load_algebra,
    load_matrix,
    parse_covector,
    parse_exponents,
)
from .contraction import ContractionSpec, contract, frobenius_model_parameters
from .deformation import DegenerateFormError, NotCocycleError
from .forms import DualForm, FormError, cartan_class
from .liealg import change_basis
from .randgen import DEFAULT_SEED
from .slgroup import (
    OrthogonalityError,
    evaluate_singular_equations,
    reeb_identities,
    sl_contact_identity,
    so_invariance_check,
)
from .structure import PreconditionError
from .suites import SUITES, run_suite

EXIT_PASS = 0
EXIT_IO = 1
EXIT_PRECONDITION = 2
EXIT_PROPERTY = 3


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _seed(args) -> int:
    seed = getattr(args, "seed", None)
    if seed is not None:
        return seed
    env = os.environ.get("CARTANLAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _Failure(EXIT_PRECONDITION, f"CARTANLAB_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _load_subject(args):
    """(algebra, catalog entry or None, digest source string)."""
    if getattr(args, "catalog", None):
        try:
            entry = cat.resolve(
                args.catalog,
                allow_nonjacobi=getattr(args, "allow_nonjacobi", False),
            )
        except cat.NonJacobiDisplayError as exc:
            raise _Failure(
                EXIT_PRECONDITION, f"{exc} (rerun with --allow-nonjacobi to study it anyway)"
            )
        except (KeyError, ValueError) as exc:
            raise _Failure(EXIT_IO, f"cannot resolve catalog id {args.catalog!r}: {exc}")
        return entry.algebra, entry, args.catalog + "\n" + dump_algebra(entry.algebra)
    if getattr(args, "algebra", None):
        try:
            g = load_algebra(args.algebra)
        except (OSError, AlgebraFileError) as exc:
            raise _Failure(EXIT_IO, f"cannot load algebra file: {exc}")
        return g, None, dump_algebra(g)
    raise _Failure(EXIT_IO, "need --algebra FILE or --catalog ID")


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


def _emit(args, report: dict) -> None:
    text = canonical_json(report)
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_class(args):
    g, entry, source = _load_subject(args)
    coeffs = parse_covector(args.form)
    if len(coeffs) != g.dim:
        raise _Failure(
            EXIT_PRECONDITION,
            f"form has {len(coeffs)} coefficients but the algebra has dimension {g.dim}",
        )
    try:
        w = DualForm.covector(g, coeffs)
        info = cartan_class(w)
    except FormError as exc:
        raise _Failure(EXIT_PRECONDITION, str(exc))
    report = {
        "command": "class",
        "argv": getattr(args, "argv_echo", []),
        "inputs_digest": _digest(source, args.form),
        "seed": _seed(args),
        "results": {
            "class": info.value,
            "branch": info.branch,
            "wedge_power": info.power,
            "characteristic_space": {
                "dimension": info.characteristic_space.dim,
                "basis": [[str(x) for x in row] for row in info.characteristic_space.rows],
            },
        },
        "suite": {"pass": 1, "fail": 0},
    }
    _emit(args, report)
    return EXIT_PASS


def cmd_check(args):
    if args.suite not in SUITES:
        raise _Failure(EXIT_PRECONDITION, f"unknown suite {args.suite!r}; choose from {sorted(SUITES)}")
    g, entry, source = _load_subject(args)
    seed = _seed(args)
    try:
        ok, results = run_suite(args.suite, g, entry=entry, seed=seed)
    except PreconditionError as exc:
        raise _Failure(EXIT_PRECONDITION, str(exc))
    except (NotCocycleError, DegenerateFormError) as exc:
        raise _Failure(EXIT_PRECONDITION, str(exc))
    report = {
        "command": "check",
        "argv": getattr(args, "argv_echo", []),
        "inputs_digest": _digest(source, args.suite),
        "seed": seed,
        "results": {args.suite: results},
        "suite": {"pass": int(ok), "fail": int(not ok)},
    }
    _emit(args, report)
    return EXIT_PASS if ok else EXIT_PROPERTY


def cmd_contract(args):
    g, entry, source = _load_subject(args)
    exponents = parse_exponents(args.exponents)
    if len(exponents) != g.dim:
        raise _Failure(
            EXIT_PRECONDITION,
            f"{len(exponents)} exponents for dimension {g.dim}",
        )
    basis_txt = ""
    if args.basis:
        try:
            p_rows = load_matrix(args.basis)
        except (OSError, AlgebraFileError) as exc:
            raise _Failure(EXIT_IO, f"cannot load basis matrix: {exc}")
        basis_txt = json.dumps([[str(x) for x in row] for row in p_rows])
        try:
            g = change_basis(g, p_rows)
        except ValueError as exc:
            raise _Failure(EXIT_PRECONDITION, str(exc))
    try:
        result = contract(ContractionSpec(g, exponents))
    except (PreconditionError, ValueError) as exc:
        raise _Failure(EXIT_PRECONDITION, str(exc))
    results = {"converges": result.converges}
    if result.converges:
        results["limit"] = algebra_to_dict(result.limit)
        params = frobenius_model_parameters(result.limit)
        results["model_family"] = (
            None if params is None else [str(x) for x in params]
        )
    else:
        i, j, k, e = result.witness
        results["witness"] = {"triple": [i, j, k], "exponent": e}
    report = {
        "command": "contract",
        "argv": getattr(args, "argv_echo", []),
        "inputs_digest": _digest(source, args.exponents, basis_txt),
        "seed": _seed(args),
        "results": results,
        # divergence is a legitimate outcome, not a failed property
        "suite": {"pass": 1, "fail": 0},
    }
    _emit(args, report)
    return EXIT_PASS


def cmd_sl(args):
    n = args.n
    if n < 1:
        raise _Failure(EXIT_PRECONDITION, "--n must be >= 1")
    results = {}
    ok = True
    digest_extra = ""
    if args.identity:
        res = sl_contact_identity(n)
        results["contact_identity"] = {
            "ok": res.ok,
            "q": res.q,
            "constant": None if res.constant is None else str(res.constant),
        }
        ok = res.ok
    elif args.reeb:
        pair_defect, scale = reeb_identities(n)
        results["reeb"] = {
            "omega_of_reeb_equals_det": pair_defect.is_zero,
            "contraction_multiple_of_ddet": None if scale is None else str(scale),
        }
        ok = pair_defect.is_zero and scale is not None
    elif args.invariance:
        try:
            m = load_matrix(args.invariance)
        except (OSError, AlgebraFileError) as exc:
            raise _Failure(EXIT_IO, f"cannot load matrix: {exc}")
        digest_extra = json.dumps([[str(x) for x in row] for row in m])
        try:
            inv = so_invariance_check(n, m)
        except OrthogonalityError as exc:
            raise _Failure(EXIT_PRECONDITION, str(exc))
        results["invariance"] = {"invariant": inv}
        ok = inv
    elif args.singular:
        try:
            point = load_matrix(args.singular)
        except (OSError, AlgebraFileError) as exc:
            raise _Failure(EXIT_IO, f"cannot load point: {exc}")
        digest_extra = json.dumps([[str(x) for x in row] for row in point])
        try:
            values = evaluate_singular_equations(n, point)
        except ValueError as exc:
            raise _Failure(EXIT_PRECONDITION, str(exc))
        nonzero = {f"{i},{j}": str(v) for (i, j), v in sorted(values.items()) if v}
        results["singular"] = {
            "singular_point": not nonzero,
            "nonzero_pairings": nonzero,
        }
        ok = True
    else:
        raise _Failure(EXIT_PRECONDITION, "choose one of --identity, --reeb, --invariance, --singular")
    report = {
        "command": "sl",
        "argv": getattr(args, "argv_echo", []),
        "inputs_digest": _digest(str(n), digest_extra),
        "seed": _seed(args),
        "results": results,
        "suite": {"pass": int(ok), "fail": int(not ok)},
    }
    _emit(args, report)
    return EXIT_PASS if ok else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS defaults let these flags sit before or after the subcommand
    # without the subparser namespace clobbering an already-parsed value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS,
        help="PRNG seed (default: CARTANLAB_SEED or 1729)",
    )
    common.add_argument(
        "--out", default=argparse.SUPPRESS, help="also write the JSON report to this file"
    )
    common.add_argument(
        "--allow-nonjacobi",
        action="store_true",
        default=argparse.SUPPRESS,
        help="resolve catalog tables even when they violate Jacobi (quarantined displays)",
    )
    parser = argparse.ArgumentParser(
        prog="cartanlab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser("class", help="Cartan class of a covector", parents=[common])
    p_class.add_argument("--algebra", help="algebra JSON file")
    p_class.add_argument("--catalog", help="catalog id, e.g. heisenberg:p=2")
    p_class.add_argument("--form", required=True, help='covector "c1,...,cn" (exact rationals)')
    p_class.set_defaults(func=cmd_class)

    p_check = sub.add_parser("check", help="run a property suite", parents=[common])
    p_check.add_argument("--algebra", help="algebra JSON file")
    p_check.add_argument("--catalog", help="catalog id")
    p_check.add_argument("--suite", required=True, help="|".join(SUITES))
    p_check.set_defaults(func=cmd_check)

    p_contract = sub.add_parser("contract", help="diagonal contraction", parents=[common])
    p_contract.add_argument("--algebra", help="algebra JSON file")
    p_contract.add_argument("--catalog", help="catalog id")
    p_contract.add_argument("--exponents", required=True, help='"e1,...,en" integers')
    p_contract.add_argument("--basis", help="change-of-basis matrix JSON file applied first")
    p_contract.set_defaults(func=cmd_contract)

    p_sl = sub.add_parser("sl", help="polynomial contact data on the even special linear group", parents=[common])
    p_sl.add_argument("--n", type=int, required=True)
    p_sl.add_argument("--identity", action="store_true", help="top-form identity and its constant")
    p_sl.add_argument("--reeb", action="store_true", help="exact Reeb-field pairings")
    p_sl.add_argument("--invariance", help="rotation matrix JSON file for the pullback check")
    p_sl.add_argument("--singular", help="matrix point JSON file for the singular equations")
    p_sl.set_defaults(func=cmd_sl)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(argv)
    args.argv_echo = list(argv)
    try:
        return args.func(args)
    except _Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
