#!/usr/bin/env python3
"""DIMACS-in / exit-code-out wrapper around a PySAT backend.

Usage: pysat_solve.py [--solver NAME] CNF [PROOF]

Prints "s SATISFIABLE" plus "v" lines and exits 10, or prints
"s UNSATISFIABLE" and exits 20. With PROOF, the backend's DRUP/DRAT proof
is written there (backends that cannot emit proofs exit with an error).
"""
import argparse
import sys

from pysat.formula import CNF
from pysat.solvers import Solver, SolverNames


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--solver", default="cadical153")
    ap.add_argument("--version", action="store_true")
    ap.add_argument("cnf", nargs="?")
    ap.add_argument("proof", nargs="?")
    args = ap.parse_args()
    if args.version:
        import pysat
        print(f"pysat-{pysat.__version__} {args.solver}")
        return 0
    if not args.cnf:
        ap.error("CNF path required")

    formula = CNF(from_file=args.cnf)
    with Solver(name=args.solver, bootstrap_with=formula.clauses,
                with_proof=bool(args.proof)) as s:
        if s.solve():
            print("s SATISFIABLE")
            model = s.get_model() or []
            for i in range(0, len(model), 20):
                print("v " + " ".join(map(str, model[i:i + 20])))
            print("v 0")
            sys.stdout.flush()
            return 10
        print("s UNSATISFIABLE")
        if args.proof:
            with open(args.proof, "w") as f:
                for line in s.get_proof() or []:
                    f.write(line + "\n")
        sys.stdout.flush()
        return 20


if __name__ == "__main__":
    sys.exit(main())
