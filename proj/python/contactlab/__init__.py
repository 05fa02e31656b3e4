"""Exact-arithmetic toolkit for contact curves in CP^3 built from plane curves.

The heavy lifting happens in the C++ extension; this wrapper turns the stable
JSON interfaces into dictionaries and raises ValueError / RuntimeError on
input and mathematical failures respectively.
"""

import json

from contactlab._core import (
    InputError,
    MathError,
    canonical_poly,
    contact_residual_zero,
    dual_poly,
    euler_identity,
    image_degree,
    is_contact_line,
    pfaffian,
    plucker,
    run_cli,
)

__all__ = [
    "InputError",
    "MathError",
    "canonical_poly",
    "catalog",
    "contact_residual_zero",
    "dual",
    "dual_poly",
    "euler_check",
    "euler_identity",
    "image_degree",
    "is_contact_line",
    "lift",
    "lines_experiment",
    "pfaffian",
    "plucker",
    "report",
    "run_cli",
    "verify",
]


def _run_json(args):
    code, out, err = run_cli(list(args) + ["--json"])
    if code == 2:
        raise ValueError(err.strip() or "input error")
    if not out:
        raise RuntimeError(err.strip() or "command produced no output")
    payload = json.loads(out)
    payload["exit_code"] = code
    return payload


def report(curve, seed=0):
    """Degree, genus, goodness and contact-residual report for a plane curve."""
    return _run_json(["report", "--curve", curve, "--seed", str(seed)])


def dual(curve):
    """Singularity inventory, Plucker numbers and the dual curve."""
    return _run_json(["dual", "--curve", curve])


def verify(curve):
    """Exact contact verification of the Bryant image."""
    return _run_json(["verify", "--curve", curve])


def lift(curve, point):
    """Horizontal lift of a smooth curve point and its Bryant image."""
    return _run_json(["lift", "--curve", curve, "--point", point])


def lines_experiment(matrix, count=1000, seed=0, jobs=1):
    """Contact-line test vs Plucker hyperplane section on random lines."""
    return _run_json([
        "lines", "--matrix", matrix, "--count", str(count),
        "--seed", str(seed), "--jobs", str(jobs),
    ])


def euler_check(name=None, catalog_file=None):
    """Euler/Chern number identity over the threefold catalog."""
    args = ["euler"]
    if name is not None:
        args += ["--name", name]
    if catalog_file is not None:
        args += ["--catalog", catalog_file]
    return _run_json(args)


def catalog():
    """Built-in curves and threefold invariants."""
    return _run_json(["catalog"])
