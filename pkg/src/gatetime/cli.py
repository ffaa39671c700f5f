"""Command-line front end.

Matrices are JSON objects ``{"dim": d, "matrix": [[[re, im], ...], ...]}``;
protocols are ``{"segments": [{"t": 0.1, "left": M, "right": M}, ...]}``
with ``left``/``right`` optional (identity) and M either a bare 2x2 array of
[re, im] pairs or a matrix object. Results go to stdout as one JSON
document; diagnostics go to stderr.

Exit codes: 0 ok, 1 invalid input, 2 non-entangling/infeasible, 3 bound violated.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from ._config import DEFAULT_TOL, Tolerances
from .bipartite import canonical_gate, nonlocal_content
from .exceptions import GateTimeError, Infeasible, InvalidInput, NotEntangling
from .hamcanon import ham_canonical_params, is_entangling
from .majorize import min_time_gate_ham
from .nbound import nqubit_bound
from .paulis import XX
from .protosim import Protocol, Segment, random_hamiltonian, random_protocol, verify_protocol

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_VIOLATION = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _num(x: float) -> float:
    x = float(x)
    if abs(x) < 1e-12:
        return 0.0
    return float(f"{x:.12g}")


def _entry(value) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, (int, float)) for v in value):
        return complex(value[0], value[1])
    raise InvalidInput(f"matrix entry {value!r} is not a number or [re, im] pair")


def parse_matrix(obj, dim: int | None = None) -> np.ndarray:
    """Parse a matrix object (or a bare nested array) into a complex array."""
    if isinstance(obj, dict):
        if "matrix" not in obj:
            raise InvalidInput("matrix object lacks a 'matrix' field")
        dim = obj.get("dim", dim)
        rows = obj["matrix"]
    else:
        rows = obj
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InvalidInput("matrix must be a list of rows")
    m = np.array([[_entry(v) for v in row] for row in rows], dtype=complex)
    if dim is not None:
        if not isinstance(dim, int) or m.shape != (dim, dim):
            raise InvalidInput(f"matrix shape {m.shape} does not match dim {dim}")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInput("matrix is not square")
    if not np.all(np.isfinite(m)):
        raise InvalidInput("matrix has non-finite entries")
    return m


def dump_matrix(m: np.ndarray) -> dict:
    return {"dim": int(m.shape[0]), "matrix": [[[_num(z.real), _num(z.imag)] for z in row] for row in m]}


def parse_protocol(obj) -> Protocol:
    if not isinstance(obj, dict) or not isinstance(obj.get("segments"), list):
        raise InvalidInput("protocol must be an object with a 'segments' list")
    segs = []
    for j, s in enumerate(obj["segments"]):
        if not isinstance(s, dict) or "t" not in s:
            raise InvalidInput(f"segment {j} lacks a duration 't'")
        t = s["t"]
        if not isinstance(t, (int, float)) or isinstance(t, bool) or not math.isfinite(t) or t < 0:
            raise InvalidInput(f"segment {j}: duration must be a number >= 0")
        if "locals" in s:
            loc = tuple(parse_matrix(a, 2) for a in s["locals"])
        elif "left" in s or "right" in s:
            eye = np.eye(2, dtype=complex)
            left = parse_matrix(s["left"], 2) if "left" in s else eye
            right = parse_matrix(s["right"], 2) if "right" in s else eye
            loc = (left, right)
        else:
            loc = None
        segs.append(Segment(float(t), loc))
    return Protocol(tuple(segs))


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc.msg})") from exc


def _tol(args) -> Tolerances:
    return DEFAULT_TOL.with_(unit=args.tol, herm=args.tol)


def cmd_canon(args) -> dict:
    u = parse_matrix(_load(args.gate))
    content = nonlocal_content(u, _tol(args))
    return {
        "theta": [_num(x) for x in content.theta.as_array()],
        "phi": [_num(x) for x in content.phi],
        "ambiguous": bool(content.ambiguous),
    }


def cmd_hamcanon(args) -> dict:
    h = parse_matrix(_load(args.ham))
    tol = _tol(args)
    params = ham_canonical_params(h, tol)
    return {"h": [_num(x) for x in params.as_array()], "entangling": bool(is_entangling(h, tol))}


def cmd_mintime(args) -> dict:
    u = parse_matrix(_load(args.gate))
    h = parse_matrix(_load(args.ham))
    res = min_time_gate_ham(u, h, exhaustive=args.exhaustive_m, tol=_tol(args))
    return {
        "t_min": _num(res.t_min),
        "m": [int(x) for x in res.m],
        "active_k": res.active_k,
        "phase": res.phase,
    }


def cmd_verify(args) -> dict:
    p = parse_protocol(_load(args.protocol))
    h = parse_matrix(_load(args.ham))
    rep = verify_protocol(h, p, _tol(args))
    out = {"t_total": _num(rep.t_total), "t_min": _num(rep.t_min), "slack": _num(rep.slack), "pass": bool(rep.passed)}
    if not rep.passed:
        print(json.dumps(out))
        raise CliError("bound violated", EXIT_VIOLATION)
    return out


def cmd_nbound(args) -> dict:
    u = parse_matrix(_load(args.gate))
    h = parse_matrix(_load(args.ham))
    res = nqubit_bound(u, h, window=args.window, tol=_tol(args))
    return {"t_lower": _num(res.t_lower), "m": [int(x) for x in res.m], "searched_window": res.searched_window}


def cmd_selftest(args) -> dict:
    tol = _tol(args)
    cnot = np.eye(4, dtype=complex)[[0, 1, 3, 2]]
    checks = {
        "cnot_xx": abs(min_time_gate_ham(cnot, XX, tol=tol).t_min - math.pi / 4) <= 1e-10,
        "swap_xx": abs(min_time_gate_ham(canonical_gate((math.pi / 4,) * 3), XX, tol=tol).t_min - 3 * math.pi / 4)
        <= 1e-10,
    }
    rng = np.random.default_rng(args.seed)
    failures = 0
    worst = math.inf
    for _ in range(args.count):
        h = random_hamiltonian(rng, tol=tol)
        p = random_protocol(h, int(rng.integers(1, 9)), 1.0, seed=rng.integers(2**63))
        rep = verify_protocol(h, p, tol)
        failures += not rep.passed
        worst = min(worst, rep.slack)
    ok = all(checks.values()) and failures == 0
    out = {
        "seed": args.seed,
        "protocols": args.count,
        "failures": failures,
        "min_slack": _num(worst) if args.count else None,
        "analytic": checks,
        "pass": ok,
    }
    if not ok:
        print(json.dumps(out))
        raise CliError("self-test failed", EXIT_VIOLATION)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-8, help="unitarity/Hermiticity tolerance (default 1e-8)")

    parser = argparse.ArgumentParser(prog="gatetime", description="Two-qubit gate invariants and minimal simulation times.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", parents=[common], help="canonical parameters of a two-qubit gate")
    p.add_argument("gate")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("hamcanon", parents=[common], help="canonical form of a two-qubit Hamiltonian")
    p.add_argument("ham")
    p.set_defaults(func=cmd_hamcanon)

    p = sub.add_parser("mintime", parents=[common], help="minimal time to simulate a gate")
    p.add_argument("gate")
    p.add_argument("ham")
    p.add_argument("--exhaustive-m", action="store_true", help="search all m in {-1,0,1}^4")
    p.set_defaults(func=cmd_mintime)

    p = sub.add_parser("verify", parents=[common], help="check a protocol against the lower bound")
    p.add_argument("protocol")
    p.add_argument("ham")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nbound", parents=[common], help="lower bound for an even number of qubits")
    p.add_argument("gate")
    p.add_argument("ham")
    p.add_argument("--window", type=int, default=1)
    p.set_defaults(func=cmd_nbound)

    p = sub.add_parser("selftest", parents=[common], help="seeded random falsification run")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (NotEntangling, Infeasible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (GateTimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
