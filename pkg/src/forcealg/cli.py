"""``forcealg``: run one analysis on a JSON problem document, print a JSON report.

Exit codes: 0 success, 2 input error (diagnostic JSON on stderr), 3 Groebner
degree cap exceeded (diagnostics on stderr).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import casebook
from .field import QQ, GF, Field
from .forcing import (
    ForcingData,
    HypothesisError,
    fiber,
    fiber_completely_singular,
    has_section,
    horizontal_component,
    is_domain,
    is_irreducible,
    is_normal,
    is_surjective,
    jacobian_normality,
    witness_json,
)
from .groebner import DegreeCapExceeded
from .ideal import Ideal, codimension
from .matrix import (
    ForcingMatrix,
    adjoint_membership_check,
    fitting_ideal,
    is_regular_sequence,
    matrix_fiber,
    regular_sequence_necessary_check,
)
from .poly import ParseError, PolyRing

COMMANDS = (
    "normal",
    "domain",
    "irreducible",
    "surjective",
    "jacobian",
    "fiber",
    "horizontal",
    "fitting",
    "regseq",
    "adjoint",
    "verify-decomposition",
    "verify-enlightening",
    "verify-normalization",
    "grid",
)

# commands that run on embedded fixtures and need no document
NO_DOCUMENT = {"verify-decomposition", "verify-enlightening", "verify-normalization", "grid"}


class InputError(Exception):
    def __init__(self, kind, message, **extra):
        super().__init__(message)
        self.kind = kind
        self.extra = extra

    def to_json(self):
        return {"error": self.kind, "message": str(self), **self.extra}


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("usage", message)


# -- problem documents ---------------------------------------------------------------


def _parse_field(spec) -> Field:
    if spec is None or spec == "QQ":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"GF"} and isinstance(spec["GF"], int):
        try:
            return GF(spec["GF"])
        except ValueError as exc:
            raise InputError("field", str(exc)) from None
    raise InputError("field", f"unsupported field {spec!r}; use \"QQ\" or {{\"GF\": p}}")


def _names(doc, key, required=True):
    names = doc.get(key)
    if names is None:
        if required:
            raise InputError("document", f"missing {key!r}")
        return None
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise InputError("document", f"{key!r} must be a list of strings")
    for v in names:
        if v.startswith("__"):
            raise InputError("document", f"variable name {v!r} is reserved")
    if len(set(names)) != len(names):
        raise InputError("document", f"duplicate names in {key!r}")
    return names


def _poly(ring, text, where):
    if not isinstance(text, str):
        raise InputError("document", f"{where}: expected a polynomial string")
    try:
        return ring.parse(text)
    except ParseError as exc:
        raise InputError("parse", f"{where}: {exc}", position=exc.position) from None


class Problem:
    """Validated problem document: either single-equation data or a matrix."""

    def __init__(self, doc):
        if not isinstance(doc, dict):
            raise InputError("document", "problem document must be a JSON object")
        self.doc = doc
        field = _parse_field(doc.get("field", "QQ"))
        base_vars = _names(doc, "base_vars")
        t_vars = _names(doc, "t_vars", required=False)
        try:
            self.base = PolyRing(field, tuple(base_vars))
        except ValueError as exc:
            raise InputError("document", str(exc)) from None
        if t_vars and set(t_vars) & set(base_vars):
            raise InputError("document", "t_vars and base_vars overlap")
        has_data, has_matrix = "data" in doc, "matrix" in doc
        if has_data == has_matrix:
            raise InputError("document", "exactly one of 'data' and 'matrix' is required")
        self.data = None
        self.matrix = None
        try:
            if has_data:
                self.data = self._load_data(doc["data"], t_vars)
                self.matrix = ForcingMatrix.from_forcing_data(self.data)
            else:
                self.matrix = self._load_matrix(doc["matrix"], t_vars)
                if self.matrix.m == 1:
                    self.data = ForcingData(
                        self.base, self.matrix.entries[0], self.matrix.vec[0], self.matrix.t_names
                    )
        except ValueError as exc:
            raise InputError("document", str(exc)) from None

    def _load_data(self, data, t_vars):
        if not isinstance(data, dict) or "fs" not in data or not isinstance(data["fs"], list):
            raise InputError("document", "'data' needs a list 'fs' and a string 'f'")
        fs = [_poly(self.base, g, f"data.fs[{i}]") for i, g in enumerate(data["fs"])]
        f = _poly(self.base, data.get("f", "0"), "data.f")
        return ForcingData(self.base, fs, f, t_vars)

    def _load_matrix(self, mat, t_vars):
        if not isinstance(mat, dict) or not isinstance(mat.get("entries"), list):
            raise InputError("document", "'matrix' needs a list of rows 'entries'")
        rows = []
        for i, row in enumerate(mat["entries"]):
            if not isinstance(row, list):
                raise InputError("document", f"matrix.entries[{i}] must be a list")
            rows.append([_poly(self.base, e, f"matrix.entries[{i}][{j}]") for j, e in enumerate(row)])
        vec = mat.get("vec")
        if vec is not None:
            if not isinstance(vec, list):
                raise InputError("document", "matrix.vec must be a list")
            vec = [_poly(self.base, e, f"matrix.vec[{i}]") for i, e in enumerate(vec)]
        return ForcingMatrix(self.base, rows, vec, t_vars)

    def require_data(self, command):
        if self.data is None:
            raise InputError("document", f"{command!r} needs single-equation 'data'")
        return self.data


def _parse_point(text, base):
    if not text:
        raise InputError("usage", "fiber needs --point x=...,y=...")
    point = {}
    for part in text.split(","):
        name, sep, val = part.partition("=")
        name = name.strip()
        if not sep or not name:
            raise InputError("usage", f"bad point component {part!r}")
        try:
            point[name] = base.field(Fraction(val.strip()))
        except (ValueError, ZeroDivisionError):
            raise InputError("usage", f"bad coordinate {val!r} for {name}") from None
    missing = [v for v in base.vars if v not in point]
    extra = [v for v in point if v not in base.vars]
    if missing or extra:
        raise InputError("usage", f"point must assign exactly {', '.join(base.vars)}")
    return point


# -- reports ---------------------------------------------------------------------------


def _report(command, verdict, branch, witnesses=None, notes=None, **extra):
    out = {
        "command": command,
        "verdict": verdict,
        "branch": branch,
        "witnesses": witnesses or {},
        "notes": list(notes or []),
        "timing_ms": 0.0,
    }
    out.update(extra)
    return out


def _from_criterion(command, rep, **extra):
    j = rep.to_json()
    return _report(command, j["verdict"], j["branch"], j["witnesses"], j["notes"], **extra)


def _from_case(command, case: casebook.CaseResult):
    j = case.to_json()
    return _report(
        command,
        "Pass" if j["passed"] else "Fail",
        j["name"],
        {},
        j["notes"],
        passed=j["passed"],
        subchecks=j["subchecks"],
    )


def _gens(ideal: Ideal):
    return [str(g) for g in ideal.groebner().elements]


def run(command, problem: Problem | None, args) -> dict:
    if command == "normal":
        return _from_criterion(command, is_normal(problem.require_data(command)))
    if command == "domain":
        return _from_criterion(command, is_domain(problem.require_data(command)))
    if command == "irreducible":
        return _from_criterion(command, is_irreducible(problem.require_data(command)))
    if command == "jacobian":
        return _from_criterion(command, jacobian_normality(problem.require_data(command)))
    if command == "surjective":
        d = problem.require_data(command)
        surj = is_surjective(d)
        section = has_section(d)
        branch = "f in rad(f_1..f_n)" if surj else "f not in rad(f_1..f_n)"
        return _report(
            command, "Yes" if surj else "No", branch, {"has_section": section}
        )
    if command == "fiber":
        point = _parse_point(args.point, problem.base)
        if problem.data is not None:
            fb = fiber(problem.data, point)
        else:
            fb = matrix_fiber(problem.matrix, point)
        extra = fb.to_json()
        if problem.data is not None:
            try:
                extra["completely_singular"] = fiber_completely_singular(problem.data, point)
            except HypothesisError:
                extra["completely_singular"] = None
        return _report(
            command, fb.status, f"rank {fb.rank}", {"rank": fb.rank, "dim": fb.dim}, [], **extra
        )
    if command == "horizontal":
        d = problem.require_data(command)
        P = horizontal_component(d)
        notes = [] if not d.all_coefficients_zero() else ["all f_i = 0: no dominating component"]
        return _report(
            command, "Yes", "content removed", {"codim": witness_json(codimension(P))}, notes,
            generators=[str(g) for g in P.gens],
        )
    if command == "fitting":
        if args.size is None:
            raise InputError("usage", "fitting needs --size j")
        try:
            Ij = fitting_ideal(problem.matrix, args.size)
        except ValueError as exc:
            raise InputError("usage", str(exc)) from None
        zero = Ij.is_zero()
        return _report(
            command, "Zero" if zero else "Nonzero", f"minors of size {args.size}",
            {"size": args.size, "codim": None if zero else witness_json(codimension(Ij))}, [],
            generators=_gens(Ij) if not zero else [],
        )
    if command == "regseq":
        rep = is_regular_sequence(problem.matrix)
        nec = regular_sequence_necessary_check(problem.matrix)
        return _from_criterion(command, rep, necessary_check=nec.to_json())
    if command == "adjoint":
        try:
            ok = adjoint_membership_check(problem.matrix)
        except ValueError as exc:
            raise InputError("document", str(exc)) from None
        return _report(command, "Yes" if ok else "No", "det(M)*T_i in H for all i")
    if command == "verify-decomposition":
        return _from_case(command, _decomposition_case(problem))
    if command == "verify-enlightening":
        field = _parse_field(_field_flag(args.field))
        return _from_case(command, casebook.verify_enlightening_singular_locus(field))
    if command == "verify-normalization":
        return _from_case(command, casebook.verify_normalization_example())
    if command == "grid":
        n = args.max
        if n < 0:
            raise InputError("usage", "--max must be nonnegative")
        return _from_case(command, casebook.normality_grid(n, n, n, n))
    raise InputError("usage", f"unknown command {command!r}")


def _field_flag(text):
    m = re.fullmatch(r"\s*GF\((\d+)\)\s*", text)
    if m:
        return {"GF": int(m.group(1))}
    if text.lstrip().startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("usage", f"bad --field: {exc.msg}") from None
    return text


def _decomposition_case(problem):
    if problem is None:
        _, H, primes = casebook.enlightening_fixture()
        return casebook.verify_decomposition(H, primes, (2, 2, 2, 2), 2)
    H = Ideal(problem.matrix.ring, problem.matrix.equations())
    cands = problem.doc.get("candidates")
    if not isinstance(cands, list) or not cands:
        raise InputError("document", "verify-decomposition needs a nonempty 'candidates' list")
    ideals = []
    for i, gens in enumerate(cands):
        if not isinstance(gens, list):
            raise InputError("document", f"candidates[{i}] must be a list of strings")
        ideals.append(
            Ideal(H.ring, [_poly(H.ring, g, f"candidates[{i}][{j}]") for j, g in enumerate(gens)])
        )
    return casebook.verify_decomposition(H, ideals)


# -- rendering -------------------------------------------------------------------------


def _pretty(report) -> str:
    lines = []
    width = max(len(k) for k in report)
    for k, v in report.items():
        if isinstance(v, dict):
            v = ", ".join(f"{a}={b}" for a, b in v.items()) or "-"
        elif isinstance(v, list):
            if v and isinstance(v[0], dict):
                lines.append(f"{k:<{width}}")
                for item in v:
                    lines.append("  " + "  ".join(f"{a}={b}" for a, b in item.items()))
                continue
            v = "; ".join(map(str, v)) or "-"
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines)


def build_parser():
    p = _ArgParser(prog="forcealg", description="Decision procedures for forcing algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("document", nargs="?", help="problem JSON file, or - for stdin")
    p.add_argument("--point", help="rational point, e.g. x=0,y=1/2")
    p.add_argument("--size", type=int, help="minor size for fitting")
    p.add_argument("--max", type=int, default=3, help="grid bound for a, b, c, d")
    p.add_argument("--field", default="QQ", help="field for verify-enlightening: QQ or GF(p)")
    p.add_argument("--pretty", action="store_true", help="print a table instead of JSON")
    return p


def _load_document(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError("io", str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("json", exc.msg, line=exc.lineno, column=exc.colno) from None


def _emit_error(payload, stream):
    stream.write(json.dumps(payload, ensure_ascii=False) + "\n")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_intermixed_args(argv)
        problem = None
        if args.document is not None:
            problem = Problem(_load_document(args.document))
        elif args.command not in NO_DOCUMENT:
            raise InputError("usage", f"{args.command!r} needs a problem document")
        start = time.perf_counter()
        report = run(args.command, problem, args)
        report["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    except InputError as exc:
        _emit_error(exc.to_json(), sys.stderr)
        return 2
    except DegreeCapExceeded as exc:
        _emit_error({"error": "degree_cap", "message": str(exc), **exc.diagnostics()}, sys.stderr)
        return 3
    if args.pretty:
        print(_pretty(report))
    else:
        print(json.dumps(report, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
