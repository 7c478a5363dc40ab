"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import kernels
from .arrangement import (
    Arrangement,
    ArrangementError,
    bruteforce_fixed_complement_count,
    check_invariance,
    lcm_period_nA,
)
from .coxeter_a import RankTooLargeError, build_type_a, closed_form_character
from .equivariant import (
    decompose_equivariant,
    equivariant_characteristic_qpoly,
    period_n_Gamma,
)
from .group import CharacterTable, GaussianRational, GroupError, ReconstructionError, generate_group
from .linalg import IntMatrix
from .quasipoly import QuasiPolynomial, minimal_period
from .torus import EmptyArrangementError, torsion_oracle_fixed_count, verify_chamber_decomposition

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Validation failure, reported as ``FILE:LINE: message``."""

    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")


class ProblemFile:
    def __init__(self, path: str, text: str):
        self.path = path
        self.text = text
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(path, exc.lineno, f"malformed JSON: {exc.msg}") from None
        if not isinstance(data, dict):
            raise InputError(path, 1, "top level must be an object")
        self.data = data
        self.rank = self._int("rank", required=True, minimum=1)
        self.q_max = self._int("q_max", default=20, minimum=1)
        self.budget = self._int("budget", default=kernels.DEFAULT_BUDGET, minimum=1)
        self.arrangement = self._arrangement()
        self.group = self._group()
        if not check_invariance(self.arrangement, self.group):
            raise InputError(path, self.line_of("arrangement"), "arrangement is not invariant under the generators")
        self.table = self._table()

    def line_of(self, key: str) -> int:
        needle = f'"{key}"'
        for i, line in enumerate(self.text.splitlines(), start=1):
            if needle in line:
                return i
        return 1

    def fail(self, key: str, message: str):
        raise InputError(self.path, self.line_of(key), message)

    def _int(self, key, required=False, default=None, minimum=None):
        if key not in self.data:
            if required:
                raise InputError(self.path, 1, f"missing required key {key!r}")
            return default
        v = self.data[key]
        if not isinstance(v, int) or isinstance(v, bool):
            self.fail(key, f"{key!r} must be an integer")
        if minimum is not None and v < minimum:
            self.fail(key, f"{key!r} must be at least {minimum}")
        return v

    def _int_vector(self, key, v, length, what):
        if not isinstance(v, list) or len(v) != length or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            self.fail(key, f"{what} must be a list of {length} integers")
        return tuple(v)

    def _arrangement(self) -> Arrangement:
        cols = self.data.get("arrangement", [])
        if not isinstance(cols, list):
            self.fail("arrangement", "'arrangement' must be a list of columns")
        cols = [self._int_vector("arrangement", c, self.rank, f"column {i}") for i, c in enumerate(cols)]
        try:
            return Arrangement(IntMatrix.from_columns(cols, self.rank))
        except ArrangementError as exc:
            self.fail("arrangement", str(exc))

    def _group(self):
        gens = self.data.get("group_generators", [])
        if not isinstance(gens, list):
            self.fail("group_generators", "'group_generators' must be a list of matrices")
        mats = []
        for i, g in enumerate(gens):
            if not isinstance(g, list) or len(g) != self.rank:
                self.fail("group_generators", f"generator {i} must have {self.rank} rows")
            rows = [self._int_vector("group_generators", r, self.rank, f"generator {i} row") for r in g]
            mats.append(IntMatrix.from_rows(rows, cols=self.rank))
        try:
            return generate_group(mats, rank=self.rank)
        except GroupError as exc:
            self.fail("group_generators", str(exc))

    def _value(self, v) -> GaussianRational:
        if isinstance(v, int) and not isinstance(v, bool):
            return GaussianRational(v)
        if isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            if len(v) == 2 and v[1] != 0:
                return GaussianRational(Fraction(v[0], v[1]))
            if len(v) == 4 and v[1] != 0 and v[3] != 0:
                return GaussianRational(Fraction(v[0], v[1]), Fraction(v[2], v[3]))
        self.fail("character_table", f"bad character value {v!r}; use n, [num, den] or [re_num, re_den, im_num, im_den]")

    def _table(self) -> Optional[CharacterTable]:
        if "character_table" not in self.data:
            return None
        raw = self.data["character_table"]
        k = self.group.num_classes
        if not isinstance(raw, list) or not all(isinstance(chi, list) and len(chi) == k for chi in raw):
            self.fail("character_table", f"character table must be a list of rows with {k} values each")
        table = CharacterTable(self.group, [[self._value(v) for v in chi] for chi in raw])
        try:
            table.validate()
        except ValueError as exc:
            self.fail("character_table", f"invalid character table: {exc}")
        return table


def load_problem(path: str) -> ProblemFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(path, 0, f"cannot read file: {exc.strerror}") from None
    return ProblemFile(path, text)


# --- output helpers ---

def _frac_json(c: Fraction):
    return [c.numerator, c.denominator]


def _qpoly_json(f: QuasiPolynomial) -> dict:
    return {
        "period": f.period,
        "constituents": [[_frac_json(c) for c in p.coefficients] for p in f.constituents],
        "text": f.render().split("\n"),
    }


def _minimized(f: QuasiPolynomial) -> QuasiPolynomial:
    return f.with_period(minimal_period(f))


def _emit(args, payload: dict, lines: list) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _rows(m: IntMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in m.to_rows()) + "]"


def _q_values(args, prob) -> list:
    if getattr(args, "q", None) is not None:
        return [args.q]
    q_max = args.q_max if args.q_max is not None else prob.q_max
    return list(range(1, q_max + 1))


def _budget(args, prob) -> int:
    return args.budget if args.budget is not None else prob.budget


# --- subcommands ---

def cmd_compute(args) -> int:
    prob = load_problem(args.file)
    a, g = prob.arrangement, prob.group
    e = equivariant_characteristic_qpoly(a, g, threads=args.threads)
    n_a, n_g, mp = lcm_period_nA(a), period_n_Gamma(g), e.minimal_period()
    gcd_ok = e.has_gcd_property()
    classes = []
    lines = [
        f"rank: {a.rank}, hyperplanes: {a.n}, group order: {g.order}, classes: {g.num_classes}",
        f"period N~ from divisors: {e.period}",
        f"n~_A: {n_a}",
        f"n~_Gamma: {n_g}",
        f"minimal period: {mp}",
        f"gcd-property: {'holds' if gcd_ok else 'FAILS'}",
    ]
    for c, f in enumerate(e.per_class):
        rep = g.representative(c)
        fm = _minimized(f)
        lines.append(f"class {c + 1} (size {g.class_sizes[c]}, representative {_rows(rep)}):")
        lines.extend("  " + s for s in fm.render().split("\n"))
        classes.append({"size": g.class_sizes[c], "representative": rep.to_rows(), "qpoly": _qpoly_json(fm)})
    payload = {
        "rank": a.rank, "hyperplanes": a.n, "group_order": g.order,
        "period_N_tilde": e.period, "n_tilde_A": n_a, "n_tilde_Gamma": n_g,
        "minimal_period": mp, "gcd_property": gcd_ok, "classes": classes,
    }
    if prob.table is not None:
        try:
            mults = decompose_equivariant(e, prob.table)
        except ReconstructionError as exc:
            print(f"decomposition failed: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        lines.append("decomposition:")
        payload["decomposition"] = []
        for i, m in enumerate(mults, start=1):
            mm = _minimized(m)
            lines.append(f"irreducible {i}:")
            lines.extend("  " + s for s in mm.render().split("\n"))
            payload["decomposition"].append(_qpoly_json(mm))
    _emit(args, payload, lines)
    return EXIT_OK if gcd_ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    prob = load_problem(args.file)
    a, g = prob.arrangement, prob.group
    budget = _budget(args, prob)
    e = equivariant_characteristic_qpoly(a, g, threads=args.threads)
    lines = [f"{'q':>4} {'class':>5} {'formula':>10} {'brute':>10} {'torsion':>10}  verdict"]
    rows, ok = [], True
    for q in _q_values(args, prob):
        vals = e.evaluate(q)
        for c, rep in enumerate(g.representatives()):
            b = bruteforce_fixed_complement_count(a, rep, q, budget=budget)
            t = torsion_oracle_fixed_count(a, rep, q, budget=budget)
            agree = vals[c] == b == t
            ok = ok and agree
            rows.append({"q": q, "class": c + 1, "formula": vals[c], "brute": b, "torsion": t, "agree": agree})
            lines.append(f"{q:>4} {c + 1:>5} {vals[c]:>10} {b:>10} {t:>10}  {'ok' if agree else 'MISMATCH'}")
    lines.append("all oracles agree" if ok else "ORACLES DISAGREE")
    _emit(args, {"rows": rows, "agree": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_chambers(args) -> int:
    prob = load_problem(args.file)
    a, g = prob.arrangement, prob.group
    if a.n == 0:
        raise EmptyArrangementError("chamber decomposition needs a non-empty arrangement")
    budget = _budget(args, prob)
    e = equivariant_characteristic_qpoly(a, g, threads=args.threads)
    reports = [verify_chamber_decomposition(a, g, q, engine=e, budget=budget) for q in _q_values(args, prob)]
    ok = all(r.holds for r in reports)
    lines = []
    for r in reports:
        lines.extend(r.render().split("\n"))
    payload = {"reports": [{
        "q": r.q, "holds": r.holds, "engine": r.engine, "total": r.total,
        "orbits": [{"representative_k": list(o.representative.k), "size": o.size,
                    "isotropy_order": len(o.isotropy), "chamber_count": o.chamber_count,
                    "induced": o.induced} for o in r.orbits],
    } for r in reports], "holds": ok}
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_coxeter_a(args) -> int:
    data = build_type_a(args.rank)
    e = equivariant_characteristic_qpoly(data.arrangement, data.group, threads=args.threads)
    q_max = args.q_max if args.q_max is not None else 12
    lines = [f"type A_{args.rank}: group order {data.group.order}, {data.arrangement.n} hyperplanes",
             f"{'q':>4} {'cycle type':>14} {'closed form':>12} {'engine':>10}  verdict"]
    rows, ok = [], True
    for q in range(1, q_max + 1):
        vals = e.evaluate(q)
        for c, ct in enumerate(data.class_cycle_types):
            cf = closed_form_character(args.rank, ct, q)
            agree = cf == vals[c]
            ok = ok and agree
            label = "(" + ",".join(str(p) for p in ct) + ")"
            rows.append({"q": q, "cycle_type": list(ct), "closed_form": cf, "engine": vals[c], "agree": agree})
            lines.append(f"{q:>4} {label:>14} {cf:>12} {vals[c]:>10}  {'ok' if agree else 'MISMATCH'}")
    mp = e.minimal_period()
    lines.append(f"minimal period: {mp}")
    lines.append("closed form agrees with engine" if ok else "CLOSED FORM DISAGREES")
    _emit(args, {"rank": args.rank, "rows": rows, "minimal_period": mp, "agree": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    from .corpus import random_invariant_arrangements
    q_max = args.q_max if args.q_max is not None else 20
    budget = args.budget if args.budget is not None else kernels.DEFAULT_BUDGET
    lines, results, ok = [], [], True
    for p in random_invariant_arrangements(args.count, seed=args.seed):
        e = equivariant_characteristic_qpoly(p.arrangement, p.group, threads=args.threads)
        bad = 0
        for q in range(1, q_max + 1):
            vals = e.evaluate(q)
            for c, rep in enumerate(p.group.representatives()):
                b = bruteforce_fixed_complement_count(p.arrangement, rep, q, budget=budget)
                t = torsion_oracle_fixed_count(p.arrangement, rep, q, budget=budget)
                bad += not (vals[c] == b == t)
        ok = ok and not bad
        cols = [list(c) for c in p.arrangement.columns()]
        results.append({"name": p.name, "columns": cols, "mismatches": bad})
        lines.append(f"{p.name}: columns {cols}: {'ok' if not bad else f'{bad} MISMATCHES'}")
    lines.append(f"{len(results)} arrangements, q = 1..{q_max}: " + ("all oracles agree" if ok else "MISMATCH"))
    _emit(args, {"seed": args.seed, "q_max": q_max, "results": results, "agree": ok}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--q-max", type=int, default=None, help="largest q to evaluate")
    common.add_argument("--budget", type=int, default=None, help="brute-force point budget")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the per-class loop")

    p = argparse.ArgumentParser(prog="equivqp", description="Equivariant characteristic quasi-polynomials.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("compute", parents=[common], help="per-class quasi-polynomials and periods")
    s.add_argument("file")
    s.set_defaults(func=cmd_compute)
    s = sub.add_parser("oracle", parents=[common], help="formula vs brute force vs torsion points")
    s.add_argument("file")
    s.add_argument("--q", type=int, default=None, help="single q (default: 1..q_max)")
    s.set_defaults(func=cmd_oracle)
    s = sub.add_parser("chambers", parents=[common], help="chamber orbit decomposition check")
    s.add_argument("file")
    s.add_argument("--q", type=int, default=None, help="single q (default: 1..q_max)")
    s.set_defaults(func=cmd_chambers)
    s = sub.add_parser("coxeter-a", parents=[common], help="type A closed form vs engine")
    s.add_argument("rank", type=int)
    s.set_defaults(func=cmd_coxeter_a)
    s = sub.add_parser("selftest", parents=[common], help="randomized oracle-equivalence suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=25)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("q", "q_max", "budget", "threads"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (kernels.InstanceTooLargeError, EmptyArrangementError, RankTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
