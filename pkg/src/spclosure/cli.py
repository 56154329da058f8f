"""Command-line front end: ``closure <command> [options]``.

Monomial commands take ``--vars x,y`` and an ideal such as ``--ideal "x^2, y^2"``.
Characteristic-p commands take ``--ring "F2[x,y,z]/(x^3+y^3+z^3)"`` and polynomial
generators.  See :mod:`spclosure.textio` for the grammar.

Exit codes: 0 success, 1 when the computed mathematical condition fails
(non-membership, failed decomposition, a failed check), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import shlex
import sys
from dataclasses import dataclass, field, fields
from typing import Sequence

from . import frobenius as frob
from . import framework as fw
from . import newton
from .config import DEFAULTS
from .monomial import MonomialIdeal, box_points
from .oracles import CertificateTable
from .sampling import random_monomial_ideal
from .schemas import SCHEMA_VERSION
from .textio import (
    ParseError,
    format_monomial,
    format_monomial_ideal,
    format_poly,
    parse_monomial,
    parse_monomial_ideal,
    parse_names,
    parse_poly,
    parse_poly_list,
    parse_ring,
)

COMMANDS = (
    "integral",
    "special-integral",
    "low-points",
    "decomposition",
    "frobenius",
    "special-frobenius",
    "decompose-f",
    "f-spread",
    "independence",
    "reductions",
    "spread",
    "bs-check",
    "evolution",
    "axioms",
    "oracle-check",
)


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Request:
    command: str
    vars: str | None = None
    ring: str | None = None
    ideal: str | None = None
    element: str | None = None
    max_e: int = DEFAULTS.e_max
    max_n: int = DEFAULTS.n_max
    box: int | None = None
    w: int = 0
    seed: int = DEFAULTS.seed
    count: int = 50
    pairs: int = 500
    denominator_bound: int = DEFAULTS.denominator_bound
    threads: int | None = None
    json: bool = False


_FLAGS = {f.name: "--" + f.name.replace("_", "-") for f in fields(Request) if f.name != "command"}


@dataclass
class Response:
    command: str
    ok: bool
    lines: list[str]
    result: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="closure", description="Closure computations for monomial and char-p ideals.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--vars", help="comma-separated variable names for monomial commands")
    parser.add_argument("--ring", help='ring such as "F2[x,y,z]/(x^3+y^3+z^3)"')
    parser.add_argument("--ideal", help="comma-separated generators")
    parser.add_argument("--element", help="monomial or polynomial to test")
    parser.add_argument("--max-e", type=int, default=DEFAULTS.e_max, help="largest Frobenius exponent e searched")
    parser.add_argument("--max-n", type=int, default=DEFAULTS.n_max, help="largest power n searched")
    parser.add_argument("--box", type=int, help="upper bound of the exponent box for scans")
    parser.add_argument("--w", type=int, default=0, help="offset w in the Briançon-Skoda check")
    parser.add_argument("--seed", type=int, default=DEFAULTS.seed)
    parser.add_argument("--count", type=int, default=50, help="number of random ideals in suites")
    parser.add_argument("--pairs", type=int, default=500, help="sampled (J, I) pairs for the Nakayama axiom")
    parser.add_argument("--denominator-bound", type=int, default=DEFAULTS.denominator_bound)
    parser.add_argument("--threads", type=int)
    parser.add_argument("--json", action="store_true")
    return parser


def parse(argv: Sequence[str] | str) -> Request:
    if isinstance(argv, str):
        argv = shlex.split(argv)
    ns = build_parser().parse_args(list(argv))
    return Request(**vars(ns))


def format_request(req: Request) -> str:
    """Inverse of :func:`parse`: only non-default options are emitted."""
    parts = [req.command]
    defaults = Request(req.command)
    for name, flag in _FLAGS.items():
        value = getattr(req, name)
        if value == getattr(defaults, name):
            continue
        if isinstance(value, bool):
            parts.append(flag)
        else:
            parts.extend([flag, str(value)])
    return shlex.join(parts)


# --- helpers ---------------------------------------------------------------


def _need(req: Request, name: str):
    value = getattr(req, name)
    if value is None:
        raise UsageError(f"{req.command} needs {_FLAGS[name]}")
    return value


def _monomial_setup(req: Request) -> tuple[tuple[str, ...], MonomialIdeal]:
    names = parse_names(_need(req, "vars"))
    ideal = parse_monomial_ideal(_need(req, "ideal"), names)
    if not ideal.is_proper_nonzero:
        raise UsageError("the ideal must be proper and nonzero")
    return names, ideal


def _ring_setup(req: Request):
    ring = parse_ring(_need(req, "ring"))
    gens = parse_poly_list(_need(req, "ideal"), ring.names, ring.p)
    return ring, gens


def _gens(ideal: MonomialIdeal, names) -> list[str]:
    return [format_monomial(g, names) for g in sorted(ideal.generators, reverse=True)]


def _membership(req: Request, special: bool) -> Response:
    names, ideal = _monomial_setup(req)
    if req.element is None:
        closure = newton.special_integral_closure if special else newton.integral_closure
        result = closure(ideal, threads=req.threads)
        return Response(req.command, True, [format_monomial_ideal(result, names)], {"generators": _gens(result, names)})
    alpha = parse_monomial(req.element, names)
    test = newton.contains_special_integral if special else newton.contains_integral
    res = test(ideal, alpha)
    cert = res.certificate.to_json() if res.certificate else None
    lines = [res.verdict]
    if cert:
        lines.append("certificate: " + json.dumps(cert))
    return Response(req.command, res.member, lines, {"verdict": res.verdict, "monomial": req.element, "certificate": cert})


def _cmd_low_points(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    pts = [format_monomial(a, names) for a in newton.low_points(ideal)]
    return Response(req.command, True, [", ".join(pts)], {"low_points": pts})


def _cmd_decomposition(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    res = newton.decomposition_holds(ideal)
    witness = None if res.witness is None else format_monomial(res.witness, names)
    line = "decomposition holds" if res.holds else f"decomposition fails, witness {witness}"
    return Response(
        req.command,
        res.holds,
        [line],
        {
            "holds": res.holds,
            "witness": witness,
            "generators_are_low": res.generators_are_low,
            "closure_check": res.closure_check,
        },
    )


def _cmd_frobenius(req: Request, special: bool) -> Response:
    ring, gens = _ring_setup(req)
    z = parse_poly(_need(req, "element"), ring.names, ring.p)
    search = frob.special_frobenius_member if special else frob.frobenius_member
    verdict = search(z, gens, ring, req.max_e)
    return Response(req.command, verdict.member, [verdict.describe()], verdict.to_json())


def _cmd_decompose_f(req: Request) -> Response:
    ring, gens = _ring_setup(req)
    z = parse_poly(_need(req, "element"), ring.names, ring.p)
    try:
        dec = frob.special_decompose(z, gens, ring, req.max_e)
    except frob.NoWitness as exc:
        return Response(req.command, False, [str(exc)], {"error": str(exc)})
    a, s = format_poly(dec.in_ideal, ring.names), format_poly(dec.special, ring.names)
    return Response(req.command, True, [f"ideal part: {a}", f"special part: {s}", f"e={dec.e}"],
                    {"in_ideal": a, "special": s, "e": dec.e})


def _cmd_f_spread(req: Request) -> Response:
    ring, gens = _ring_setup(req)
    table = frob.f_spread(gens, ring, req.max_e)
    lines = [f"e={e}: mu={m}" for e, m in zip(table.e, table.mu)]
    lines.append(f"stable: {table.stable}" + (f", spread {table.spread}" if table.stable else ""))
    return Response(req.command, True, lines, table.to_json())


def _cmd_independence(req: Request) -> Response:
    if req.ring is not None:
        ring, gens = _ring_setup(req)
        ok = frob.f_independent(gens, ring, req.max_e)
        text = f"F-independent up to e={req.max_e}" if ok else "not F-independent"
        return Response(req.command, ok, [text], {"independent": ok, "bounded": True, "e_max": req.max_e})
    names, ideal = _monomial_setup(req)
    ok = fw.is_c_independent(ideal, fw.INTEGRAL)
    return Response(req.command, ok, ["bar-independent" if ok else "not bar-independent"],
                    {"independent": ok, "bounded": False})


def _cmd_reductions(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    reds = fw.minimal_subset_reductions(ideal, fw.INTEGRAL)
    texts = [format_monomial_ideal(r, names) for r in reds]
    return Response(req.command, True, [f"({t})" for t in texts], {"minimal_subset_reductions": texts})


def _cmd_spread(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    spread = fw.spread_over_subsets(ideal, fw.INTEGRAL)
    text = f"subset-spread {spread}" if spread is not None else "minimal subset-reductions differ in size"
    return Response(req.command, spread is not None, [text], {"subset_spread": spread})


def _cmd_bs_check(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    rep = fw.briancon_skoda_check(ideal, req.w)
    lines = [
        f"n={rep.n}, w={rep.w}",
        f"special containment: {'ok' if not rep.special_violations else 'VIOLATED'}",
        f"integral containment: {'ok' if not rep.integral_violations else 'VIOLATED'}",
    ]
    return Response(req.command, rep.passed, lines, rep.to_json())


def _cmd_evolution(req: Request) -> Response:
    names, ideal = _monomial_setup(req)
    rep = fw.evolution_conditions(ideal, req.max_n)
    lines = []
    for label, st in (("SP", rep.sp), ("AR", rep.ar), ("NN", rep.nn)):
        if st.holds:
            lines.append(f"{label}: holds" + (f" (no witness up to n={req.max_n})" if st.bounded else ""))
        else:
            extra = f" with n={st.n}" if st.n is not None else ""
            lines.append(f"{label}: fails at {format_monomial(st.witness, names)}{extra}")
    lines.append(f"bar-independent: {rep.bar_independent}")
    ok = rep.sp.holds and rep.ar.holds and rep.nn.holds
    return Response(req.command, ok, lines, rep.to_json())


def _cmd_axioms(req: Request) -> Response:
    rng = random.Random(req.seed)
    instances = [random_monomial_ideal(rng) for _ in range(req.count)]
    closure_rep = fw.check_closure_axioms(fw.INTEGRAL, instances)
    special_rep = fw.check_special_axioms(fw.INTEGRAL, instances, pairs=req.pairs, seed=req.seed)
    lemma_bad = [format_monomial_ideal(i, ("x", "y", "z")[: i.n]) for i in instances if not fw.degree_lemma_holds(i)]
    lines = []
    for rep in (closure_rep, special_rep):
        for axiom, count in rep.checked.items():
            status = "pass" if rep.passed(axiom) else f"FAIL ({len(rep.failures[axiom])})"
            lines.append(f"{axiom}: {status} [{count} checks]")
    lines.append(f"degree_lemma: {'pass' if not lemma_bad else 'FAIL'} [{len(instances)} checks]")
    ok = closure_rep.passed() and special_rep.passed() and not lemma_bad
    return Response(
        req.command,
        ok,
        lines,
        {"closure": closure_rep.to_json(), "special": special_rep.to_json(), "degree_lemma_failures": lemma_bad},
    )


def _cmd_oracle_check(req: Request) -> Response:
    if req.ideal is not None:
        names, ideal = _monomial_setup(req)
        instances = [(names, ideal)]
    else:
        rng = random.Random(req.seed)
        instances = []
        for _ in range(req.count):
            ideal = random_monomial_ideal(rng, max_exp=4, max_gens=3)
            instances.append((("x", "y", "z")[: ideal.n], ideal))
    disagreements = []
    checked = 0
    for names, ideal in instances:
        table = CertificateTable(ideal, req.denominator_bound)
        upper = (req.box,) * ideal.n if req.box is not None else tuple(m + 1 for m in ideal.max_exponents())
        for alpha in box_points(upper):
            checked += 1
            for strict in (False, True):
                lp_side = bool(newton.lp_membership(ideal, alpha, strict))
                if lp_side != table.member(alpha, strict):
                    disagreements.append(
                        {"ideal": format_monomial_ideal(ideal, names), "monomial": format_monomial(alpha, names),
                         "strict": strict, "lp": lp_side}
                    )
    lines = [f"{checked} points checked, {len(disagreements)} disagreements"]
    lines += [json.dumps(d) for d in disagreements]
    return Response(req.command, not disagreements, lines, {"checked": checked, "disagreements": disagreements})


_DISPATCH = {
    "integral": lambda r: _membership(r, special=False),
    "special-integral": lambda r: _membership(r, special=True),
    "low-points": _cmd_low_points,
    "decomposition": _cmd_decomposition,
    "frobenius": lambda r: _cmd_frobenius(r, special=False),
    "special-frobenius": lambda r: _cmd_frobenius(r, special=True),
    "decompose-f": _cmd_decompose_f,
    "f-spread": _cmd_f_spread,
    "independence": _cmd_independence,
    "reductions": _cmd_reductions,
    "spread": _cmd_spread,
    "bs-check": _cmd_bs_check,
    "evolution": _cmd_evolution,
    "axioms": _cmd_axioms,
    "oracle-check": _cmd_oracle_check,
}


def execute(req: Request) -> Response:
    return _DISPATCH[req.command](req)


def render(resp: Response, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(
            {"schema_version": SCHEMA_VERSION, "command": resp.command, "ok": resp.ok, "result": resp.result},
            indent=2,
        )
    return "\n".join(resp.lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        req = parse(argv)
        resp = execute(req)
    except (UsageError, ParseError, newton.UnsupportedInput, ValueError) as exc:
        print(f"closure: error: {exc}", file=sys.stderr)
        return 2
    print(render(resp, req.json))
    return resp.exit_code


if __name__ == "__main__":
    sys.exit(main())
