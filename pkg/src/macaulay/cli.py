"""Command-line front end: every computation as a scriptable subcommand.

Each invocation prints one self-describing report, either as plain
``key: value`` text (default) or as a JSON document (``--format
structured``) that parses back into the same report.  All rational values
are rendered as decimal-free "p/q" strings.

Exit codes: 0 when every verdict is ok or not-applicable, 1 when any
verdict is violated, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import binom, hermitian, oracle, poly


@dataclass
class Report:
    """One command's echo of inputs, outputs, and per-bound verdicts."""

    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verdicts": self.verdicts,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Report":
        return cls(doc["command"], doc["inputs"], doc["outputs"], doc["verdicts"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for section, data in (("input", self.inputs), ("output", self.outputs), ("verdict", self.verdicts)):
            for key, value in data.items():
                if isinstance(value, (dict, list)):
                    value = json.dumps(value)
                lines.append(f"{section} {key}: {value}")
        return "\n".join(lines)

    @property
    def exit_code(self) -> int:
        return 1 if any(v == "violated" for v in self.verdicts.values()) else 0


def _verdict(ok: bool) -> str:
    return "ok" if ok else "violated"


def cmd_macrep(a: int, n: int) -> Report:
    rep = binom.macaulay_rep(a, n)
    return Report(
        "macrep",
        inputs={"A": a, "n": n},
        outputs={"terms": [list(t) for t in rep.terms], "value": binom.rep_value(rep)},
        verdicts={"round_trip": _verdict(binom.rep_value(rep) == a)},
    )


def cmd_shift(a: int, n: int, s: int, t: int) -> Report:
    return Report(
        "shift",
        inputs={"A": a, "n": n, "s": s, "t": t},
        outputs={"value": binom.shift_apply(a, n, s, t)},
        verdicts={"zero_convention": _verdict(a != 0 or binom.shift_apply(a, n, s, t) == 0)},
    )


def cmd_lemma_scan(m_max: int, d_max: int, s_max: int) -> Report:
    failures = binom.scan_split_shift_identity(m_max, d_max, s_max)
    splits = sum(
        math.comb(m + d, d) + 1
        for m in range(1, m_max + 1)
        for d in range(1, d_max + 1)
    ) * s_max
    return Report(
        "lemma-scan",
        inputs={"m_max": m_max, "d_max": d_max, "s_max": s_max},
        outputs={"splits_checked": splits, "failures": [list(f) for f in failures]},
        verdicts={"identity": _verdict(not failures)},
    )


def cmd_hilbert(path: str, d_max: int, mode: str) -> Report:
    ideal = poly.parse_ideal(Path(path).read_text())
    records = [poly.hilbert_record(ideal, d, mode=mode) for d in range(d_max + 1)]
    identity_ok = all(
        r.h_ideal + r.h_quotient == math.comb(ideal.n_vars - 1 + r.degree, r.degree)
        for r in records
    )
    return Report(
        "hilbert",
        inputs={"file": path, "d_max": d_max, "mode": mode, "n_vars": ideal.n_vars},
        outputs={
            "degrees": [r.degree for r in records],
            "h_ideal": [r.h_ideal for r in records],
            "h_quotient": [r.h_quotient for r in records],
        },
        verdicts={"dimension_identity": _verdict(identity_ok)},
    )


def cmd_verify(path: str, d_max: int, mode: str) -> Report:
    ideal = poly.parse_ideal(Path(path).read_text())
    checks = poly.verify_macaulay(ideal, d_max, mode=mode)
    return Report(
        "verify",
        inputs={"file": path, "d_max": d_max, "mode": mode, "n_vars": ideal.n_vars},
        outputs={
            "checks": [
                {"degree": c.degree, "forward": c.forward_ok, "quotient": c.quotient_ok, "reverse": c.reverse_ok}
                for c in checks
            ]
        },
        verdicts={
            "forward_bound": _verdict(all(c.forward_ok for c in checks)),
            "quotient_bound": _verdict(all(c.quotient_ok for c in checks)),
            "reverse_bound": _verdict(all(c.reverse_ok for c in checks)),
        },
    )


def cmd_bridge(n_max: int, d_max: int) -> Report:
    failures = [
        [n, d]
        for n in range(2, n_max + 1)
        for d in range(1, d_max + 1)
        if not poly.bridge_identity_check(n, d)
    ]
    return Report(
        "bridge",
        inputs={"n_max": n_max, "d_max": d_max},
        outputs={"failures": failures},
        verdicts={"identity": _verdict(not failures)},
    )


def cmd_hermitian(path: str, s: int | None, t: int | None, l: int) -> Report:
    form = hermitian.parse_biform(Path(path).read_text())
    n = form.n_vars
    if s is None and t is None:
        s, t = n, 0
    elif s is None or t is None:
        raise ValueError("give both --s and --t, or neither")
    inputs = {"file": path, "n_vars": n, "d": form.half_degree, "s": s, "t": t, "l": l}
    if form.is_zero():
        return Report(
            "hermitian",
            inputs=inputs,
            outputs={"note": "zero form: rank and signature bounds do not apply"},
            verdicts={
                "product_rank_bounds": "not-applicable",
                "positive_part_bound": "not-applicable",
                "negative_part_bound": "not-applicable",
                "sos_rank_interval": "not-applicable",
            },
        )
    sig = hermitian.biform_signature(form)
    r = hermitian.biform_rank(form)
    product = hermitian.multiply_signed_norm(form, (s, t))
    rank_product = hermitian.biform_rank(product)
    low, high = hermitian.product_rank_interval(r, n)
    outputs = {
        "signature": {"p": sig.p, "q": sig.q},
        "rank": r,
        "product_rank": rank_product,
        "product_rank_interval": [low, high],
    }
    verdicts = {"product_rank_bounds": _verdict(low <= rank_product <= high)}

    power = hermitian.multiply_norm_power(form, l)
    power_sig = hermitian.biform_signature(power)
    sos = power_sig.q == 0
    outputs["norm_power_rank"] = power_sig.rank
    outputs["norm_power_is_sum_of_squares"] = sos
    if sos:
        p_bound = hermitian.sos_min_positive_part(r, n, l)
        q_bound = hermitian.sos_max_negative_part(sig.p, n, l)
        q_bound_alt = hermitian.sos_max_negative_part(sig.p, n, l, alternate=True)
        r_low, r_high = hermitian.sos_rank_interval(sig.p, sig.q, n, l)
        outputs["positive_part_bound"] = str(p_bound)
        outputs["negative_part_bound"] = q_bound
        outputs["negative_part_bound_alternate_subscripts"] = q_bound_alt
        outputs["sos_rank_interval"] = [r_low, r_high]
        verdicts["positive_part_bound"] = _verdict(sig.p >= p_bound)
        verdicts["negative_part_bound"] = _verdict(sig.q <= q_bound)
        verdicts["sos_rank_interval"] = _verdict(r_low <= power_sig.rank <= r_high)
    else:
        verdicts["positive_part_bound"] = "not-applicable"
        verdicts["negative_part_bound"] = "not-applicable"
        verdicts["sos_rank_interval"] = "not-applicable"
    return Report("hermitian", inputs=inputs, outputs=outputs, verdicts=verdicts)


def cmd_min_sos(path: str, l_max: int) -> Report:
    form = hermitian.parse_biform(Path(path).read_text())
    found = None if form.is_zero() else hermitian.find_min_sos_exponent(form, l_max)
    return Report(
        "min-sos",
        inputs={"file": path, "l_max": l_max},
        outputs={"min_power": found},
        verdicts={"search": "not-applicable" if form.is_zero() else "ok"},
    )


def cmd_corpus(args: argparse.Namespace) -> Report:
    spec = oracle.CorpusSpec(
        n_vars=(args.n_min, args.n_max),
        gens=(args.gens_min, args.gens_max),
        degrees=(args.deg_min, args.deg_max),
        d_max=args.d_max,
        seed=args.seed,
        draws=args.draws,
        kinds=tuple(args.kinds.split(",")),
    )
    if spec.n_vars[0] < 2:
        raise ValueError("corpus verification needs at least 2 variables")
    corpus = oracle.random_corpus(spec)
    violations = []
    for idx, ideal in enumerate(corpus):
        for check in poly.verify_macaulay(ideal, spec.d_max, mode=args.mode):
            if not (check.forward_ok and check.quotient_ok and check.reverse_ok):
                violations.append({"ideal": idx, "degree": check.degree})
    outputs = {"size": len(corpus), "violations": violations}
    if args.lex_probe:
        n_probe, d_probe = args.lex_probe
        report = oracle.lex_growth_report(n_probe, d_probe)
        outputs["lex_probe"] = {
            "n_vars": report["n_vars"],
            "degree": report["degree"],
            "tight": report["tight"],
            "total": report["total"],
        }
    return Report(
        "corpus",
        inputs={
            "seed": spec.seed,
            "n_vars": list(spec.n_vars),
            "gens": list(spec.gens),
            "degrees": list(spec.degrees),
            "d_max": spec.d_max,
            "draws": spec.draws,
            "kinds": list(spec.kinds),
            "mode": args.mode,
        },
        outputs=outputs,
        verdicts={"growth_bounds": _verdict(not violations)},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macaulay",
        description="Exact Macaulay representations, Hilbert function bounds, and Hermitian signature inequalities.",
    )
    parser.add_argument("--format", choices=("text", "structured"), default="text",
                        help="report rendering: human-readable text or JSON")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("macrep", help="Macaulay representation of an integer")
    p.add_argument("A", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("shift", help="apply the shift operator to a representation")
    p.add_argument("A", type=int)
    p.add_argument("n", type=int)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)

    p = sub.add_parser("lemma-scan", help="exhaustively check the complementary-split shift identity")
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--s-max", type=int, default=3)

    p = sub.add_parser("hilbert", help="Hilbert function table of an ideal file")
    p.add_argument("ideal_file")
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--mode", choices=("exact", "modular-checked"), default="exact")

    p = sub.add_parser("verify", help="check the growth bounds on an ideal file")
    p.add_argument("ideal_file")
    p.add_argument("--d-max", type=int, default=6)
    p.add_argument("--mode", choices=("exact", "modular-checked"), default="exact")

    p = sub.add_parser("bridge", help="check the split identity linking the two bound formulations")
    p.add_argument("n_max", type=int)
    p.add_argument("d_max", type=int)

    p = sub.add_parser("hermitian", help="signature, ranks, and bound verdicts for a biform file")
    p.add_argument("biform_file")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--l", type=int, default=1)

    p = sub.add_parser("min-sos", help="least norm power making a biform a sum of squared norms")
    p.add_argument("biform_file")
    p.add_argument("--l-max", type=int, default=8)

    p = sub.add_parser("corpus", help="generate a seeded ideal corpus and verify the growth bounds on it")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--gens-min", type=int, default=1)
    p.add_argument("--gens-max", type=int, default=3)
    p.add_argument("--deg-min", type=int, default=1)
    p.add_argument("--deg-max", type=int, default=3)
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--draws", type=int, default=1)
    p.add_argument("--kinds", default="monomial,dense")
    p.add_argument("--mode", choices=("exact", "modular-checked"), default="exact")
    p.add_argument("--lex-probe", type=int, nargs=2, metavar=("N", "D"), default=None)

    return parser


def run(args: argparse.Namespace) -> Report:
    cmd = args.subcommand
    if cmd == "macrep":
        return cmd_macrep(args.A, args.n)
    if cmd == "shift":
        return cmd_shift(args.A, args.n, args.s, args.t)
    if cmd == "lemma-scan":
        return cmd_lemma_scan(args.m_max, args.d_max, args.s_max)
    if cmd == "hilbert":
        return cmd_hilbert(args.ideal_file, args.d_max, args.mode)
    if cmd == "verify":
        return cmd_verify(args.ideal_file, args.d_max, args.mode)
    if cmd == "bridge":
        return cmd_bridge(args.n_max, args.d_max)
    if cmd == "hermitian":
        return cmd_hermitian(args.biform_file, args.s, args.t, args.l)
    if cmd == "min-sos":
        return cmd_min_sos(args.biform_file, args.l_max)
    if cmd == "corpus":
        return cmd_corpus(args)
    raise AssertionError(f"unhandled subcommand {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.format == "structured" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
