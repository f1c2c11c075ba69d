"""Command line front end: character evaluation, membership tests, generator
tables, random sampling, exponent extraction and the verification suites.

Exit codes are a stable contract: 0 success, 1 suite failure, 2 parse error,
3 precondition failure, 4 internal mismatch.
"""

from __future__ import annotations

import argparse
import datetime
import itertools
import json
import operator
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import serialize
from .errors import (BadShape, DegreeMismatch, NotLevel2, NotSymplectic,
                     SiegelChiError, TooFewUsable)
from .characteristics import Characteristic, act, enumerate_even_mod2, shift
from .character import (chi, chi_from_exponents, chi_generator, delta_sign_bit,
                        extract_abelian_exponents, is_chi_constant_over_even,
                        phase_full, phase_level2)
from .symplectic import (SymplecticMatrix, _random_igusa48, _random_word,
                         alphabet, congruent_to_identity, generator,
                         is_igusa48, is_igusa48_up_to_sign, is_level2,
                         make_matrix, matrix_power, multiply,
                         random_word, word_to_matrix)
from .theta import (DEFAULT_TAIL_TOL, DEFAULT_TOL, SiegelPoint,
                    verify_character, verify_igusa_product)

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4

# Requested tolerance must leave headroom over the theta tail bound,
# otherwise the numeric suite reports TooTight instead of running.
TIGHTNESS_FACTOR = 10.0


@dataclass(frozen=True)
class RunConfig:
    """Settings for one verification run."""

    g: int = 1
    seed: int = 42
    trials: int = 100
    word_length: int = 6
    tol: float = DEFAULT_TOL
    tail_tol: float = DEFAULT_TAIL_TOL
    output: str = "-"

    def validate(self):
        if self.g < 1:
            raise BadShape("g must be at least 1")
        if self.trials < 1:
            raise BadShape("trials must be at least 1")
        if self.word_length < 0:
            raise BadShape("word length must be nonnegative")
        if self.tail_tol <= 0 or self.tol <= 0:
            raise BadShape("tolerances must be positive")

    def too_tight(self) -> bool:
        return self.tol < TIGHTNESS_FACTOR * self.tail_tol


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------

def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadShape(f"cannot read JSON from {path}: {exc}") from exc


def _write(text: str, output: str):
    if output == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _emit_json(data, output: str):
    _write(json.dumps(data, indent=2, sort_keys=True), output)


def _load_matrix(path: str) -> SymplecticMatrix:
    return serialize.matrix_from_dict(_read_json(path))


def _parse_characteristic(text: str, g: int) -> Characteristic:
    try:
        entries = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise BadShape(f"characteristic must be comma-separated integers: {exc}") from exc
    m = Characteristic.from_vector(entries)
    if m.g != g:
        raise BadShape(f"characteristic has degree {m.g}, matrix has degree {g}")
    return m


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_chi(args) -> int:
    mat = _load_matrix(args.matrix)
    m = _parse_characteristic(args.char, mat.g)
    if not is_level2(mat):
        raise NotLevel2("matrix not congruent to I mod 2")
    root = chi(m, mat)
    out = serialize.eighth_root_to_dict(root)
    payload = {"exponent": root.k,
               "value": out["value"],
               "symbol": out["symbol"],
               "phi_mod1": str(phase_level2(m, mat)),
               "delta_sign": delta_sign_bit(m, mat)}
    _emit_json(payload, args.output)
    return EXIT_OK


def _table_rows(g: int):
    rows = []
    all_match = True
    chars = [Characteristic(g=g, m_prime=bits[:g], m_double=bits[g:])
             for bits in itertools.product((0, 1), repeat=2 * g)]
    for kind, i, j in alphabet(g):
        mat = generator(kind, i, j, g)
        for m in chars:
            direct = chi(m, mat).k
            closed = chi_generator(m, kind, i, j).k
            match = direct == closed
            all_match &= match
            rows.append({"generator": f"{kind}_{i}{j}",
                         "m": serialize.characteristic_to_list(m),
                         "chi": direct, "closed_form": closed, "match": match})
    return rows, all_match


def _table_markdown(g: int, rows) -> str:
    lines = [f"# Generator character table, degree {g}", "",
             "| generator | m | chi | closed form | match |",
             "|---|---|---|---|---|"]
    for row in rows:
        m = ",".join(str(x) for x in row["m"])
        lines.append(f"| {row['generator']} | ({m}) | e({row['chi']}/8) "
                     f"| e({row['closed_form']}/8) | {'yes' if row['match'] else 'NO'} |")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if args.g < 1:
        raise BadShape("g must be at least 1")
    rows, all_match = _table_rows(args.g)
    if args.markdown:
        _write(_table_markdown(args.g, rows), args.output)
    else:
        _emit_json({"g": args.g, "rows": rows, "all_match": all_match}, args.output)
    return EXIT_OK if all_match else EXIT_MISMATCH


def cmd_member(args) -> int:
    data = _read_json(args.matrix)
    if not isinstance(data, dict) or "m" not in data:
        raise BadShape("matrix JSON needs an 'm' field")
    try:
        raw = np.array([[operator.index(x) for x in row] for row in data["m"]],
                       dtype=object)
    except (TypeError, ValueError) as exc:
        raise BadShape(f"matrix entries must be integers: {exc}") from exc
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] % 2:
        raise BadShape(f"matrix must be square of even dimension, got {raw.shape}")
    g = raw.shape[0] // 2
    try:
        make_matrix(raw)
        sp = True
    except NotSymplectic:
        sp = False
    a, b = raw[:g, :g], raw[:g, g:]
    c, d = raw[g:, :g], raw[g:, g:]
    ab0 = [(a @ b.T)[i, i] for i in range(g)]
    cd0 = [(c @ d.T)[i, i] for i in range(g)]
    payload = {"sp": sp,
               "level2": congruent_to_identity(raw, 2),
               "level4": congruent_to_identity(raw, 4),
               "igusa48": (congruent_to_identity(raw, 4)
                           and all(x % 8 == 0 for x in ab0)
                           and all(x % 8 == 0 for x in cd0))}
    _emit_json(payload, args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    w = random_word(args.g, args.word_length, args.seed)
    payload = {"word": serialize.word_to_dict(w),
               "matrix": serialize.matrix_to_dict(word_to_matrix(w))}
    _emit_json(payload, args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    mat = _load_matrix(args.matrix)
    if not is_level2(mat):
        raise NotLevel2("matrix not congruent to I mod 2")
    exps = extract_abelian_exponents(mat)
    mismatches = []
    for bits in itertools.product((0, 1), repeat=2 * mat.g):
        m = Characteristic(g=mat.g, m_prime=bits[:mat.g], m_double=bits[mat.g:])
        if chi_from_exponents(m, exps).k != chi(m, mat).k:
            mismatches.append(serialize.characteristic_to_list(m))
    payload = {"exponents": serialize.exponents_to_dict(exps),
               "residual_check": "ok" if not mismatches else "failed",
               "checked_points": 4 ** mat.g,
               "mismatches": mismatches}
    _emit_json(payload, args.output)
    return EXIT_OK if not mismatches else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------

def _rng(config: RunConfig, suite: str, index) -> random.Random:
    return random.Random(f"{config.seed}.{suite}.{index}")


def _all_binary(g: int):
    return [Characteristic(g=g, m_prime=bits[:g], m_double=bits[g:])
            for bits in itertools.product((0, 1), repeat=2 * g)]


def _random_point(g: int, rng: random.Random) -> SiegelPoint:
    re = [[rng.uniform(-0.4, 0.4) for _ in range(g)] for _ in range(g)]
    re = (np.array(re) + np.array(re).T) / 2.0
    w = np.array([[rng.uniform(-0.3, 0.3) for _ in range(g)] for _ in range(g)])
    im = (0.6 + rng.uniform(0.0, 0.4)) * np.eye(g) + w @ w.T
    return SiegelPoint.make(re + 1j * im)


def _suite_homomorphism(config: RunConfig) -> dict:
    g = config.g
    chars = _all_binary(g)
    failures = 0
    for t in range(config.trials):
        rng = _rng(config, "A", t)
        m1 = word_to_matrix(_random_word(g, rng.randint(0, config.word_length), rng))
        m2 = word_to_matrix(_random_word(g, rng.randint(0, config.word_length), rng))
        prod = multiply(m1, m2)
        for m in chars:
            if (chi(m, m1).k + chi(m, m2).k) % 8 != chi(m, prod).k:
                failures += 1
    return {"trials": config.trials, "failures": failures, "passed": failures == 0}


def _suite_triviality(config: RunConfig) -> dict:
    g = config.g
    chars = _all_binary(g)
    failures = 0
    for t in range(config.trials):
        mat = _random_igusa48(g, _rng(config, "B", t))
        if not is_igusa48(mat):
            failures += 1
            continue
        if any(chi(m, mat).k != 0 for m in chars):
            failures += 1
    return {"trials": config.trials, "failures": failures, "passed": failures == 0}


def _numeric_trial(config: RunConfig, t: int) -> dict:
    rng = _rng(config, "C", t)
    g = config.g
    length = rng.randint(1, min(4, max(1, config.word_length)))
    mat = word_to_matrix(_random_word(g, length, rng))
    point = _random_point(g, rng)
    try:
        report = verify_character(mat, point, tol=config.tol, tail_tol=config.tail_tol)
        return {"passed": report.passed, "max_deviation": report.max_deviation}
    except TooFewUsable as exc:
        return {"passed": False, "error": str(exc)}


def _product_trial(config: RunConfig, t: int) -> dict:
    rng = _rng(config, "Cp", t)
    g = config.g
    mat = word_to_matrix(_random_word(g, rng.randint(1, 3), rng))
    point = _random_point(g, rng)
    evens = enumerate_even_mod2(g)
    m = rng.choice(evens)
    n = rng.choice(evens)
    try:
        report = verify_igusa_product(m, n, mat, point,
                                      tol=config.tol, tail_tol=config.tail_tol)
        return {"passed": report.passed, "max_deviation": report.max_deviation}
    except TooFewUsable as exc:
        return {"passed": False, "error": str(exc)}


def _suite_numeric(config: RunConfig, threads: int) -> dict:
    if config.too_tight():
        return {"character_trials": 0, "product_trials": 0, "failures": 1,
                "passed": False, "diagnostic": "TooTight",
                "detail": (f"tol={config.tol:g} leaves no headroom over "
                           f"tail_tol={config.tail_tol:g}; need tol >= "
                           f"{TIGHTNESS_FACTOR:g} * tail_tol")}
    n_char = max(1, config.trials // 5)
    n_prod = max(1, config.trials // 10)
    char_jobs = [(config, t) for t in range(n_char)]
    prod_jobs = [(config, t) for t in range(n_prod)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            char_results = list(pool.map(lambda j: _numeric_trial(*j), char_jobs))
            prod_results = list(pool.map(lambda j: _product_trial(*j), prod_jobs))
    else:
        char_results = [_numeric_trial(*j) for j in char_jobs]
        prod_results = [_product_trial(*j) for j in prod_jobs]
    failures = sum(1 for r in char_results + prod_results if not r["passed"])
    deviations = [r.get("max_deviation", 0.0) for r in char_results + prod_results]
    return {"character_trials": n_char, "product_trials": n_prod,
            "failures": failures, "max_deviation": max(deviations, default=0.0),
            "passed": failures == 0}


def _pool_element(config: RunConfig, t: int) -> SymplecticMatrix:
    """Mixed pool: plain words, subgroup constructions, and near-misses
    that are I mod 4 with a diagonal of a b^T or c d^T equal to 4 mod 8."""
    rng = _rng(config, "D", t)
    g = config.g
    draw = rng.random()
    if draw < 0.5:
        return word_to_matrix(_random_word(g, rng.randint(1, config.word_length), rng))
    if draw < 0.8:
        return _random_igusa48(g, rng)
    i = rng.randint(1, g)
    square = matrix_power(generator(rng.choice("BC"), i, i, g), 2)
    return multiply(square, _random_igusa48(g, rng))


def _suite_equivalence(config: RunConfig) -> dict:
    literal = 0
    up_to_sign = 0
    coset = 0
    for t in range(config.trials):
        mat = _pool_element(config, t)
        constant = is_chi_constant_over_even(mat)
        strict = is_igusa48(mat)
        signed = is_igusa48_up_to_sign(mat)
        if constant != strict:
            literal += 1
        if constant != signed:
            up_to_sign += 1
        if signed and not strict:
            coset += 1
    return {"trials": config.trials,
            "discrepancies_up_to_sign": up_to_sign,
            "literal_discrepancies": literal,
            "sign_coset_elements": coset,
            "passed": up_to_sign == 0}


def _suite_phase_congruences(config: RunConfig) -> dict:
    g = config.g
    failures = 0
    for t in range(config.trials):
        rng = _rng(config, "E", t)
        mat = word_to_matrix(_random_word(g, rng.randint(1, config.word_length), rng))
        other = word_to_matrix(_random_word(g, rng.randint(1, config.word_length), rng))
        m = Characteristic.from_vector([rng.randint(-4, 4) for _ in range(2 * g)])
        bump = Characteristic.from_vector([rng.randint(-3, 3) for _ in range(2 * g)])
        base = phase_level2(m, mat)
        if phase_level2(shift(m, bump), mat) != base:
            failures += 1
        if phase_level2(act(other, m), mat) != base:
            failures += 1
        if phase_full(m, mat) != base:
            failures += 1
    return {"trials": config.trials, "failures": failures, "passed": failures == 0}


def cmd_verify(args) -> int:
    config = RunConfig(g=args.g, seed=args.seed, trials=args.trials,
                       word_length=args.word_length, tol=args.tol,
                       tail_tol=args.tail_tol, output=args.output)
    config.validate()
    threads = max(1, int(os.environ.get("SIEGEL_CHAR_THREADS", "1")))
    suites = {}
    runners = [("A_homomorphism", _suite_homomorphism),
               ("B_triviality", _suite_triviality),
               ("C_numeric", lambda c: _suite_numeric(c, threads)),
               ("D_equivalence", _suite_equivalence),
               ("E_phase_congruences", _suite_phase_congruences)]
    for name, runner in runners:
        try:
            suites[name] = runner(config)
        except SiegelChiError as exc:  # partial report still gets written
            suites[name] = {"passed": False, "error": str(exc)}
    passed = all(s.get("passed", False) for s in suites.values())
    report = {"config": {"g": config.g, "seed": config.seed,
                         "trials": config.trials,
                         "word_length": config.word_length,
                         "tol": config.tol, "tail_tol": config.tail_tol},
              "suites": suites, "passed": passed}
    if not args.no_timestamp:
        report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    _emit_json(report, args.output)
    return EXIT_OK if passed else EXIT_SUITE_FAILURE


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegelchi",
        description="Characters of the level-2 symplectic congruence group "
                    "and theta-constant verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, matrix=False, char=False, g=False, seed=False,
                   trials=False, word_length=False, tols=False, markdown=False,
                   no_timestamp=False):
        if matrix:
            p.add_argument("--matrix", required=True,
                           help="path to matrix JSON, or - for stdin")
        if char:
            p.add_argument("--char", required=True,
                           help="characteristic as c1,...,c2g")
        if g:
            p.add_argument("--g", type=int, default=1, help="degree (default 1)")
        if seed:
            p.add_argument("--seed", type=int, default=42)
        if trials:
            p.add_argument("--trials", type=int, default=100)
        if word_length:
            p.add_argument("--word-length", dest="word_length", type=int, default=6)
        if tols:
            p.add_argument("--tol", type=float, default=DEFAULT_TOL)
            p.add_argument("--tail-tol", dest="tail_tol", type=float,
                           default=DEFAULT_TAIL_TOL)
        if markdown:
            p.add_argument("--markdown", action="store_true",
                           help="render a markdown table instead of JSON")
        if no_timestamp:
            p.add_argument("--no-timestamp", dest="no_timestamp",
                           action="store_true",
                           help="omit the timestamp for byte-identical reports")
        p.add_argument("--output", default="-", help="output file, - for stdout")

    p = sub.add_parser("chi", help="evaluate the character at one characteristic")
    add_common(p, matrix=True, char=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("table", help="generator character table, both code paths")
    add_common(p, g=True, markdown=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the exact and numeric suites")
    add_common(p, g=True, seed=True, trials=True, word_length=True, tols=True,
               no_timestamp=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("member", help="membership in the congruence subgroups")
    add_common(p, matrix=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("random", help="sample a random generator word")
    add_common(p, g=True, seed=True, word_length=True)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("decompose", help="recover exponents mod the commutator subgroup")
    add_common(p, matrix=True)
    p.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadShape, NotSymplectic) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotLevel2, DegreeMismatch, SiegelChiError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
