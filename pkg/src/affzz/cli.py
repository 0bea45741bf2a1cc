"""Command-line front end: ``affzz <command> [flags]``.

Every command prints one JSON document (or a plain table with
``--format table``) and exits 0 on success, 1 when a verification suite
finds a counterexample and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .braid import BraidParseError, BraidWord, all_words, generators, parse_word, random_words, relators, rho
from .complexes import (
    InvariantViolation,
    ProjComplex,
    apply_generator,
    apply_word,
    equivalent,
    hom_poincare,
    identify,
    k_class,
    minimize,
    projective,
    worker_count,
)
from .curves import (
    basic_curve,
    chi_shift,
    geometric_intersection_with_basic,
    k_strings,
    trigraded_intersection_with_basic,
    twist,
    twist_word_action,
)
from .linrep import REPS, check_sigma0_squared, check_specialization, rep_matrix

SUITES = ("relations", "specialization", "inverse-functors", "decat", "homs-vs-itri", "central")


@dataclass
class CommandConfig:
    command: str
    n: int
    word: str = ""
    word2: str | None = None
    k: int = 1
    l: int = 1
    rep: str = "aks"
    format: str = "json"
    seed: int = 0
    maxlen: int = 3
    suite: str | None = None


class UsageError(ValueError):
    pass


def _dump(obj: object) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _word(cfg: CommandConfig, text: str | None = None) -> BraidWord:
    return parse_word(cfg.word if text is None else text, cfg.n)


def _index(cfg: CommandConfig, value: int, name: str) -> int:
    if not 1 <= value <= cfg.n:
        raise UsageError(f"--{name} must lie in 1..{cfg.n}")
    return value


# ---------------------------------------------------------------------------
# single computations


def cmd_matrix(cfg: CommandConfig) -> tuple[int, str]:
    m = rep_matrix(cfg.rep, _word(cfg))
    if cfg.format == "table":
        return 0, m.table()
    return 0, _dump({"rep": cfg.rep, "n": cfg.n, "word": str(_word(cfg)), "matrix": m.to_json()})


def cmd_complex(cfg: CommandConfig) -> tuple[int, str]:
    l = _index(cfg, cfg.l, "l")
    C = minimize(apply_word(_word(cfg), projective(cfg.n, l)))
    if cfg.format == "table":
        lines = [f"P{s.vertex}  coh={s.coh} g1={s.g1} g3={s.g3}" for s in C.canonical().summands]
        return 0, "\n".join(lines)
    return 0, _dump(C.to_json())


def cmd_hom(cfg: CommandConfig) -> tuple[int, str]:
    k, l = _index(cfg, cfg.k, "k"), _index(cfg, cfg.l, "l")
    C = minimize(apply_word(_word(cfg), projective(cfg.n, l)))
    p = hom_poincare(k, C)
    if cfg.format == "table":
        return 0, f"Hom(P{k}, F(P{l})) : {p}"
    return 0, _dump({"n": cfg.n, "word": str(_word(cfg)), "k": k, "l": l, "poincare": str(p)})


def cmd_itri(cfg: CommandConfig) -> tuple[int, str]:
    k, l = _index(cfg, cfg.k, "k"), _index(cfg, cfg.l, "l")
    c = twist_word_action(_word(cfg), basic_curve(cfg.n, l))
    p = trigraded_intersection_with_basic(k, c)
    g = geometric_intersection_with_basic(k, c)
    if cfg.format == "table":
        return 0, f"Itri(b{k}, w(b{l})) : {p}\nI(b{k}, w(b{l})) : {g}"
    out = {
        "n": cfg.n,
        "word": str(_word(cfg)),
        "k": k,
        "l": l,
        "curve": c.to_json(),
        "strings": [s.to_json() for s in k_strings(c, k)],
        "itri": str(p),
        "geometric": str(g),
    }
    return 0, _dump(out)


def cmd_identify(cfg: CommandConfig) -> tuple[int, str]:
    w = _word(cfg)
    if cfg.word2 is not None:
        w = w * _word(cfg, cfg.word2).inverse()
    v = identify(w)
    if cfg.format == "table":
        return 0, v.kind if v.kind != "central_power" else f"central_power {v.power}"
    return 0, _dump(v.to_json())


# ---------------------------------------------------------------------------
# verification suites

Case = Callable[[], "dict | None"]


def _run_cases(cases: Sequence[Case]) -> tuple[int, dict | None]:
    """Run cases (ordered) on a worker pool; return (#cases, first failure)."""

    def guarded(case: Case) -> dict | None:
        try:
            return case()
        except InvariantViolation as exc:
            return {"error": str(exc)}

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results: Iterable = ex.map(guarded, cases)
            results = list(results)
    else:
        results = map(guarded, cases)
    for r in results:
        if r is not None:
            return len(cases), r
    return len(cases), None


def _same_object(a: ProjComplex, b: ProjComplex) -> bool:
    return equivalent(minimize(a), minimize(b))


def suite_relations(cfg: CommandConfig) -> list[Case]:
    n = cfg.n
    cases: list[Case] = []
    for lhs, rhs in relators(n):
        for rep in REPS:
            def c(lhs=lhs, rhs=rhs, rep=rep):
                if rep_matrix(rep, lhs).rows != rep_matrix(rep, rhs).rows:
                    return {"rep": rep, "lhs": str(lhs), "rhs": str(rhs)}
                return None

            cases.append(c)
        for i in range(1, n + 1):
            def c(lhs=lhs, rhs=rhs, i=i):
                if not _same_object(apply_word(lhs, projective(n, i)), apply_word(rhs, projective(n, i))):
                    return {"complex": i, "lhs": str(lhs), "rhs": str(rhs)}
                b = basic_curve(n, i)
                if twist_word_action(lhs, b) != twist_word_action(rhs, b):
                    return {"curve": i, "lhs": str(lhs), "rhs": str(rhs)}
                return None

            cases.append(c)
    cases.append(lambda: None if check_sigma0_squared(n) else {"sigma0_squared": n})
    return cases


def suite_specialization(cfg: CommandConfig) -> list[Case]:
    words = random_words(cfg.n, 100, max(cfg.maxlen, 1), cfg.seed)
    return [lambda w=w: None if check_specialization(w) else {"word": str(w)} for w in words]


def suite_inverse_functors(cfg: CommandConfig) -> list[Case]:
    n = cfg.n
    cases: list[Case] = []
    for g in generators(n):
        for i in range(1, n + 1):
            def c(g=g, i=i):
                P = projective(n, i)
                back = minimize(apply_generator(g.inverse(), apply_generator(g, P)))
                if back.canonical() != P.canonical():
                    return {"generator": str(g), "i": i, "result": back.to_json()}
                b = basic_curve(n, i)
                if twist(g.inverse(), twist(g, b)) != b:
                    return {"generator": str(g), "curve": i}
                return None

            cases.append(c)
    return cases


def suite_decat(cfg: CommandConfig) -> list[Case]:
    n = cfg.n
    words = random_words(n, 50, max(cfg.maxlen, 1), cfg.seed)

    def c(w: BraidWord) -> dict | None:
        m = rep_matrix("aks", w)
        for i in range(1, n + 1):
            cls = k_class(minimize(apply_word(w, projective(n, i))))
            if cls != m.column(i - 1):
                return {"word": str(w), "i": i, "k_class": [str(p) for p in cls], "column": [str(p) for p in m.column(i - 1)]}
        return None

    return [lambda w=w: c(w) for w in words]


def suite_homs_vs_itri(cfg: CommandConfig) -> list[Case]:
    n = cfg.n
    words = list(all_words(n, cfg.maxlen)) + random_words(n, 20, 6, cfg.seed)

    def c(w: BraidWord, l: int) -> dict | None:
        curve = twist_word_action(w, basic_curve(n, l))
        C = minimize(apply_word(w, projective(n, l)))
        for k in range(1, n + 1):
            h = hom_poincare(k, C)
            it = trigraded_intersection_with_basic(k, curve)
            if h != it:
                return {"word": str(w), "k": k, "l": l, "hom": str(h), "itri": str(it)}
            if 2 * geometric_intersection_with_basic(k, curve) != it.at_one():
                return {"word": str(w), "k": k, "l": l, "geometric": str(geometric_intersection_with_basic(k, curve))}
        return None

    return [lambda w=w, l=l: c(w, l) for w in words for l in range(1, n + 1)]


def suite_central(cfg: CommandConfig) -> list[Case]:
    n = cfg.n
    rn = BraidWord(n, (rho(1),) * n)
    cases: list[Case] = []

    def power() -> dict | None:
        v = identify(rn)
        return None if (v.kind, v.power) == ("central_power", 1) else {"word": str(rn), "verdict": v.to_json()}

    cases.append(power)
    for g in generators(n):
        def commute(g=g):
            w = rn * BraidWord(n, (g,)) * rn.inverse() * BraidWord(n, (g.inverse(),))
            v = identify(w)
            return None if v.kind == "identity" else {"word": str(w), "verdict": v.to_json()}

        cases.append(commute)
    for i in range(1, n + 1):
        def on_object(i=i):
            got = minimize(apply_word(rn, projective(n, i)))
            if got.canonical() != projective(n, i, 0, 0, -1).canonical():
                return {"i": i, "result": got.to_json()}
            b = basic_curve(n, i)
            if twist_word_action(rn, b) != chi_shift(b, (-n, n, 1)):
                return {"curve": i}
            return None

        cases.append(on_object)
    return cases


SUITE_BUILDERS: dict[str, Callable[[CommandConfig], list[Case]]] = {
    "relations": suite_relations,
    "specialization": suite_specialization,
    "inverse-functors": suite_inverse_functors,
    "decat": suite_decat,
    "homs-vs-itri": suite_homs_vs_itri,
    "central": suite_central,
}


def cmd_check(cfg: CommandConfig) -> tuple[int, str]:
    if cfg.suite not in SUITE_BUILDERS:
        raise UsageError(f"unknown suite {cfg.suite!r}")
    total, failure = _run_cases(SUITE_BUILDERS[cfg.suite](cfg))
    report: dict = {"suite": cfg.suite, "n": cfg.n, "cases": total, "status": "pass" if failure is None else "fail"}
    if failure is not None:
        report["counterexample"] = failure
    if cfg.format == "table":
        text = f"{cfg.suite} n={cfg.n}: {report['status']} ({total} cases)"
        if failure is not None:
            text += "\n" + _dump(failure)
        return (0 if failure is None else 1), text
    return (0 if failure is None else 1), _dump(report)


COMMANDS = {
    "matrix": cmd_matrix,
    "complex": cmd_complex,
    "hom": cmd_hom,
    "itri": cmd_itri,
    "identify": cmd_identify,
    "check": cmd_check,
}


def validate(cfg: CommandConfig) -> None:
    """Reject malformed input before any computation starts."""
    if cfg.n < 3:
        raise UsageError("--n must be at least 3")
    _word(cfg)
    if cfg.word2 is not None:
        _word(cfg, cfg.word2)
    if cfg.command in ("complex", "hom", "itri"):
        _index(cfg, cfg.l, "l")
    if cfg.command in ("hom", "itri"):
        _index(cfg, cfg.k, "k")


def run(cfg: CommandConfig) -> tuple[int, str]:
    validate(cfg)
    return COMMANDS[cfg.command](cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affzz", description="Extended affine braid group actions on zigzag-type algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--word", default="")
        s.add_argument("--word2")
        s.add_argument("--k", type=int, default=1)
        s.add_argument("--l", type=int, default=1)
        s.add_argument("--rep", choices=REPS, default="aks")
        s.add_argument("--format", choices=("json", "table"), default="json")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--maxlen", type=int, default=3)
        s.add_argument("--suite", choices=SUITES, required=(name == "check"))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CommandConfig(**vars(args))
    try:
        validate(cfg)
    except (BraidParseError, UsageError, ValueError) as exc:
        print(_dump({"error": str(exc)}), file=sys.stderr)
        return 2
    status, text = COMMANDS[cfg.command](cfg)
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
