"""Scaling benchmark for the two team evaluators.

Rows report the median wall time of a single evaluation per team size
(logic, team_size, formula_size, median_ns).  The tpl rows drive
``eval_team_flat`` on random plain formulas; the pdl rows drive the
generic split-searching ``eval_team``.  Identical seeds produce identical
case sequences; ``cases_digest`` fingerprints the sequence so runs can be
compared.

The ``split-hard`` family documents the generic engine's worst case.  Its
formula is ``(dep(p) | dep(q)) | F`` and its size-t team contains all four
(p, q) combinations (padded with auxiliary variables to keep rows
distinct).  No split works: a subteam constant in p leaves a complement in
which q takes both values, and the empty side forces the whole team on the
other disjunct.  The trailing false disjunct makes the left-first split
search re-examine the inner disjunction on every subteam, so the search
visits on the order of 3^t (subteam, disjunct) pairs, against the flat
engine's linear growth.
"""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import dataclass

from .formula import Bottom, Dep, Formula, Or, node_count, render
from .gen import random_formula, random_pl_formula, random_team
from .semantics import eval_team, eval_team_flat
from .teams import Domain, Team, Valuation, team_literal

MAX_BENCH_TEAM = 20
RANDOM_FORMULA_SIZE = 16


def split_hard_formula() -> Formula:
    return Or(Or(Dep((), "p"), Dep((), "q")), Bottom())


def bench_domain(max_team_size: int) -> Domain:
    n = 4
    while (1 << n) < max_team_size:
        n += 1
    names = ("p", "q") + tuple(f"x{i}" for i in range(n - 2))
    return Domain(names)


def split_hard_team(domain: Domain, size: int) -> Team:
    """Size-t team cycling through all four (p, q) combinations."""
    n = len(domain)
    if size > (1 << n):
        raise ValueError(f"domain holds at most {1 << n} distinct valuations")
    rows = []
    for i in range(size):
        bits = tuple((i >> j) & 1 for j in range(n))
        rows.append(Valuation(domain, bits))
    return Team(domain, frozenset(rows))


@dataclass(frozen=True)
class BenchRow:
    logic: str
    team_size: int
    formula_size: int
    median_ns: int


@dataclass(frozen=True)
class BenchResult:
    rows: tuple[BenchRow, ...]
    cases_digest: str


def run_bench(
    logic: str = "tpl",
    max_team_size: int = 16,
    trials: int = 7,
    seed: int = 0,
    family: str = "random",
) -> BenchResult:
    if logic not in ("tpl", "pdl"):
        raise ValueError(f"unknown logic {logic!r}")
    if family not in ("random", "split-hard"):
        raise ValueError(f"unknown family {family!r}")
    if family == "split-hard" and logic != "pdl":
        raise ValueError("the split-hard family drives the generic pdl engine")
    if not (2 <= max_team_size <= MAX_BENCH_TEAM):
        raise ValueError(f"max team size must lie in 2..{MAX_BENCH_TEAM}")
    if trials < 1:
        raise ValueError("at least one trial per row")
    rng = random.Random(seed)
    domain = bench_domain(max_team_size)
    digest = hashlib.sha256()
    rows = []
    for size in range(2, max_team_size + 1, 2):
        samples = []
        sizes = []
        for _ in range(trials):
            if family == "split-hard":
                team = split_hard_team(domain, size)
                formula = split_hard_formula()
            else:
                team = random_team(rng, domain, size)
                if logic == "tpl":
                    formula = random_pl_formula(rng, domain, RANDOM_FORMULA_SIZE)
                else:
                    formula = random_formula(rng, domain, RANDOM_FORMULA_SIZE)
            digest.update(
                f"{logic}|{size}|{render(formula)}|{team_literal(team)}\n".encode()
            )
            sizes.append(node_count(formula))
            if logic == "tpl":
                start = time.perf_counter_ns()
                eval_team_flat(team, formula)
                samples.append(time.perf_counter_ns() - start)
            else:
                start = time.perf_counter_ns()
                eval_team(team, formula)
                samples.append(time.perf_counter_ns() - start)
        rows.append(
            BenchRow(
                logic=logic,
                team_size=size,
                formula_size=int(statistics.median(sizes)),
                median_ns=int(statistics.median(samples)),
            )
        )
    return BenchResult(tuple(rows), digest.hexdigest())


def format_rows(result: BenchResult) -> str:
    header = f"{'logic':<6} {'team_size':>9} {'formula_size':>12} {'median_ns':>12}"
    lines = [header]
    for r in result.rows:
        lines.append(
            f"{r.logic:<6} {r.team_size:>9} {r.formula_size:>12} {r.median_ns:>12}"
        )
    lines.append(f"# cases sha256 {result.cases_digest}")
    return "\n".join(lines)
