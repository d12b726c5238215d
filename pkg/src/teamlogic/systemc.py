"""System C: finite entailment relations and the five closure rules.

An entailment relation is a finite universe of formulas together with a
set of index pairs (i, j) meaning ``universe[i] |~ universe[j]``.  The
rules checked::

    Ref  phi |~ phi
    LLE  phi ≡ psi,  phi |~ gamma  =>  psi |~ gamma
    RW   phi ⊨ psi,  gamma |~ phi  =>  gamma |~ psi
    CM   phi |~ psi,  phi |~ gamma  =>  phi & psi |~ gamma
    Cut  phi & psi |~ gamma,  phi |~ psi  =>  phi |~ gamma

⊨ and ≡ are the brute-force semantic judgements of the relation's logic
over its domain.  CM and Cut need the universe closed under conjunction:
for every ordered pair of members, some member must be the syntactic
conjunction or semantically equivalent to it; a gap is a precondition
error.  ``close_under_conjunction`` adds the missing syntactic
conjunctions round by round up to a caller-chosen depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .formula import And, Formula, is_pl, parse, render
from .relmodel import RelationalModel, VerificationReport, Witness, entails
from .semantics import semantic_entails, semantic_equiv
from .teams import Domain

RULES = ("ref", "lle", "rw", "cm", "cut")


@dataclass(frozen=True)
class EntailmentRelation:
    domain: Domain
    universe: tuple[Formula, ...]
    pairs: frozenset[tuple[int, int]]
    logic: str = "pdl"

    def __post_init__(self):
        if self.logic not in ("pdl", "tpl"):
            raise ValueError(f"unknown logic {self.logic!r}")
        if self.logic == "tpl" and not all(is_pl(f) for f in self.universe):
            raise ValueError("tpl universes admit no dependence atoms")
        n = len(self.universe)
        for i, j in self.pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) is outside the universe")

    def holds(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs


@dataclass(frozen=True)
class RuleViolation:
    """A rule instance whose premises hold but whose conclusion is missing."""

    rule: str
    premises: tuple[tuple[int, int], ...]
    conclusion: tuple[int, int]
    side: str = ""

    def describe(self, universe: Sequence[Formula]) -> str:
        parts = [f"{render(universe[i])} |~ {render(universe[j])}" for i, j in self.premises]
        if self.side:
            parts.append(self.side)
        concl = f"{render(universe[self.conclusion[0]])} |~ {render(universe[self.conclusion[1]])}"
        premise_text = "; ".join(parts) if parts else "(no premises)"
        return f"{self.rule}: {premise_text} => missing {concl}"


def induced_relation(
    m: RelationalModel,
    universe: Sequence[Formula],
    logic: str = "pdl",
    engine: str | None = None,
) -> EntailmentRelation:
    """The relation a model induces on a universe: (i, j) iff entails(m, i, j)."""
    if engine is None:
        engine = "flat" if logic == "tpl" else "generic"
    uni = tuple(universe)
    pairs = set()
    for i, phi in enumerate(uni):
        for j, psi in enumerate(uni):
            if entails(m, phi, psi, engine=engine):
                pairs.add((i, j))
    return EntailmentRelation(m.domain, uni, frozenset(pairs), logic=logic)


def _entail_matrix(r: EntailmentRelation, cap: int) -> list[list[bool]]:
    n = len(r.universe)
    mat = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mat[i][j] = semantic_entails(
                r.universe[i], r.universe[j], r.domain, logic=r.logic, cap=cap
            )
    return mat


def _conj_table(r: EntailmentRelation, cap: int) -> dict[tuple[int, int], int]:
    """Index of a member representing And(universe[i], universe[j]) per pair."""
    uni = r.universe
    syntactic = {f: k for k, f in reversed(list(enumerate(uni)))}
    table: dict[tuple[int, int], int] = {}
    missing = []
    for i, phi in enumerate(uni):
        for j, psi in enumerate(uni):
            conj = And(phi, psi)
            k = syntactic.get(conj)
            if k is None:
                for cand, g in enumerate(uni):
                    if semantic_equiv(conj, g, r.domain, logic=r.logic, cap=cap):
                        k = cand
                        break
            if k is None:
                missing.append(f"{render(phi)} & {render(psi)}")
            else:
                table[(i, j)] = k
    if missing:
        raise ValueError(
            "universe is not conjunction-closed; missing: " + "; ".join(missing)
        )
    return table


def check_rule(r: EntailmentRelation, rule: str, cap: int = 4) -> list[RuleViolation]:
    """All violations of one rule.  CM and Cut refuse non-closed universes."""
    n = len(r.universe)
    out: list[RuleViolation] = []
    if rule == "ref":
        for i in range(n):
            if not r.holds(i, i):
                out.append(RuleViolation("ref", (), (i, i)))
        return out
    if rule == "lle":
        mat = _entail_matrix(r, cap)
        for i in range(n):
            for j in range(n):
                if i == j or not (mat[i][j] and mat[j][i]):
                    continue
                for k in range(n):
                    if r.holds(i, k) and not r.holds(j, k):
                        out.append(
                            RuleViolation(
                                "lle",
                                ((i, k),),
                                (j, k),
                                side=f"{render(r.universe[i])} == {render(r.universe[j])}",
                            )
                        )
        return out
    if rule == "rw":
        mat = _entail_matrix(r, cap)
        for i in range(n):
            for j in range(n):
                if not mat[i][j]:
                    continue
                for k in range(n):
                    if r.holds(k, i) and not r.holds(k, j):
                        out.append(
                            RuleViolation(
                                "rw",
                                ((k, i),),
                                (k, j),
                                side=f"{render(r.universe[i])} entails {render(r.universe[j])}",
                            )
                        )
        return out
    if rule == "cm":
        conj = _conj_table(r, cap)
        for i, j in sorted(r.pairs):
            c = conj[(i, j)]
            for k in range(n):
                if r.holds(i, k) and not r.holds(c, k):
                    out.append(RuleViolation("cm", ((i, j), (i, k)), (c, k)))
        return out
    if rule == "cut":
        conj = _conj_table(r, cap)
        for i, j in sorted(r.pairs):
            c = conj[(i, j)]
            for k in range(n):
                if r.holds(c, k) and not r.holds(i, k):
                    out.append(RuleViolation("cut", ((c, k), (i, j)), (i, k)))
        return out
    raise ValueError(f"unknown rule {rule!r}; expected one of {', '.join(RULES)}")


def check_system_c(r: EntailmentRelation, cap: int = 4) -> VerificationReport:
    """Run all five rules and aggregate the violations into one report."""
    witnesses = []
    for rule in RULES:
        for v in check_rule(r, rule, cap=cap):
            witnesses.append(Witness(subject=rule, detail=v.describe(r.universe)))
    return VerificationReport(
        prop="system C", passed=not witnesses, witnesses=witnesses
    )


def close_under_conjunction(
    universe: Sequence[Formula],
    domain: Domain,
    logic: str = "pdl",
    depth: int = 3,
    cap: int = 4,
) -> tuple[Formula, ...]:
    """Add missing syntactic conjunctions, round by round, up to ``depth``.

    A pair already represented by a syntactically equal or semantically
    equivalent member is skipped, so closure normally reaches a fixpoint in
    a round or two.
    """
    uni = list(universe)

    def covered(conj: Formula) -> bool:
        return any(
            g == conj or semantic_equiv(conj, g, domain, logic=logic, cap=cap)
            for g in uni
        )

    for _ in range(depth):
        added = False
        for phi in list(uni):
            for psi in list(uni):
                conj = And(phi, psi)
                if not covered(conj):
                    uni.append(conj)
                    added = True
        if not added:
            break
    return tuple(uni)


def universe_from_lines(lines: Sequence[str]) -> list[Formula]:
    """One formula per line; blank lines and '#' comments are skipped."""
    out = []
    for raw in lines:
        text = raw.split("#", 1)[0].strip()
        if text:
            out.append(parse(text))
    return out


def load_universe(path: str) -> list[Formula]:
    with open(path, "r", encoding="utf-8") as fh:
        return universe_from_lines(fh.readlines())
