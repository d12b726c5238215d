"""Team evaluation engines and brute-force structural checks.

The team clauses: a team satisfies a literal iff every member does; T holds
on every team and F only on the empty team; conjunction is pointwise;
disjunction asks for Y, Z with Y ∪ Z = X satisfying the disjuncts; and
dep(args; b) holds iff members agreeing on args agree on b.

``eval_team`` searches disjunction splits over the 2^|X| *partitions*
(Y, X \\ Y) rather than all covers.  Both supported logics are downward
closed, so if a cover (Y, Z) works then the partition (Y, X \\ Y) works
too; the cover-by-cover evaluator lives in :mod:`teamlogic.oracle` and
exists to keep this shortcut honest.  Results are memoized per invocation,
keyed by (subteam mask, subformula identity).

``eval_team_flat`` is the linear-time evaluator for plain propositional
formulas: by flatness a team satisfies one iff every member does.

The brute-force checkers (downward closure, flatness, semantic entailment)
enumerate every team over the domain and refuse domains above the
enumeration cap.  They are pure; callers may run them concurrently.
"""

from __future__ import annotations

from typing import Iterable

from .formula import (
    And,
    Bottom,
    Dep,
    Formula,
    NegLit,
    Or,
    PosLit,
    Top,
    is_pl,
    render,
    vars_of,
)
from .teams import DEFAULT_ENUM_CAP, Domain, Team, Valuation, all_teams

DEFAULT_TEAM_CAP = 20


def _require_vars(d: Domain, f: Formula) -> None:
    extra = vars_of(f) - set(d.vars)
    if extra:
        names = ", ".join(sorted(extra))
        raise ValueError(f"formula uses variables outside the domain: {names}")


def eval_classical(v: Valuation, f: Formula) -> bool:
    """Single-valuation truth of a plain propositional formula."""
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, PosLit):
        return v[f.var] == 1
    if isinstance(f, NegLit):
        return v[f.var] == 0
    if isinstance(f, And):
        return eval_classical(v, f.left) and eval_classical(v, f.right)
    if isinstance(f, Or):
        return eval_classical(v, f.left) or eval_classical(v, f.right)
    if isinstance(f, Dep):
        raise ValueError("dependence atoms have no single-valuation semantics")
    raise TypeError(f"not a formula node: {f!r}")


def check_dep(t: Team, args: Iterable[str], target: str) -> bool:
    """dep(args; target) on t: members agreeing on args agree on target."""
    args = tuple(args)
    seen: dict[tuple[int, ...], int] = {}
    for v in t.members:
        key = tuple(v[a] for a in args)
        val = v[target]
        if seen.setdefault(key, val) != val:
            return False
    return True


def eval_team(t: Team, f: Formula, max_team_size: int = DEFAULT_TEAM_CAP) -> bool:
    """Team satisfaction with the partition-based disjunction search."""
    _require_vars(t.domain, f)
    if len(t) > max_team_size:
        raise ValueError(
            f"team has {len(t)} members, above the evaluation cap of "
            f"{max_team_size}; pass a larger max_team_size to proceed"
        )
    members = sorted(t.members, key=lambda v: v.rank)
    n = len(members)
    full = (1 << n) - 1
    # ones[j]: mask of members assigning 1 to domain variable j
    ones = [0] * len(t.domain)
    for i, v in enumerate(members):
        for j, b in enumerate(v.bits):
            if b:
                ones[j] |= 1 << i
    pos = {var: j for j, var in enumerate(t.domain.vars)}
    memo: dict[tuple[int, int], bool] = {}

    def ev(mask: int, g: Formula) -> bool:
        key = (mask, id(g))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(g, Top):
            res = True
        elif isinstance(g, Bottom):
            res = mask == 0
        elif isinstance(g, PosLit):
            res = mask & (full ^ ones[pos[g.var]]) == 0
        elif isinstance(g, NegLit):
            res = mask & ones[pos[g.var]] == 0
        elif isinstance(g, And):
            res = ev(mask, g.left) and ev(mask, g.right)
        elif isinstance(g, Or):
            res = False
            sub = mask
            while True:
                if ev(sub, g.left) and ev(mask ^ sub, g.right):
                    res = True
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & mask
        elif isinstance(g, Dep):
            argpos = [pos[a] for a in g.args]
            tgt = pos[g.target]
            seen: dict[tuple[int, ...], int] = {}
            res = True
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                key2 = tuple((ones[a] >> i) & 1 for a in argpos)
                val = (ones[tgt] >> i) & 1
                if seen.setdefault(key2, val) != val:
                    res = False
                    break
        else:
            raise TypeError(f"not a formula node: {g!r}")
        memo[key] = res
        return res

    return ev(full, f)


def eval_team_flat(t: Team, f: Formula) -> bool:
    """Flat evaluation for plain propositional formulas: all members satisfy f."""
    if not is_pl(f):
        raise ValueError("the flat evaluator only accepts plain propositional formulas")
    _require_vars(t.domain, f)
    return all(eval_classical(v, f) for v in t.members)


def _enum_teams(d: Domain, cap: int) -> Iterable[Team]:
    return all_teams(d, cap=cap)


def check_downward_closure(
    f: Formula, d: Domain, cap: int = DEFAULT_ENUM_CAP
) -> list[tuple[Team, Team]]:
    """All (X, Y) with Y ⊆ X, X satisfying f but Y not.  Empty means closed."""
    _require_vars(d, f)
    sat: dict[int, bool] = {}
    teams: dict[int, Team] = {}
    for k, t in enumerate(_enum_teams(d, cap)):
        teams[k] = t
        sat[k] = eval_team(t, f)
    bad = []
    for k, ok in sat.items():
        if not ok:
            continue
        sub = k
        while True:
            if not sat[sub]:
                bad.append((teams[k], teams[sub]))
            if sub == 0:
                break
            sub = (sub - 1) & k
    return bad


def check_flatness(f: Formula, d: Domain, cap: int = DEFAULT_ENUM_CAP) -> list[Team]:
    """Teams where satisfaction differs from all-singletons satisfaction."""
    _require_vars(d, f)
    bad = []
    for t in _enum_teams(d, cap):
        whole = eval_team(t, f)
        pointwise = all(eval_team(Team(d, frozenset([v])), f) for v in t.members)
        if whole != pointwise:
            bad.append(t)
    return bad


def semantic_entails(
    phi: Formula,
    psi: Formula,
    d: Domain,
    logic: str = "pdl",
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    """Brute-force team entailment: every team satisfying phi satisfies psi."""
    if logic not in ("pdl", "tpl"):
        raise ValueError(f"unknown logic {logic!r}")
    _require_vars(d, phi)
    _require_vars(d, psi)
    if logic == "tpl":
        if not (is_pl(phi) and is_pl(psi)):
            raise ValueError(
                "tpl admits no dependence atoms: "
                f"got {render(phi)!r} and {render(psi)!r}"
            )
        evaluator = eval_team_flat
    else:
        evaluator = eval_team
    for t in _enum_teams(d, cap):
        if evaluator(t, phi) and not evaluator(t, psi):
            return False
    return True


def semantic_equiv(
    phi: Formula,
    psi: Formula,
    d: Domain,
    logic: str = "pdl",
    cap: int = DEFAULT_ENUM_CAP,
) -> bool:
    return semantic_entails(phi, psi, d, logic=logic, cap=cap) and semantic_entails(
        psi, phi, d, logic=logic, cap=cap
    )
