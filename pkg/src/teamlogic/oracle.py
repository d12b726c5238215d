"""Reference evaluators kept deliberately naive and separate.

These transcribe the defining clauses with no shortcuts: disjunction
enumerates all 3^|X| covers (Y, Z) with Y ∪ Z = X, dependence atoms use the
quadratic two-pointer check, nothing is memoized, and the entailment check
below rebuilds minimality from its definition instead of the sink sweep.
They share data types with the rest of the package but no evaluation code;
the fast engines are tested against them.

Hard caps, not configurable: teams of at most 8 members, models with at
most 32 states.
"""

from __future__ import annotations

from itertools import product

from .formula import And, Bottom, Dep, Formula, NegLit, Or, PosLit, Top, vars_of
from .teams import Team, Valuation

ORACLE_TEAM_CAP = 8
ORACLE_STATE_CAP = 32


def oracle_eval_team(t: Team, f: Formula) -> bool:
    """Cover-by-cover team evaluation.  Exponential; teams capped at 8."""
    if len(t) > ORACLE_TEAM_CAP:
        raise ValueError(
            f"oracle evaluation is capped at teams of {ORACLE_TEAM_CAP} members, "
            f"got {len(t)}"
        )
    extra = vars_of(f) - set(t.domain.vars)
    if extra:
        raise ValueError(
            "formula uses variables outside the domain: " + ", ".join(sorted(extra))
        )
    return _sat(frozenset(t.members), f)


def _sat(members: frozenset[Valuation], f: Formula) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return len(members) == 0
    if isinstance(f, PosLit):
        return all(v[f.var] == 1 for v in members)
    if isinstance(f, NegLit):
        return all(v[f.var] == 0 for v in members)
    if isinstance(f, And):
        return _sat(members, f.left) and _sat(members, f.right)
    if isinstance(f, Or):
        elems = sorted(members, key=lambda v: v.rank)
        # each member goes to Y only, Z only, or both: every cover Y ∪ Z = X
        for assignment in product((0, 1, 2), repeat=len(elems)):
            y = frozenset(v for v, a in zip(elems, assignment) if a != 1)
            z = frozenset(v for v, a in zip(elems, assignment) if a != 0)
            if _sat(y, f.left) and _sat(z, f.right):
                return True
        return False
    if isinstance(f, Dep):
        for v in members:
            for w in members:
                if all(v[a] == w[a] for a in f.args) and v[f.target] != w[f.target]:
                    return False
        return True
    raise TypeError(f"not a formula node: {f!r}")


def oracle_entails(model, phi: Formula, psi: Formula) -> bool:
    """Entailment by direct construction of the minimal satisfaction set.

    Takes a relational model (states, label, rel with (lower, higher)
    pairs), finds the states whose every labelled team satisfies phi,
    drops those with a phi-state strictly below them, and checks psi on
    every team labelled at the survivors.
    """
    if len(model.states) > ORACLE_STATE_CAP:
        raise ValueError(
            f"oracle entailment is capped at {ORACLE_STATE_CAP} states, "
            f"got {len(model.states)}"
        )
    sat_states = [
        s
        for s in model.states
        if all(oracle_eval_team(t, phi) for t in model.label[s])
    ]
    minimal = [
        s
        for s in sat_states
        if not any((s2, s) in model.rel for s2 in sat_states)
    ]
    for s in minimal:
        for t in model.label[s]:
            if not oracle_eval_team(t, psi):
                return False
    return True
