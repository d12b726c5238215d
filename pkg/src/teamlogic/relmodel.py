"""Preference-ordered relational models and cumulative entailment.

A model is a finite set of states, a total labelling of states with *sets*
of teams, and a preference relation given as (lower, higher) pairs; the
single-team case of the labelling recovers the usual preferential setup.
A state s is minimal within a subset S iff no s' in S has (s', s) in the
relation, so self-loops and 2-cycles kill minimality.  S is smooth when
every state in it is minimal or has a minimal state of S below it.

``entails(m, phi, psi)`` holds iff every minimal phi-state's label
satisfies psi.  It does *not* verify that the model is cumulative; run
``verify_cumulative`` separately (universe mode by default, exhaustive
all-subsets mode for small state sets).

Empty labels are admitted: such states vacuously satisfy every formula and
are therefore minimal candidates for all of them; verification reports
flag them.  Per-state label checks are pure and independent, so callers
may parallelize over states if they wish.

JSON model documents look like::

    {
      "vars": ["p", "q"],
      "states": {"s0": [[{"p": 1, "q": 0}]], "s1": []},
      "order": [["s0", "s1"]]
    }

``states`` maps each state to a list of teams, a team being a list of
valuation objects assigning 0/1 to every declared variable.  ``order``
pairs are [lower, higher].  Unknown keys anywhere are rejected; duplicate
valuations and teams collapse silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .formula import And, Formula, render, vars_of
from .semantics import eval_team, eval_team_flat
from .teams import Domain, Team


@dataclass
class Witness:
    """One verification counterexample: what was checked, which states offend."""

    subject: str
    states: tuple[str, ...] = ()
    detail: str = ""

    def describe(self) -> str:
        msg = self.subject
        if self.states:
            msg += ": " + ", ".join(self.states)
        if self.detail:
            msg += f" ({self.detail})"
        return msg


@dataclass
class VerificationReport:
    prop: str
    passed: bool
    witnesses: list[Witness] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError("failing report must carry at least one witness")

    def lines(self) -> list[str]:
        out = [f"{self.prop}: {'pass' if self.passed else 'fail'}"]
        out.extend(f"  witness {w.describe()}" for w in self.witnesses)
        out.extend(f"  note {n}" for n in self.notes)
        return out


@dataclass
class RelationalModel:
    domain: Domain
    states: tuple[str, ...]
    label: Mapping[str, frozenset[Team]]
    rel: frozenset[tuple[str, str]]

    def __post_init__(self):
        if len(set(self.states)) != len(self.states):
            raise ValueError("state identifiers must be distinct")
        known = set(self.states)
        if set(self.label.keys()) != known:
            raise ValueError("label must cover exactly the declared states")
        for s, teams in self.label.items():
            for t in teams:
                if t.domain != self.domain:
                    raise ValueError(f"label of {s!r} uses a different domain")
        for lo, hi in self.rel:
            if lo not in known or hi not in known:
                raise ValueError(f"order pair ({lo!r}, {hi!r}) names unknown states")


def _evaluator(engine: str) -> Callable[[Team, Formula], bool]:
    if engine == "generic":
        return eval_team
    if engine == "flat":
        return eval_team_flat
    raise ValueError(f"unknown evaluation engine {engine!r}")


def label_satisfies(
    m: RelationalModel, s: str, f: Formula, engine: str = "generic"
) -> bool:
    """Every team labelled at s satisfies f (vacuously true for empty labels)."""
    if s not in m.label:
        raise ValueError(f"unknown state {s!r}")
    ev = _evaluator(engine)
    return all(ev(t, f) for t in m.label[s])


def states_of(m: RelationalModel, f: Formula, engine: str = "generic") -> set[str]:
    _require_model_vars(m, f)
    return {s for s in m.states if label_satisfies(m, s, f, engine=engine)}


def minimal_states(m: RelationalModel, subset: Iterable[str]) -> set[str]:
    """States of the subset with no subset state below them."""
    sub = set(subset)
    unknown = sub - set(m.states)
    if unknown:
        raise ValueError(f"unknown states: {', '.join(sorted(unknown))}")
    blocked = {hi for lo, hi in m.rel if lo in sub and hi in sub}
    return sub - blocked


def min_models(
    m: RelationalModel, f: Formula, engine: str = "generic"
) -> frozenset[Team]:
    """Union of the labels over the minimal f-states."""
    mins = minimal_states(m, states_of(m, f, engine=engine))
    out: set[Team] = set()
    for s in mins:
        out.update(m.label[s])
    return frozenset(out)


def entails_witness(
    m: RelationalModel, phi: Formula, psi: Formula, engine: str = "generic"
) -> tuple[bool, str | None]:
    """Entailment verdict plus the first violating minimal state, if any."""
    _require_model_vars(m, phi)
    _require_model_vars(m, psi)
    mins = minimal_states(m, states_of(m, phi, engine=engine))
    for s in m.states:
        if s in mins and not label_satisfies(m, s, psi, engine=engine):
            return False, s
    return True, None


def entails(
    m: RelationalModel, phi: Formula, psi: Formula, engine: str = "generic"
) -> bool:
    return entails_witness(m, phi, psi, engine=engine)[0]


def is_smooth(m: RelationalModel, subset: Iterable[str]) -> tuple[bool, tuple[str, ...]]:
    """Smoothness of a subset, with the offending states as witnesses."""
    sub = set(subset)
    mins = minimal_states(m, sub)
    bad = []
    for s in sub:
        if s in mins:
            continue
        if not any((lo, s) in m.rel for lo in mins):
            bad.append(s)
    return (not bad, tuple(sorted(bad)))


def _empty_label_notes(m: RelationalModel) -> list[str]:
    empties = [s for s in m.states if not m.label[s]]
    if not empties:
        return []
    return [
        "states with empty labels satisfy every formula vacuously: "
        + ", ".join(empties)
    ]


def verify_cumulative(
    m: RelationalModel,
    universe: Sequence[Formula] | None = None,
    all_subsets: bool = False,
    engine: str = "generic",
) -> VerificationReport:
    """Check smoothness of satisfaction sets.

    Universe mode (the default) checks S(phi) for each supplied formula.
    ``all_subsets`` instead checks every subset of states, a sufficient
    criterion independent of any formula choice; it is capped at 16 states.
    """
    if all_subsets:
        if universe is not None:
            raise ValueError("pass a universe or all_subsets=True, not both")
        if len(m.states) > 16:
            raise ValueError(
                f"all-subsets verification is capped at 16 states, got {len(m.states)}"
            )
        witnesses = []
        n = len(m.states)
        for k in range(1 << n):
            sub = {m.states[i] for i in range(n) if (k >> i) & 1}
            ok, bad = is_smooth(m, sub)
            if not ok:
                witnesses.append(
                    Witness(
                        subject="{" + ", ".join(sorted(sub)) + "}",
                        states=bad,
                        detail="no minimal state below",
                    )
                )
        return VerificationReport(
            prop="cumulativity (all subsets)",
            passed=not witnesses,
            witnesses=witnesses,
            notes=_empty_label_notes(m),
        )
    if universe is None:
        raise ValueError("universe mode needs a list of formulas")
    witnesses = []
    for f in universe:
        ok, bad = is_smooth(m, states_of(m, f, engine=engine))
        if not ok:
            witnesses.append(
                Witness(subject=render(f), states=bad, detail="no minimal state below")
            )
    return VerificationReport(
        prop="cumulativity (universe)",
        passed=not witnesses,
        witnesses=witnesses,
        notes=_empty_label_notes(m),
    )


def verify_strong_cumulative(
    m: RelationalModel, universe: Sequence[Formula], engine: str = "generic"
) -> VerificationReport:
    """Asymmetry of the order plus a unique minimal state per formula.

    Formulas no state satisfies are reported in the notes, not as failures.
    """
    witnesses = []
    seen = set()
    for lo, hi in sorted(m.rel):
        if (hi, lo) in m.rel and (hi, lo) not in seen:
            seen.add((lo, hi))
            witnesses.append(
                Witness(
                    subject="asymmetry",
                    states=(lo, hi) if lo != hi else (lo,),
                    detail="both directions present" if lo != hi else "self-loop",
                )
            )
    notes = _empty_label_notes(m)
    for f in universe:
        sat = states_of(m, f, engine=engine)
        if not sat:
            notes.append(f"no state satisfies {render(f)!r}")
            continue
        mins = minimal_states(m, sat)
        if len(mins) != 1:
            witnesses.append(
                Witness(
                    subject=render(f),
                    states=tuple(sorted(mins)),
                    detail=f"expected exactly one minimal state, found {len(mins)}",
                )
            )
    return VerificationReport(
        prop="strong cumulativity",
        passed=not witnesses,
        witnesses=witnesses,
        notes=notes,
    )


def _require_model_vars(m: RelationalModel, f: Formula) -> None:
    extra = vars_of(f) - set(m.domain.vars)
    if extra:
        raise ValueError(
            "formula uses variables outside the model domain: "
            + ", ".join(sorted(extra))
        )


def verify_query_universe(phi: Formula, psi: Formula) -> list[Formula]:
    """The universe {phi, psi, phi & psi} used by opt-in pre-checks."""
    return [phi, psi, And(phi, psi)]


def model_from_dict(doc: object) -> RelationalModel:
    """Build a model from a parsed JSON document, rejecting unknown keys."""
    if not isinstance(doc, dict):
        raise ValueError("model document must be a JSON object")
    unknown = set(doc) - {"vars", "states", "order"}
    if unknown:
        raise ValueError(f"unknown model keys: {', '.join(sorted(unknown))}")
    if "vars" not in doc or "states" not in doc:
        raise ValueError("model document needs 'vars' and 'states'")
    raw_vars = doc["vars"]
    if not isinstance(raw_vars, list) or not all(isinstance(v, str) for v in raw_vars):
        raise ValueError("'vars' must be a list of variable names")
    domain = Domain(tuple(raw_vars))
    raw_states = doc["states"]
    if not isinstance(raw_states, dict):
        raise ValueError("'states' must map state identifiers to team lists")
    states = []
    label: dict[str, frozenset[Team]] = {}
    for sid, raw_teams in raw_states.items():
        if not isinstance(sid, str) or not sid:
            raise ValueError("state identifiers must be non-empty strings")
        if not isinstance(raw_teams, list):
            raise ValueError(f"state {sid!r} must map to a list of teams")
        teams = set()
        for raw_team in raw_teams:
            teams.add(_team_from_doc(domain, sid, raw_team))
        states.append(sid)
        label[sid] = frozenset(teams)
    raw_order = doc.get("order", [])
    if not isinstance(raw_order, list):
        raise ValueError("'order' must be a list of [lower, higher] pairs")
    rel = set()
    for pair in raw_order:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, str) for x in pair)
        ):
            raise ValueError(f"order entry {pair!r} is not a [lower, higher] pair")
        rel.add((pair[0], pair[1]))
    return RelationalModel(domain, tuple(states), label, frozenset(rel))


def _team_from_doc(domain: Domain, sid: str, raw_team: object) -> Team:
    if not isinstance(raw_team, list):
        raise ValueError(f"state {sid!r}: a team must be a list of valuations")
    rows = []
    for raw_val in raw_team:
        if not isinstance(raw_val, dict):
            raise ValueError(f"state {sid!r}: a valuation must be an object")
        unknown = set(raw_val) - set(domain.vars)
        if unknown:
            raise ValueError(
                f"state {sid!r}: valuation assigns unknown variables: "
                + ", ".join(sorted(unknown))
            )
        missing = set(domain.vars) - set(raw_val)
        if missing:
            raise ValueError(
                f"state {sid!r}: valuation misses variables: "
                + ", ".join(sorted(missing))
            )
        bits = []
        for var in domain.vars:
            b = raw_val[var]
            if not isinstance(b, int) or isinstance(b, bool) or b not in (0, 1):
                raise ValueError(f"state {sid!r}: value of {var!r} must be 0 or 1")
            bits.append(b)
        rows.append(tuple(bits))
    return Team.of(domain, rows)


def model_to_dict(m: RelationalModel) -> dict:
    states: dict[str, list] = {}
    for s in m.states:
        teams = sorted(
            m.label[s], key=lambda t: tuple(v.rank for v in t)
        )
        states[s] = [
            [dict(zip(m.domain.vars, v.bits)) for v in t] for t in teams
        ]
    return {
        "vars": list(m.domain.vars),
        "states": states,
        "order": [list(p) for p in sorted(m.rel)],
    }


def load_model(path: str) -> RelationalModel:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON: {exc}") from None
    return model_from_dict(doc)
