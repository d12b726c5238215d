"""Seeded random instances: formulas, teams, models, circuits.

Everything here is driven by a caller-supplied ``random.Random`` so that
benchmark runs and test sweeps are reproducible from a seed.
"""

from __future__ import annotations

import random
from typing import Sequence

from .formula import And, Bottom, Dep, Formula, NegLit, Or, PosLit, Top
from .relmodel import RelationalModel
from .succinct import Circuit, Gate, SuccinctModel
from .teams import Domain, Team, all_valuations


def random_formula(
    rng: random.Random,
    domain: Domain,
    size: int,
    allow_dep: bool = True,
    dep_weight: float = 0.3,
) -> Formula:
    """A random formula with roughly ``size`` nodes."""
    if size <= 1:
        return _random_atom(rng, domain, allow_dep, dep_weight)
    left_size = rng.randint(1, size - 1)
    left = random_formula(rng, domain, left_size, allow_dep, dep_weight)
    right = random_formula(rng, domain, size - 1 - left_size, allow_dep, dep_weight)
    return And(left, right) if rng.random() < 0.5 else Or(left, right)


def _random_atom(
    rng: random.Random, domain: Domain, allow_dep: bool, dep_weight: float
) -> Formula:
    if allow_dep and rng.random() < dep_weight:
        k = rng.randint(0, min(2, len(domain) - 1))
        args = tuple(rng.sample(domain.vars, k))
        return Dep(args, rng.choice(domain.vars))
    r = rng.random()
    if r < 0.05:
        return Top()
    if r < 0.10:
        return Bottom()
    var = rng.choice(domain.vars)
    return PosLit(var) if rng.random() < 0.5 else NegLit(var)


def random_pl_formula(rng: random.Random, domain: Domain, size: int) -> Formula:
    return random_formula(rng, domain, size, allow_dep=False)


def random_team(rng: random.Random, domain: Domain, size: int) -> Team:
    vals = all_valuations(domain)
    if size > len(vals):
        raise ValueError(
            f"no team of {size} distinct valuations over {len(domain)} variables"
        )
    return Team(domain, frozenset(rng.sample(vals, size)))


def random_strict_order(
    rng: random.Random, ids: Sequence[str], density: float = 0.4
) -> frozenset[tuple[str, str]]:
    """A random strict (irreflexive, transitive) order on the identifiers."""
    ranked = list(ids)
    rng.shuffle(ranked)
    n = len(ranked)
    adj = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i][j] = True
    for k in range(n):
        for i in range(n):
            if adj[i][k]:
                for j in range(n):
                    if adj[k][j]:
                        adj[i][j] = True
    return frozenset(
        (ranked[i], ranked[j]) for i in range(n) for j in range(n) if adj[i][j]
    )


def random_relation(
    rng: random.Random, ids: Sequence[str], density: float = 0.25
) -> frozenset[tuple[str, str]]:
    return frozenset(
        (a, b) for a in ids for b in ids if rng.random() < density
    )


def random_model(
    rng: random.Random,
    domain: Domain,
    max_states: int = 6,
    max_teams: int = 3,
    max_team_size: int | None = None,
    order: str = "strict",
) -> RelationalModel:
    """A random model; ``order`` is 'strict', 'random' or 'none'."""
    n_states = rng.randint(1, max_states)
    ids = tuple(f"s{i}" for i in range(n_states))
    cap = len(all_valuations(domain))
    if max_team_size is None:
        max_team_size = cap
    label = {}
    for s in ids:
        teams = frozenset(
            random_team(rng, domain, rng.randint(0, min(max_team_size, cap)))
            for _ in range(rng.randint(0, max_teams))
        )
        label[s] = teams
    if order == "strict":
        rel = random_strict_order(rng, ids)
    elif order == "random":
        rel = random_relation(rng, ids)
    elif order == "none":
        rel = frozenset()
    else:
        raise ValueError(f"unknown order kind {order!r}")
    return RelationalModel(domain, ids, label, rel)


def random_gate_column(
    rng: random.Random,
    pool: Sequence[str],
    count: int,
    start_index: int,
) -> tuple[list[Gate], str]:
    """A chain of ``count`` random gates drawing operands from ``pool``.

    Returns the gates and the identifier of the last one (the column's
    output).  ``pool`` grows with each new gate.
    """
    if count < 1:
        raise ValueError("a gate column needs at least one gate")
    avail = list(pool)
    gates = []
    gid = ""
    for k in range(count):
        gid = f"g{start_index + k}"
        op = rng.choice(("AND", "OR", "NOT", "XOR", "CONST1", "CONST0"))
        arity = {"AND": 2, "OR": 2, "XOR": 2, "NOT": 1, "CONST0": 0, "CONST1": 0}[op]
        operands = tuple(rng.choice(avail) for _ in range(arity)) if avail else ()
        if arity > 0 and not avail:
            op, operands = "CONST1", ()
        gates.append(Gate(gid, op, operands))
        avail.append(gid)
    return gates, gid


def random_succinct_model(
    rng: random.Random,
    domain: Domain,
    state_bits: int,
    flag_gates: int = 3,
    member_gates: int = 5,
    order_gates: int = 4,
) -> SuccinctModel:
    """A random circuit model whose defined flag only reads state bits."""
    m = state_bits
    tbits = 1 << len(domain)
    state_inputs = [f"i{k}" for k in range(m)]
    all_inputs = [f"i{k}" for k in range(m + tbits)]
    flag, flag_out = random_gate_column(rng, state_inputs, flag_gates, 0)
    member, member_out = random_gate_column(
        rng, all_inputs, member_gates, flag_gates
    )
    label = Circuit(m + tbits, tuple(flag + member), (flag_out, member_out))
    order_inputs = [f"i{k}" for k in range(2 * m)]
    order, order_out = random_gate_column(rng, order_inputs, order_gates, 0)
    order_circ = Circuit(2 * m, tuple(order), (order_out,))
    return SuccinctModel(domain, m, label, order_circ)
