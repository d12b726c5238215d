import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from teamlogic.formula import And, Bottom, Dep, NegLit, Or, PosLit, Top
from teamlogic.teams import Domain, Team, all_valuations

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def atom_pool(names, allow_dep=True):
    atoms = [Top(), Bottom()]
    for v in names:
        atoms.append(PosLit(v))
        atoms.append(NegLit(v))
    if allow_dep:
        for v in names:
            atoms.append(Dep((), v))
        for a in names:
            for b in names:
                atoms.append(Dep((a,), b))
        if len(names) >= 2:
            atoms.append(Dep(tuple(names[:2]), names[-1]))
    return atoms


def formulas(names=("p", "q"), allow_dep=True, max_leaves=6):
    base = st.sampled_from(atom_pool(list(names), allow_dep))
    return st.recursive(
        base,
        lambda children: st.builds(And, children, children)
        | st.builds(Or, children, children),
        max_leaves=max_leaves,
    )


def teams_over(domain: Domain, max_size=None):
    vals = all_valuations(domain)
    if max_size is None:
        max_size = len(vals)
    return st.sets(st.sampled_from(vals), max_size=max_size).map(
        lambda s: Team(domain, frozenset(s))
    )


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def d1():
    return Domain(("p",))


@pytest.fixture
def d2():
    return Domain(("p", "q"))


@pytest.fixture
def d3():
    return Domain(("p", "q", "r"))
