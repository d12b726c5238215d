import pytest
from hypothesis import given

from teamlogic.teams import (
    Domain,
    Team,
    Valuation,
    all_teams,
    all_valuations,
    bits_to_team,
    team_count,
    team_from_literal,
    team_literal,
    team_to_bits,
)

from conftest import teams_over


def test_domain_validation():
    with pytest.raises(ValueError):
        Domain(())
    with pytest.raises(ValueError):
        Domain(("p", "p"))
    with pytest.raises(ValueError):
        Domain(("P",))
    d = Domain(("p", "q"))
    assert d.index("q") == 1
    with pytest.raises(ValueError):
        d.index("r")


def test_valuation_order_first_var_most_significant():
    d = Domain(("p", "q"))
    vals = all_valuations(d)
    assert [v.bits for v in vals] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [v.rank for v in vals] == [0, 1, 2, 3]
    assert vals[2]["p"] == 1 and vals[2]["q"] == 0


@pytest.mark.parametrize("n,count", [(1, 4), (2, 16), (3, 256)])
def test_team_enumeration_counts(n, count):
    d = Domain(tuple(f"v{i}" for i in range(n)))
    ts = list(all_teams(d))
    assert len(ts) == count == team_count(d)
    assert len({frozenset(t.members) for t in ts}) == count


def test_team_enumeration_order_n1():
    d = Domain(("p",))
    got = [sorted(v.bitstring for v in t) for t in all_teams(d)]
    assert got == [[], ["0"], ["1"], ["0", "1"]]


def test_team_enumeration_cap():
    d = Domain(tuple(f"v{i}" for i in range(5)))
    with pytest.raises(ValueError, match="cap"):
        list(all_teams(d))
    # explicit larger cap lifts the refusal
    stream = all_teams(d, cap=5)
    assert next(stream).is_empty


def test_team_bits_example():
    d = Domain(("p", "q"))
    t = Team.of(d, [(0, 0), (1, 1)])
    assert team_to_bits(t) == (1, 0, 0, 1)
    assert bits_to_team(d, (1, 0, 0, 1)) == t
    with pytest.raises(ValueError):
        bits_to_team(d, (1, 0))
    with pytest.raises(ValueError):
        bits_to_team(d, (1, 0, 0, 2))


def test_team_literals():
    d = Domain(("p", "q", "r"))
    t = team_from_literal(d, "100;010")
    assert {v.bitstring for v in t.members} == {"100", "010"}
    assert team_from_literal(d, "").is_empty
    assert team_from_literal(d, "100;100") == team_from_literal(d, "100")
    assert team_literal(t) == "010;100"
    with pytest.raises(ValueError):
        team_from_literal(d, "10")
    with pytest.raises(ValueError):
        team_from_literal(d, "1x0")


def test_team_member_domain_checked():
    d = Domain(("p",))
    other = Domain(("q",))
    v = Valuation(other, (1,))
    with pytest.raises(ValueError):
        Team(d, frozenset([v]))
    with pytest.raises(ValueError):
        Valuation(d, (1, 0))
    with pytest.raises(ValueError):
        Valuation(d, (2,))


@given(teams_over(Domain(("p", "q", "r"))))
def test_bits_roundtrip(t):
    assert bits_to_team(t.domain, team_to_bits(t)) == t


@given(teams_over(Domain(("p", "q")), max_size=4))
def test_literal_roundtrip(t):
    assert team_from_literal(t.domain, team_literal(t)) == t


def test_bits_roundtrip_exhaustive_n2():
    d = Domain(("p", "q"))
    for t in all_teams(d):
        assert bits_to_team(d, team_to_bits(t)) == t
