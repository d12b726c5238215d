"""Domains, valuations and teams over a fixed variable order.

Canonical orders used throughout (and relied on by file formats and the
service wire format):

* a valuation over an n-variable domain is read as an n-bit number with the
  first domain variable most significant; ``all_valuations`` yields them in
  ascending order;
* a team is encoded by its characteristic integer: bit i (least significant
  bit first) is set iff ``all_valuations(d)[i]`` is a member; ``all_teams``
  yields teams for ascending integers, so the empty team comes first.

Team literals, as accepted on the command line and over the wire, are
semicolon-separated bitstrings in domain order (``'100;010'``); the empty
string denotes the empty team and duplicate rows collapse silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .formula import VAR_RE

DEFAULT_ENUM_CAP = 4


@dataclass(frozen=True)
class Domain:
    """Ordered tuple of distinct variable names; the order is significant."""

    vars: tuple[str, ...]

    def __post_init__(self):
        if not self.vars:
            raise ValueError("domain must contain at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("domain variables must be distinct")
        for v in self.vars:
            if not VAR_RE.fullmatch(v):
                raise ValueError(f"invalid variable name {v!r}")

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vars)}

    def index(self, var: str) -> int:
        try:
            return self._pos[var]
        except KeyError:
            raise ValueError(f"variable {var!r} is not in the domain") from None

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vars)

    def __contains__(self, var: object) -> bool:
        return var in self._pos


def domain_of(names: Iterable[str]) -> Domain:
    return Domain(tuple(names))


@dataclass(frozen=True)
class Valuation:
    domain: Domain
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.domain):
            raise ValueError(
                f"valuation has {len(self.bits)} bits for a "
                f"{len(self.domain)}-variable domain"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("valuation bits must be 0 or 1")

    def __getitem__(self, var: str) -> int:
        return self.bits[self.domain.index(var)]

    @property
    def rank(self) -> int:
        """Canonical index: bits read as a binary number, first variable MSB."""
        r = 0
        for b in self.bits:
            r = (r << 1) | b
        return r

    @property
    def bitstring(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class Team:
    domain: Domain
    members: frozenset[Valuation]

    def __post_init__(self):
        for v in self.members:
            if v.domain != self.domain:
                raise ValueError("team member has a different domain")

    @classmethod
    def of(cls, domain: Domain, rows: Iterable[Iterable[int]]) -> "Team":
        """Build a team from 0/1 rows; duplicate rows collapse."""
        return cls(domain, frozenset(Valuation(domain, tuple(r)) for r in rows))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Valuation]:
        return iter(sorted(self.members, key=lambda v: v.rank))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    @property
    def is_empty(self) -> bool:
        return not self.members


def all_valuations(d: Domain) -> list[Valuation]:
    """All 2^n valuations in canonical ascending order."""
    n = len(d)
    out = []
    for i in range(1 << n):
        bits = tuple((i >> (n - 1 - j)) & 1 for j in range(n))
        out.append(Valuation(d, bits))
    return out


def team_count(d: Domain) -> int:
    return 1 << (1 << len(d))


def all_teams(d: Domain, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Team]:
    """All teams over d in canonical order (empty team first).

    Refuses domains larger than ``cap`` variables: the stream has 2^(2^n)
    entries, which is already 65536 at n = 4.
    """
    n = len(d)
    if n > cap:
        raise ValueError(
            f"team enumeration over {n} variables exceeds the cap of {cap} "
            f"(2^(2^{n}) teams); raise the cap explicitly to proceed"
        )
    vals = all_valuations(d)
    for k in range(1 << len(vals)):
        yield Team(d, frozenset(v for i, v in enumerate(vals) if (k >> i) & 1))


def team_to_bits(t: Team) -> tuple[int, ...]:
    """Characteristic vector over all_valuations order: bit i iff vals[i] in t."""
    vals = all_valuations(t.domain)
    return tuple(1 if v in t.members else 0 for v in vals)


def bits_to_team(d: Domain, bits: Iterable[int]) -> Team:
    vals = all_valuations(d)
    bits = tuple(bits)
    if len(bits) != len(vals):
        raise ValueError(
            f"characteristic vector has {len(bits)} bits, expected {len(vals)}"
        )
    if any(b not in (0, 1) for b in bits):
        raise ValueError("characteristic vector bits must be 0 or 1")
    return Team(d, frozenset(v for b, v in zip(bits, vals) if b))


def team_from_literal(d: Domain, text: str) -> Team:
    """Parse a semicolon-separated bitstring literal ('' is the empty team)."""
    text = text.strip()
    if not text:
        return Team(d, frozenset())
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if len(chunk) != len(d) or any(c not in "01" for c in chunk):
            raise ValueError(
                f"team row {chunk!r} is not a {len(d)}-character bitstring"
            )
        rows.append(tuple(int(c) for c in chunk))
    return Team.of(d, rows)


def team_literal(t: Team) -> str:
    """Canonical literal for a team (members in ascending valuation order)."""
    return ";".join(v.bitstring for v in t)
