"""Circuit-encoded models: netlists, validation, entailment, expansion.

Netlist format, line oriented, '#' starts a comment::

    inputs 3
    g0 = AND i0 i1
    g1 = NOT g0
    outputs g1

Operands name inputs (``iJ``) or earlier gates (``gM``); AND/OR/XOR are
binary, NOT unary, CONST0/CONST1 nullary.  The gate list is acyclic by
construction and evaluates in one pass.

A succinct model over n variables with m state bits is a pair of circuits.
The label circuit takes ``[m state bits][2^n team-characteristic bits]``
(team bits in the canonical valuation order) and yields two outputs:
a defined flag and a membership bit.  The flag must not depend on the team
bits; a state with flag 0 has no label at all, otherwise its label is the
set of teams whose characteristic vector gets membership 1.  The order
circuit takes ``[m bits of s'][m bits of s]`` and outputs 1 iff s'
precedes s.  It is treated as total on defined pairs; a 1 on a pair
involving an undefined state is harmless and reported as lint by
``validate_succinct``.

The state-bit and variable counts are independent small parameters here;
everything enumerates 2^m states and 2^(2^n) team vectors, with default
caps m <= 12 and n <= 3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .formula import Formula, vars_of
from .relmodel import RelationalModel, VerificationReport, Witness
from .semantics import eval_team
from .teams import Domain, Team, bits_to_team

OPS = {"AND": 2, "OR": 2, "NOT": 1, "XOR": 2, "CONST0": 0, "CONST1": 0}

DEFAULT_STATE_CAP = 12
DEFAULT_VAR_CAP = 3

_GATE_RE = re.compile(r"g[0-9]+$")
_INPUT_RE = re.compile(r"i[0-9]+$")


class NetlistError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"netlist line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Gate:
    gid: str
    op: str
    operands: tuple[str, ...]


@dataclass(frozen=True)
class Circuit:
    input_count: int
    gates: tuple[Gate, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        if self.input_count < 0:
            raise ValueError("input count must be non-negative")
        defined: set[str] = set()
        for g in self.gates:
            if not _GATE_RE.match(g.gid):
                raise ValueError(f"bad gate identifier {g.gid!r}")
            if g.gid in defined:
                raise ValueError(f"gate {g.gid} defined twice")
            arity = OPS.get(g.op)
            if arity is None:
                raise ValueError(f"unknown operation {g.op!r}")
            if len(g.operands) != arity:
                raise ValueError(
                    f"gate {g.gid}: {g.op} takes {arity} operands, got {len(g.operands)}"
                )
            for ref in g.operands:
                self._check_ref(ref, defined, f"gate {g.gid}")
            defined.add(g.gid)
        if not self.outputs:
            raise ValueError("circuit declares no outputs")
        for ref in self.outputs:
            self._check_ref(ref, defined, "outputs")

    def _check_ref(self, ref: str, defined: set[str], where: str) -> None:
        if _INPUT_RE.match(ref):
            if int(ref[1:]) >= self.input_count:
                raise ValueError(f"{where}: input {ref} is out of range")
        elif _GATE_RE.match(ref):
            if ref not in defined:
                raise ValueError(f"{where}: operand {ref} is not defined yet")
        else:
            raise ValueError(f"{where}: bad operand {ref!r}")


def parse_circuit(text: str) -> Circuit:
    input_count: int | None = None
    gates: list[Gate] = []
    outputs: tuple[str, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if outputs is not None:
            raise NetlistError("content after the outputs line", lineno)
        fields = line.split()
        if input_count is None:
            if fields[0] != "inputs" or len(fields) != 2 or not fields[1].isdigit():
                raise NetlistError("expected 'inputs K' header", lineno)
            input_count = int(fields[1])
            continue
        if fields[0] == "outputs":
            if len(fields) < 2:
                raise NetlistError("outputs line names no signals", lineno)
            outputs = tuple(fields[1:])
            continue
        if len(fields) < 3 or fields[1] != "=":
            raise NetlistError("expected 'gN = OP operands...'", lineno)
        gates.append(Gate(fields[0], fields[2], tuple(fields[3:])))
    if input_count is None:
        raise NetlistError("missing 'inputs K' header", 1)
    if outputs is None:
        raise NetlistError("missing outputs line", 1)
    try:
        return Circuit(input_count, tuple(gates), outputs)
    except ValueError as exc:
        raise NetlistError(str(exc), 1) from None


def render_circuit(c: Circuit) -> str:
    lines = [f"inputs {c.input_count}"]
    for g in c.gates:
        lines.append(f"{g.gid} = {g.op} {' '.join(g.operands)}".rstrip())
    lines.append("outputs " + " ".join(c.outputs))
    return "\n".join(lines) + "\n"


def eval_circuit(c: Circuit, inputs: Sequence[int]) -> tuple[int, ...]:
    if len(inputs) != c.input_count:
        raise ValueError(f"expected {c.input_count} input bits, got {len(inputs)}")
    values: dict[str, int] = {f"i{k}": int(b) for k, b in enumerate(inputs)}
    for g in c.gates:
        ops = [values[r] for r in g.operands]
        if g.op == "AND":
            v = ops[0] & ops[1]
        elif g.op == "OR":
            v = ops[0] | ops[1]
        elif g.op == "XOR":
            v = ops[0] ^ ops[1]
        elif g.op == "NOT":
            v = 1 - ops[0]
        elif g.op == "CONST0":
            v = 0
        else:
            v = 1
        values[g.gid] = v
    return tuple(values[r] for r in c.outputs)


@dataclass(frozen=True)
class SuccinctModel:
    domain: Domain
    state_bits: int
    label_circuit: Circuit
    order_circuit: Circuit

    def __post_init__(self):
        if self.state_bits < 1:
            raise ValueError("state_bits must be at least 1")
        want = self.state_bits + (1 << len(self.domain))
        if self.label_circuit.input_count != want:
            raise ValueError(
                f"label circuit takes {self.label_circuit.input_count} inputs, "
                f"expected {want} (m + 2^n)"
            )
        if len(self.label_circuit.outputs) != 2:
            raise ValueError("label circuit must declare exactly 2 outputs")
        if self.order_circuit.input_count != 2 * self.state_bits:
            raise ValueError(
                f"order circuit takes {self.order_circuit.input_count} inputs, "
                f"expected {2 * self.state_bits} (2m)"
            )
        if len(self.order_circuit.outputs) != 1:
            raise ValueError("order circuit must declare exactly 1 output")


def _check_caps(sm: SuccinctModel, state_cap: int, var_cap: int) -> None:
    if sm.state_bits > state_cap:
        raise ValueError(
            f"{sm.state_bits} state bits exceed the enumeration cap of {state_cap}"
        )
    if len(sm.domain) > var_cap:
        raise ValueError(
            f"{len(sm.domain)}-variable domain exceeds the enumeration cap of {var_cap}"
        )


def _state_tuple(s: int, m: int) -> tuple[int, ...]:
    return tuple((s >> (m - 1 - j)) & 1 for j in range(m))


def _state_string(s: int, m: int) -> str:
    return format(s, f"0{m}b")


def _label_out(sm: SuccinctModel, state: tuple[int, ...], team_bits: Sequence[int]):
    return eval_circuit(sm.label_circuit, tuple(state) + tuple(team_bits))


def _defined(sm: SuccinctModel, s: int) -> bool:
    zeros = (0,) * (1 << len(sm.domain))
    return _label_out(sm, _state_tuple(s, sm.state_bits), zeros)[0] == 1


def _order(sm: SuccinctModel, lo: int, hi: int) -> bool:
    m = sm.state_bits
    return eval_circuit(
        sm.order_circuit, _state_tuple(lo, m) + _state_tuple(hi, m)
    )[0] == 1


def validate_succinct(
    sm: SuccinctModel,
    state_cap: int = DEFAULT_STATE_CAP,
    var_cap: int = DEFAULT_VAR_CAP,
) -> VerificationReport:
    """Defined-flag constancy per state; order lint on undefined pairs."""
    _check_caps(sm, state_cap, var_cap)
    m = sm.state_bits
    tbits = 1 << len(sm.domain)
    witnesses = []
    defined: list[bool] = []
    for s in range(1 << m):
        state = _state_tuple(s, m)
        flags = set()
        for k in range(1 << tbits):
            team = tuple((k >> i) & 1 for i in range(tbits))
            flags.add(_label_out(sm, state, team)[0])
            if len(flags) > 1:
                break
        if len(flags) > 1:
            witnesses.append(
                Witness(
                    subject="defined flag",
                    states=(_state_string(s, m),),
                    detail="flag depends on the team bits",
                )
            )
            defined.append(False)
        else:
            defined.append(flags.pop() == 1)
    notes = []
    undefined = [s for s in range(1 << m) if not defined[s]]
    if undefined and not witnesses:
        # the order circuit is only meaningful on defined pairs; a 1 that
        # touches an undefined state is lint, not an error
        flagged: set[tuple[int, int]] = set()
        for u in undefined:
            for s in range(1 << m):
                for lo, hi in ((u, s), (s, u)):
                    if (lo, hi) not in flagged and _order(sm, lo, hi):
                        flagged.add((lo, hi))
        for lo, hi in sorted(flagged):
            notes.append(
                f"order asserts {_state_string(lo, m)} below "
                f"{_state_string(hi, m)}, but the pair involves an undefined state"
            )
    return VerificationReport(
        prop="succinct model",
        passed=not witnesses,
        witnesses=witnesses,
        notes=notes,
    )


def succ_label(
    sm: SuccinctModel,
    s: int,
    state_cap: int = DEFAULT_STATE_CAP,
    var_cap: int = DEFAULT_VAR_CAP,
) -> frozenset[Team] | None:
    """The state's label, or None when the defined flag is down.

    Assumes a validated model: the flag is read with zeroed team bits.
    """
    _check_caps(sm, state_cap, var_cap)
    if not (0 <= s < (1 << sm.state_bits)):
        raise ValueError(f"state {s} is outside the {sm.state_bits}-bit space")
    state = _state_tuple(s, sm.state_bits)
    tbits = 1 << len(sm.domain)
    if _label_out(sm, state, (0,) * tbits)[0] != 1:
        return None
    teams = []
    for k in range(1 << tbits):
        team_vec = tuple((k >> i) & 1 for i in range(tbits))
        if _label_out(sm, state, team_vec)[1] == 1:
            teams.append(bits_to_team(sm.domain, team_vec))
    return frozenset(teams)


def succ_entails_witness(
    sm: SuccinctModel,
    phi: Formula,
    psi: Formula,
    state_cap: int = DEFAULT_STATE_CAP,
    var_cap: int = DEFAULT_VAR_CAP,
) -> tuple[bool, str | None]:
    """Brute-force the for-all-states / exists-smaller-state schema.

    A defined state satisfies phi iff every team in its label does; a
    phi-state with no phi-state strictly below it must have its whole
    label satisfy psi.
    """
    _check_caps(sm, state_cap, var_cap)
    for f in (phi, psi):
        extra = vars_of(f) - set(sm.domain.vars)
        if extra:
            raise ValueError(
                "formula uses variables outside the domain: "
                + ", ".join(sorted(extra))
            )
    m = sm.state_bits
    labels: dict[int, frozenset[Team]] = {}
    for s in range(1 << m):
        lab = succ_label(sm, s, state_cap=state_cap, var_cap=var_cap)
        if lab is not None:
            labels[s] = lab
    phi_states = [
        s for s, lab in labels.items() if all(eval_team(t, phi) for t in lab)
    ]
    for s in phi_states:
        if any(_order(sm, lo, s) for lo in phi_states):
            continue
        for t in labels[s]:
            if not eval_team(t, psi):
                return False, _state_string(s, m)
    return True, None


def succ_entails(
    sm: SuccinctModel,
    phi: Formula,
    psi: Formula,
    state_cap: int = DEFAULT_STATE_CAP,
    var_cap: int = DEFAULT_VAR_CAP,
) -> bool:
    return succ_entails_witness(
        sm, phi, psi, state_cap=state_cap, var_cap=var_cap
    )[0]


def expand(
    sm: SuccinctModel,
    state_cap: int = DEFAULT_STATE_CAP,
    var_cap: int = DEFAULT_VAR_CAP,
) -> RelationalModel:
    """Materialize the defined states, labels and order pairs explicitly."""
    _check_caps(sm, state_cap, var_cap)
    m = sm.state_bits
    states = []
    label = {}
    for s in range(1 << m):
        lab = succ_label(sm, s, state_cap=state_cap, var_cap=var_cap)
        if lab is None:
            continue
        sid = _state_string(s, m)
        states.append(sid)
        label[sid] = lab
    index = {sid: int(sid, 2) for sid in states}
    rel = set()
    for a in states:
        for b in states:
            if _order(sm, index[a], index[b]):
                rel.add((a, b))
    return RelationalModel(sm.domain, tuple(states), label, frozenset(rel))
