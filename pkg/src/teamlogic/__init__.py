"""Model checking and cumulative entailment for team-based logics."""

from .formula import (
    And,
    Bottom,
    Dep,
    Formula,
    NegLit,
    Or,
    ParseError,
    PosLit,
    Top,
    is_pl,
    node_count,
    parse,
    render,
    vars_of,
)
from .teams import (
    Domain,
    Team,
    Valuation,
    all_teams,
    all_valuations,
    bits_to_team,
    team_from_literal,
    team_literal,
    team_to_bits,
)
from .semantics import (
    check_dep,
    check_downward_closure,
    check_flatness,
    eval_classical,
    eval_team,
    eval_team_flat,
    semantic_entails,
    semantic_equiv,
)
from .relmodel import (
    RelationalModel,
    VerificationReport,
    Witness,
    entails,
    entails_witness,
    is_smooth,
    label_satisfies,
    load_model,
    min_models,
    minimal_states,
    model_from_dict,
    model_to_dict,
    states_of,
    verify_cumulative,
    verify_strong_cumulative,
)
from .systemc import (
    EntailmentRelation,
    RuleViolation,
    check_rule,
    check_system_c,
    close_under_conjunction,
    induced_relation,
    load_universe,
)
from .succinct import (
    Circuit,
    Gate,
    NetlistError,
    SuccinctModel,
    eval_circuit,
    expand,
    parse_circuit,
    render_circuit,
    succ_entails,
    succ_label,
    validate_succinct,
)
from .oracle import oracle_entails, oracle_eval_team

__version__ = "0.1.0"

__all__ = [
    "And", "Bottom", "Dep", "Formula", "NegLit", "Or", "ParseError", "PosLit",
    "Top", "is_pl", "node_count", "parse", "render", "vars_of",
    "Domain", "Team", "Valuation", "all_teams", "all_valuations",
    "bits_to_team", "team_from_literal", "team_literal", "team_to_bits",
    "check_dep", "check_downward_closure", "check_flatness", "eval_classical",
    "eval_team", "eval_team_flat", "semantic_entails", "semantic_equiv",
    "RelationalModel", "VerificationReport", "Witness", "entails",
    "entails_witness", "is_smooth", "label_satisfies", "load_model",
    "min_models", "minimal_states", "model_from_dict", "model_to_dict",
    "states_of", "verify_cumulative", "verify_strong_cumulative",
    "EntailmentRelation", "RuleViolation", "check_rule", "check_system_c",
    "close_under_conjunction", "induced_relation", "load_universe",
    "Circuit", "Gate", "NetlistError", "SuccinctModel", "eval_circuit",
    "expand", "parse_circuit", "render_circuit", "succ_entails", "succ_label",
    "validate_succinct",
    "oracle_entails", "oracle_eval_team",
    "__version__",
]
