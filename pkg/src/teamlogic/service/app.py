"""HTTP service exposing the reasoning engines.

Every endpoint is a stateless decision procedure: the request carries the
whole problem (domain, team or model document, formulas) and the response
carries the verdict.  Domain and input errors surface as 400 with a detail
message; payload shape errors are FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..bench import run_bench
from ..formula import is_pl, parse, render
from ..oracle import oracle_entails, oracle_eval_team
from ..relmodel import (
    entails_witness,
    model_from_dict,
    verify_cumulative,
    verify_query_universe,
    verify_strong_cumulative,
)
from ..semantics import eval_team, eval_team_flat
from ..succinct import (
    SuccinctModel,
    expand,
    parse_circuit,
    succ_entails_witness,
    validate_succinct,
)
from ..systemc import check_system_c, close_under_conjunction, induced_relation
from ..teams import Domain, team_from_literal
from .schemas import (
    BenchRequest,
    BenchResponse,
    BenchRowOut,
    EntailRequest,
    EntailResponse,
    EvalRequest,
    EvalResponse,
    HealthResponse,
    SuccEntailRequest,
    SystemCRequest,
    SystemCResponse,
    VerifyRequest,
    VerifyResponse,
    WitnessOut,
)


def _report_response(report) -> VerifyResponse:
    return VerifyResponse(
        prop=report.prop,
        passed=report.passed,
        witnesses=[
            WitnessOut(subject=w.subject, states=list(w.states), detail=w.detail)
            for w in report.witnesses
        ],
        notes=list(report.notes),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="teamlogic", version=__version__)

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/eval", response_model=EvalResponse)
    def eval_endpoint(req: EvalRequest) -> EvalResponse:
        domain = Domain(tuple(req.vars))
        team = team_from_literal(domain, req.team)
        formula = parse(req.formula)
        if req.engine == "flat":
            result = eval_team_flat(team, formula)
        elif req.engine == "oracle":
            result = oracle_eval_team(team, formula)
        else:
            result = eval_team(team, formula)
        return EvalResponse(result=result)

    @app.post("/entail", response_model=EntailResponse)
    def entail_endpoint(req: EntailRequest) -> EntailResponse:
        model = model_from_dict(req.model.as_document())
        phi = parse(req.antecedent)
        psi = parse(req.consequent)
        if req.logic == "tpl" and not (is_pl(phi) and is_pl(psi)):
            raise ValueError("tpl queries admit no dependence atoms")
        warnings: list[str] = []
        if req.verify:
            report = verify_cumulative(model, universe=verify_query_universe(phi, psi))
            if not report.passed:
                warnings.extend(
                    f"not cumulative for {w.subject}: {', '.join(w.states)}"
                    for w in report.witnesses
                )
        if req.engine == "oracle":
            result = oracle_entails(model, phi, psi)
            witness = None
        else:
            engine = "flat" if req.logic == "tpl" else "generic"
            result, witness = entails_witness(model, phi, psi, engine=engine)
        return EntailResponse(
            result=result, violating_state=witness, verify_warnings=warnings
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
        model = model_from_dict(req.model.as_document())
        universe = [parse(s) for s in req.universe] if req.universe is not None else None
        if req.strong:
            if universe is None:
                raise ValueError("strong verification needs a universe of formulas")
            report = verify_strong_cumulative(model, universe)
        elif req.mode == "all-subsets":
            if universe is not None:
                raise ValueError("all-subsets mode takes no universe")
            report = verify_cumulative(model, all_subsets=True)
        else:
            if universe is None:
                raise ValueError("universe mode needs a universe of formulas")
            report = verify_cumulative(model, universe=universe)
        return _report_response(report)

    @app.post("/systemc", response_model=SystemCResponse)
    def systemc_endpoint(req: SystemCRequest) -> SystemCResponse:
        model = model_from_dict(req.model.as_document())
        universe = [parse(s) for s in req.universe]
        if req.close_depth > 0:
            universe = list(
                close_under_conjunction(
                    universe, model.domain, logic=req.logic, depth=req.close_depth
                )
            )
        relation = induced_relation(model, universe, logic=req.logic)
        report = check_system_c(relation)
        return SystemCResponse(
            passed=report.passed,
            violations=[w.detail for w in report.witnesses],
            universe=[render(f) for f in universe],
        )

    @app.post("/succ-entail", response_model=EntailResponse)
    def succ_entail_endpoint(req: SuccEntailRequest) -> EntailResponse:
        domain = Domain(tuple(req.vars))
        sm = SuccinctModel(
            domain,
            req.state_bits,
            parse_circuit(req.label_circuit),
            parse_circuit(req.order_circuit),
        )
        report = validate_succinct(sm)
        if not report.passed:
            raise ValueError(
                "invalid succinct model: "
                + "; ".join(w.describe() for w in report.witnesses)
            )
        phi = parse(req.antecedent)
        psi = parse(req.consequent)
        warnings = list(report.notes)
        if req.verify:
            cumulative = verify_cumulative(
                expand(sm), universe=verify_query_universe(phi, psi)
            )
            if not cumulative.passed:
                warnings.extend(
                    f"not cumulative for {w.subject}: {', '.join(w.states)}"
                    for w in cumulative.witnesses
                )
        result, witness = succ_entails_witness(sm, phi, psi)
        return EntailResponse(
            result=result, violating_state=witness, verify_warnings=warnings
        )

    @app.post("/bench", response_model=BenchResponse)
    def bench_endpoint(req: BenchRequest) -> BenchResponse:
        result = run_bench(
            logic=req.logic,
            max_team_size=req.max_team_size,
            trials=req.trials,
            seed=req.seed,
            family=req.family,
        )
        return BenchResponse(
            rows=[
                BenchRowOut(
                    logic=r.logic,
                    team_size=r.team_size,
                    formula_size=r.formula_size,
                    median_ns=r.median_ns,
                )
                for r in result.rows
            ],
            cases_digest=result.cases_digest,
        )

    return app


app = create_app()

__all__ = ["app", "create_app"]
