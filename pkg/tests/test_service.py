import pytest
from fastapi.testclient import TestClient

from teamlogic import __version__
from teamlogic.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app(), raise_server_exceptions=False) as c:
        yield c


MODEL = {
    "vars": ["p", "q"],
    "states": {
        "s0": [[{"p": 1, "q": 0}]],
        "s1": [[{"p": 0, "q": 1}]],
    },
    "order": [["s0", "s1"]],
}


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok", "version": __version__}


def test_eval_engines_agree(client):
    payload = {"vars": ["p", "q", "r"], "team": "100;010", "formula": "dep(p;q)"}
    for engine in ("generic", "oracle"):
        r = client.post("/eval", json={**payload, "engine": engine})
        assert r.status_code == 200
        assert r.json() == {"result": True}
    r = client.post(
        "/eval",
        json={"vars": ["p", "q", "r"], "team": "100;010", "formula": "dep(p)"},
    )
    assert r.json() == {"result": False}


def test_eval_flat(client):
    r = client.post(
        "/eval",
        json={"vars": ["p"], "team": "1", "formula": "p", "engine": "flat"},
    )
    assert r.json() == {"result": True}
    r = client.post(
        "/eval",
        json={"vars": ["p"], "team": "1", "formula": "dep(p)", "engine": "flat"},
    )
    assert r.status_code == 400
    assert "propositional" in r.json()["detail"]


def test_eval_empty_team(client):
    r = client.post("/eval", json={"vars": ["p"], "formula": "F"})
    assert r.json() == {"result": True}


def test_eval_errors(client):
    r = client.post("/eval", json={"vars": ["p"], "team": "1", "formula": "p &"})
    assert r.status_code == 400
    assert "syntax error at position" in r.json()["detail"]
    r = client.post("/eval", json={"vars": ["p"], "team": "x", "formula": "p"})
    assert r.status_code == 400
    r = client.post(
        "/eval", json={"vars": ["p"], "team": "1", "formula": "p", "extra": 1}
    )
    assert r.status_code == 422


def test_entail(client):
    body = {"model": MODEL, "antecedent": "T", "consequent": "p"}
    r = client.post("/entail", json=body)
    assert r.status_code == 200
    assert r.json() == {
        "result": True,
        "violating_state": None,
        "verify_warnings": [],
    }
    r = client.post("/entail", json={**body, "consequent": "q"})
    out = r.json()
    assert out["result"] is False
    assert out["violating_state"] == "s0"
    r = client.post("/entail", json={**body, "engine": "oracle"})
    assert r.json()["result"] is True
    assert r.json()["violating_state"] is None


def test_entail_tpl_rejects_dep(client):
    body = {
        "model": MODEL,
        "antecedent": "dep(p)",
        "consequent": "p",
        "logic": "tpl",
    }
    r = client.post("/entail", json=body)
    assert r.status_code == 400
    assert "dependence" in r.json()["detail"]


def test_entail_verify_warnings(client):
    cyclic = {
        "vars": ["p"],
        "states": {"a": [[{"p": 1}]], "b": [[{"p": 1}]]},
        "order": [["a", "b"], ["b", "a"]],
    }
    body = {
        "model": cyclic,
        "antecedent": "p",
        "consequent": "p",
        "verify": True,
    }
    r = client.post("/entail", json=body)
    assert r.status_code == 200
    assert any("not cumulative for p" in w for w in r.json()["verify_warnings"])


def test_verify_universe_mode(client):
    r = client.post("/verify", json={"model": MODEL, "universe": ["p", "q", "T"]})
    assert r.status_code == 200
    out = r.json()
    assert out["passed"] is True
    assert out["prop"] == "cumulativity (universe)"
    r = client.post("/verify", json={"model": MODEL})
    assert r.status_code == 400


def test_verify_all_subsets(client):
    r = client.post("/verify", json={"model": MODEL, "mode": "all-subsets"})
    assert r.json()["passed"] is True
    r = client.post(
        "/verify",
        json={"model": MODEL, "mode": "all-subsets", "universe": ["p"]},
    )
    assert r.status_code == 400


def test_verify_strong(client):
    r = client.post(
        "/verify", json={"model": MODEL, "strong": True, "universe": ["p", "q"]}
    )
    assert r.json()["passed"] is True
    r = client.post("/verify", json={"model": MODEL, "strong": True})
    assert r.status_code == 400
    flat = {**MODEL, "order": []}
    r = client.post(
        "/verify", json={"model": flat, "strong": True, "universe": ["T"]}
    )
    out = r.json()
    assert out["passed"] is False
    assert out["witnesses"][0]["states"] == ["s0", "s1"]


def test_systemc_endpoint(client):
    body = {
        "model": MODEL,
        "universe": ["T", "p", "q"],
        "close_depth": 2,
    }
    r = client.post("/systemc", json=body)
    assert r.status_code == 200
    out = r.json()
    assert out["passed"] is True
    assert out["violations"] == []
    # the echoed universe is closed syntactically, so it grew
    assert set(["T", "p", "q"]).issubset(set(out["universe"]))
    assert len(out["universe"]) > 3
    # without closure, CM cannot even be checked on this universe
    r = client.post("/systemc", json={**body, "close_depth": 0})
    assert r.status_code == 400
    assert "conjunction-closed" in r.json()["detail"]


SUCC_LABEL = "inputs 3\ng0 = CONST1\ng1 = AND i0 i2\noutputs g0 g1\n"
SUCC_ORDER = "inputs 2\ng0 = NOT i0\ng1 = AND g0 i1\noutputs g1\n"


def test_succ_entail_endpoint(client):
    body = {
        "vars": ["p"],
        "state_bits": 1,
        "label_circuit": SUCC_LABEL,
        "order_circuit": SUCC_ORDER,
        "antecedent": "T",
        "consequent": "p | ~p",
    }
    r = client.post("/succ-entail", json=body)
    assert r.status_code == 200
    assert r.json()["result"] is True
    bad = {**body, "label_circuit": "inputs 3\noutputs i1 i2\n"}
    r = client.post("/succ-entail", json=bad)
    assert r.status_code == 400
    assert "invalid succinct model" in r.json()["detail"]
    garbled = {**body, "label_circuit": "inputs\n"}
    r = client.post("/succ-entail", json=garbled)
    assert r.status_code == 400
    assert "netlist line 1" in r.json()["detail"]


def test_bench_endpoint(client):
    body = {"logic": "tpl", "max_team_size": 4, "trials": 2, "seed": 5}
    r = client.post("/bench", json=body)
    assert r.status_code == 200
    out = r.json()
    assert [row["team_size"] for row in out["rows"]] == [2, 4]
    r2 = client.post("/bench", json=body)
    assert r2.json()["cases_digest"] == out["cases_digest"]
    r = client.post("/bench", json={"logic": "pdl", "family": "split-hard", "max_team_size": 1})
    assert r.status_code == 400


def test_unknown_model_keys_rejected(client):
    doc = {**MODEL, "comment": "hi"}
    r = client.post(
        "/entail", json={"model": doc, "antecedent": "T", "consequent": "p"}
    )
    assert r.status_code == 422
