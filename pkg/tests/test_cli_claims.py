import json

import numpy as np
import pytest

from rankmetric import claims, field
from rankmetric import constructions as K
from rankmetric import serialize as S
from rankmetric.cli import main

FAST = ["thm-Uscattered-q2", "thm-Uscattered-q4", "thm-Uevasive-q2", "cor-directsum84-q2", "prop-cutting8",
        "sec42-duality-q2", "eq-pesi-random", "gabidulin-dual-mrd", "prop-cone-cutting8-q2"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    docs = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, docs


def strip_timing(doc):
    return {k: v for k, v in doc.items() if k != "elapsed_ms"}


# -- registry and reports ----------------------------------------------------------


def test_suites_are_registered():
    assert len(claims.SUITES["paper-core"]) == 12
    assert claims.SUITES["empty"] == []
    for ids in claims.SUITES.values():
        assert all(cid in claims.REGISTRY for cid in ids)
    assert claims.run_suite("empty") == []
    assert claims.exit_code([]) == 0


@pytest.mark.parametrize("cid", FAST)
def test_fast_claims_pass(cid):
    rep = claims.run_claim(claims.ClaimSpec(cid))
    assert rep.status == "pass", rep.observed
    doc = rep.to_json()
    json.dumps(doc)
    assert set(doc) >= {"claim_id", "status", "expected", "observed", "witnesses", "elapsed_ms", "scanned",
                        "version", "seed"}


def test_negative_scattered_claim_carries_witness():
    rep = claims.run_claim(claims.ClaimSpec("thm-Uscattered-q4"))
    assert rep.observed["scattered"] is False
    assert rep.witnesses and rep.witnesses[0]["weight"] >= 2
    ctx = field(2, 2, 4)
    M, _ = S.decode_matrix(ctx, rep.witnesses[0]["point"])
    assert K.construction_U(ctx).weight(M) == rep.witnesses[0]["weight"]


def test_unknown_claim_and_params():
    with pytest.raises(KeyError):
        claims.ClaimSpec("no-such-claim")
    with pytest.raises(ValueError):
        claims.ClaimSpec("prop-cutting8", {"bogus": 1})
    with pytest.raises(ValueError):
        claims.ClaimSpec("prop-cutting8", budget=0)


def test_budget_refusal_becomes_skipped():
    rep = claims.run_claim(claims.ClaimSpec("thm-Uevasive-q2", budget=1000))
    assert rep.status == "skipped-budget"
    assert rep.observed["count"] == 70161
    assert claims.exit_code([rep]) == 3


def test_property_suite_is_deterministic():
    a = [strip_timing(r.to_json()) for r in claims.run_suite("property-random", seed=7)]
    b = [strip_timing(r.to_json()) for r in claims.run_suite("property-random", seed=7)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert all(r["status"] == "pass" for r in a)


def test_reports_do_not_depend_on_worker_count():
    a = claims.run_claim(claims.ClaimSpec("thm-Uevasive-q2", workers=1)).to_json()
    b = claims.run_claim(claims.ClaimSpec("thm-Uevasive-q2", workers=2)).to_json()
    assert strip_timing(a) == strip_timing(b)


def test_claim_parameters_are_honoured():
    rep = claims.run_claim(claims.ClaimSpec("prop-cutting8", {"qs": [2]}))
    assert rep.status == "pass"
    assert list(rep.observed) == ["q=2"]


# -- command line ----------------------------------------------------------------------


def test_cli_run_and_exit_codes(capsys):
    code, docs = run_cli(capsys, "run", "--claim", "thm-Uscattered-q2")
    assert code == 0 and docs[0]["status"] == "pass"
    code, docs = run_cli(capsys, "run", "--claim", "nope")
    assert code == 2 and docs[0]["error"] == "config"
    code, docs = run_cli(capsys, "run", "--claim", "prop-cutting8", "--param", "oops")
    assert code == 2
    code, docs = run_cli(capsys, "run", "--claim", "prop-cutting8", "--param", "qs=[2]", "--workers", "2")
    assert code == 0 and docs[0]["params"]["qs"] == [2]
    code, docs = run_cli(capsys, "run", "--claim", "thm-Uevasive-q2", "--budget", "10")
    assert code == 3 and docs[0]["status"] == "skipped-budget"


def test_cli_suite_and_list(capsys):
    code, docs = run_cli(capsys, "suite", "empty")
    assert code == 0 and docs == []
    code, docs = run_cli(capsys, "suite", "nothing")
    assert code == 2
    code, docs = run_cli(capsys, "list")
    assert code == 0 and "paper-core" in docs[0]["suites"]


def test_cli_system_and_weights(capsys, tmp_path):
    code, docs = run_cli(capsys, "construct", "--name", "construction_U", "--params", '{"p":2,"h":1,"m":4}')
    assert code == 0
    sys_file = tmp_path / "u.json"
    sys_file.write_text(json.dumps(docs[0]))
    code, docs = run_cli(capsys, "system", "--op", "scattered", "--in", str(sys_file))
    assert docs[0]["scattered"] is True and docs[0]["maximum"] is True
    code, docs = run_cli(capsys, "system", "--op", "evasive", "--h", "2", "--r", "2", "--in", str(sys_file))
    assert docs[0]["evasive"] is False and docs[0]["max_weight"] == 3
    code, docs = run_cli(capsys, "system", "--op", "evasive", "--in", str(sys_file))
    assert code == 2
    code, docs = run_cli(capsys, "system", "--op", "profile", "--in", str(sys_file))
    assert docs[0]["profile"] == [3, 5, 7, 8]
    code, docs = run_cli(capsys, "system", "--op", "cutting", "--in", str(sys_file))
    assert docs[0]["cutting"] is True
    code, docs = run_cli(capsys, "system", "--op", "dual", "--in", str(sys_file))
    assert docs[0]["dual"]["k"] == 4 and len(docs[0]["dual"]["basis"]) == 8

    code, docs = run_cli(capsys, "construct", "--name", "gabidulin", "--params", '{"m":4,"n":4,"k":2}')
    code_file = tmp_path / "g.json"
    code_file.write_text(json.dumps(docs[0]))
    code, docs = run_cli(capsys, "weights", "--code", str(code_file))
    assert code == 0
    assert docs[0]["min_distance"] == 3 and docs[0]["mrd"] is True and docs[0]["profile"] == [3, 4]
    code, docs = run_cli(capsys, "weights", "--code", str(tmp_path / "missing.json"))
    assert code == 2


def test_cli_construct_rejects_bad_input(capsys):
    assert run_cli(capsys, "construct", "--name", "nothing")[0] == 2
    assert run_cli(capsys, "construct", "--name", "gabidulin", "--params", "{bad")[0] == 2
    assert run_cli(capsys, "construct", "--name", "construction_U", "--params", '{"m":3}')[0] == 2


# -- serialization ---------------------------------------------------------------------


def test_json_roundtrips(f16, f256):
    U = K.construction_U(f256)
    V = S.system_from_json(json.loads(json.dumps(S.system_to_json(U))))
    assert np.array_equal(V.basis, U.basis) and V.ctx is f256
    C = K.code_C(f16)
    D = S.code_from_json(json.loads(json.dumps(S.code_to_json(C))))
    assert D == C
    M = np.array([[0, 1], [f16.g, 5]])
    assert np.array_equal(S.decode_matrix(f16, S.encode_matrix(f16, M))[0], M)


def test_json_validation(f16):
    from rankmetric import FieldError

    with pytest.raises(FieldError):
        S.decode_matrix(f16, {"level": "Fq", "rows": [["g^1"]]})
    with pytest.raises(ValueError):
        S.decode_matrix(f16, {"rows": [["0", "g^1"], ["0"]]})
    with pytest.raises(FieldError):
        S.field_from_header({"h": 1})
    with pytest.raises(ValueError):
        S.system_from_json({"field": {"p": 2, "m": 4}, "k": 3, "basis": [["g^0", "0"]]})
