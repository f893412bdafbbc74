from __future__ import annotations

import json
import os

import jsonschema
import pytest

from chardeg.cli import main
from chardeg.families import quaternion_group
from chardeg.groups import cyclic_group, format_cayley, semidirect_product
from chardeg.schemas import (
    CERTIFICATE_SCHEMA,
    CHAR_TABLE_SCHEMA,
    CLASSIFICATION_SCHEMA,
)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_table_text(capsys):
    rc, out, _ = run(capsys, "table", "frobenius:q=5")
    assert rc == 0
    assert "class" in out and "X4" in out
    assert " 4" in out and "-1" in out


def test_table_json(capsys):
    rc, out, _ = run(capsys, "table", "catalog:8/1", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CHAR_TABLE_SCHEMA)
    assert payload["order"] == 8
    assert sorted(c["degree"] for c in payload["characters"]) == [1, 1, 1, 1, 2]


def test_classify_text(capsys):
    rc, out, _ = run(capsys, "classify", "2")
    assert rc == 0
    assert "Q8" in out and "D4" in out


def test_classify_json_schema(capsys):
    rc, out, _ = run(capsys, "classify", "0", "--format", "json")
    assert rc == 0
    jsonschema.validate(json.loads(out), CLASSIFICATION_SCHEMA)


def test_check_gagola_pass(capsys):
    rc, out, _ = run(capsys, "check-gagola", "symplectic:p=3,w=1")
    assert rc == 0
    assert "PASSED" in out
    assert "p=3" in out and "k=1" in out and "m=1" in out


def test_check_gagola_json(capsys):
    rc, out, _ = run(capsys, "check-gagola", "frobenius:q=5", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CERTIFICATE_SCHEMA)
    assert payload["passed"] is True
    assert (payload["p"], payload["k"], payload["m"]) == (5, 1, 0)


def test_check_gagola_failing_group_exits_two(capsys, tmp_path):
    # Q8 : C3 (binary tetrahedral shape) fails the battery but not usage
    Q = quaternion_group()
    by_label = {Q.label(g): g for g in range(8)}
    cycle = {"i": "j", "j": "k", "k": "i"}
    sigma = [0] * 8
    for g in range(8):
        lab = Q.label(g)
        sign, core = ("-", lab[1:]) if lab.startswith("-") else ("", lab)
        sigma[g] = by_label[sign + cycle.get(core, core)]
    tau = [sigma[sigma[x]] for x in range(8)]
    G = semidirect_product(Q, cyclic_group(3), [list(range(8)), sigma, tau])
    path = tmp_path / "sl23.cayley"
    path.write_text(format_cayley(G))
    rc, out, _ = run(capsys, "check-gagola", f"cayley:{path}")
    assert rc == 2
    assert "FAILED" in out


def test_check_gagola_no_unique_top_is_usage_error(capsys):
    rc, _, err = run(capsys, "check-gagola", "catalog:4/0")
    assert rc == 1
    assert "unique" in err


def test_verify_brauer(capsys):
    rc, out, _ = run(capsys, "verify-brauer", "catalog:8/3", "--count", "6")
    assert rc == 0
    assert "agree" in out.lower()


def test_verify_brauer_json(capsys):
    rc, out, _ = run(capsys, "verify-brauer", "catalog:3/0", "--count", "4",
                     "--seed", "5", "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["functions"] == 4
    assert payload["agreement"] is True
    assert payload["virtual"] == 2  # odd seeds build true virtual characters


def test_catalog_listing(capsys):
    rc, out, _ = run(capsys, "catalog", "8")
    assert rc == 0
    for name in ("C8", "Q8", "D4", "C4xC2", "C2^3"):
        assert name in out


def test_catalog_unsupported_order(capsys):
    rc, _, err = run(capsys, "catalog", "7")
    assert rc == 1
    assert "7" in err


def test_bounds_text(capsys):
    rc, out, _ = run(capsys, "bounds", "3")
    assert rc == 0
    assert "518400" in out  # (6!)^2


def test_bad_verb_usage_error(capsys):
    rc, _, _ = run(capsys, "frobnicate")
    assert rc == 1


def test_missing_argument_usage_error(capsys):
    rc, _, _ = run(capsys, "table")
    assert rc == 1


def test_bad_group_spec_usage_error(capsys):
    rc, _, err = run(capsys, "table", "nonsense:spec")
    assert rc == 1
    assert err


def test_missing_cayley_file_usage_error(capsys):
    rc, _, _ = run(capsys, "table", "cayley:/does/not/exist.txt")
    assert rc == 1


def test_order_bound_flag(capsys):
    rc, _, err = run(capsys, "table", "symplectic:p=5,w=1", "--order-bound", "100")
    assert rc == 1
    assert "bound" in err.lower()


def test_order_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("CHARDEG_ORDER_BOUND", "10")
    rc, _, err = run(capsys, "table", "frobenius:q=11")
    assert rc == 1
    assert "bound" in err.lower()


def test_unparseable_cayley_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "broken.cayley"
    path.write_text("0 1\n1 1\n")
    rc, _, err = run(capsys, "table", f"cayley:{path}")
    assert rc == 1
    assert err


def test_non_group_cayley_file_is_check_failure(capsys, tmp_path):
    path = tmp_path / "notagroup.cayley"
    path.write_text("2\n0 1\n1 1\n")
    rc, _, err = run(capsys, "table", f"cayley:{path}")
    assert rc == 2
    assert err
