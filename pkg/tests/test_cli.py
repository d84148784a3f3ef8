"""CLI: JSON shape, exit codes, determinism."""

import json
import os

import pytest

import helpers
from hedgegraphs.cli import run

FIX = helpers.FIXTURES


def _fx(name):
    return os.path.join(FIX, name + ".hg")


def test_info():
    doc, code = run(["info", "--file", _fx("fig1")])
    assert code == 0
    assert doc["result"]["n"] == 6
    assert doc["result"]["p"] == 14
    assert doc["schema_version"] == 1
    assert "input_digest" in doc


def test_pc_with_oracle_agreement():
    doc, code = run(["pc", "--file", _fx("fig1"), "--exact"])
    assert code == 0
    assert doc["result"]["methods_agree"] is True
    assert doc["result"]["value"] == doc["result"]["oracle_value"] == 0


def test_wpc_appendix_b():
    doc, code = run(["wpc", "--exact", "--file", _fx("appendixB")])
    assert code == 0
    assert doc["result"]["value"] == 2


def test_kstar_band_and_exact():
    doc, code = run(["kstar", "--file", _fx("appendixB")])
    assert code == 0
    lo, hi = doc["result"]["band"]
    assert lo <= 3 <= hi and doc["result"]["exact"] == 3
    doc, code = run(["kstar", "--exact", "--file", _fx("appendixB")])
    assert doc["result"]["value"] == 3


def test_connectivity_exact_and_band():
    doc, code = run(["connectivity", "--exact", "--file", _fx("c3")])
    assert code == 0 and doc["result"]["value"] == 2
    doc, code = run(["connectivity", "--file", _fx("c3")])
    lo, hi = doc["result"]["band"]
    assert lo <= 2 <= hi


def test_trim_and_cover_exit_codes():
    doc, code = run(["trim", "--file", _fx("fig4")])
    assert code == 0 and doc["result"]["feasible"]
    doc, code = run(["trim", "--file", _fx("fig4"), "--k", "2"])
    assert code == 1 and not doc["result"]["feasible"]
    assert doc["result"]["certificate_partition"]
    doc, code = run(["cover", "--file", _fx("fig3")])
    assert code == 0 and doc["result"]["min_cover_number"] == 2
    doc, code = run(["cover", "--file", _fx("fig3"), "--k", "1"])
    assert code == 1 and doc["result"]["violating_partition"]


def test_orient_verify_roundtrip(tmp_path):
    doc, code = run(["orient", "--file", _fx("fig4"), "--k", "1", "--root", "A"])
    assert code == 0 and doc["result"]["verified"]
    art = tmp_path / "orient.json"
    art.write_text(json.dumps(doc))
    doc2, code2 = run(["verify", "--file", _fx("fig4"), "--artifact", str(art)])
    assert code2 == 0 and doc2["result"]["ok"]


def test_sparsify_verify_roundtrip(tmp_path):
    doc, code = run(["sparsify", "--file", _fx("fig1"), "--seed", "1"])
    assert code == 0
    art = tmp_path / "sp.json"
    art.write_text(json.dumps(doc))
    doc2, code2 = run(["verify", "--file", _fx("fig1"), "--artifact", str(art)])
    assert doc2["result"]["kind"] == "sparsifier"
    assert code2 in (0, 1)


def test_sample_deterministic():
    a, _ = run(["sample", "--file", _fx("c3"), "--trials", "50", "--seed", "9"])
    b, _ = run(["sample", "--file", _fx("c3"), "--trials", "50", "--seed", "9"])
    a.pop("elapsed_seconds")
    b.pop("elapsed_seconds")
    assert a == b


def test_sample_base_experiment():
    doc, code = run([
        "sample", "--file", _fx("appendixB"), "--experiment", "base",
        "--trials", "20",
    ])
    assert code == 0 and doc["result"]["parameters"]["kstar"] == 3


def test_quotients():
    doc, code = run(["quotients", "--file", _fx("fig2")])
    assert code == 0
    assert doc["result"]["count"] == len(doc["result"]["quotients"])


def test_decompose():
    doc, code = run(["decompose", "--file", _fx("c3")])
    assert code == 0
    assert doc["result"]["kappa"] == "3/2"


def test_error_exit_codes(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("vertices A B\nhedge h : A Z\n")
    doc, code = run(["pc", "--file", str(bad)])
    assert code == 2 and doc["error"]["kind"] == "parse" and doc["error"]["line"] == 2

    doc, code = run(["pc", "--file", str(tmp_path / "missing.hg")])
    assert code == 2 and doc["error"]["kind"] == "input"

    big = tmp_path / "big.hg"
    names = [f"v{i}" for i in range(14)]
    lines = ["vertices " + " ".join(names)]
    lines += [f"hedge e{i} : v{i} v{i + 1}" for i in range(13)]
    big.write_text("\n".join(lines) + "\n")
    doc, code = run(["wpc", "--file", str(big)])
    assert code == 3 and doc["error"]["kind"] == "oracle-limit"
