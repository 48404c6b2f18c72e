import json

import pytest

from hierdepth import reproduce
from hierdepth.cli import main


@pytest.fixture(scope="module")
def claims():
    return {c.claim_id: c for c in reproduce.run_all()}


def test_statuses_valid(claims):
    allowed = {reproduce.CONFIRMED, reproduce.REFUTED, reproduce.NOT_TESTABLE}
    assert all(c.status in allowed for c in claims.values())
    assert len(claims) >= 30


def test_anchor_claims(claims):
    assert claims["elliptic-point-count"].status == reproduce.CONFIRMED
    assert claims["elliptic-example-mds-k3"].status == reproduce.REFUTED
    assert claims["mds-iff-genus-zero"].status == reproduce.REFUTED
    assert claims["formal-arc-lift"].status == reproduce.CONFIRMED
    assert claims["arc-order-additivity"].status == reproduce.CONFIRMED


def test_p2_depth_claim(claims):
    c = claims["p2-quadrics-depth"]
    assert c.status == reproduce.CONFIRMED and c.computed["h"] == 6


def test_contact_claims(claims):
    assert claims["contact-order-mixed-1of3"].status == reproduce.REFUTED
    equal = [c for cid, c in claims.items() if cid.startswith("contact-order") and "mixed" not in cid]
    assert equal and all(c.status == reproduce.CONFIRMED for c in equal)


def test_report_schema(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["reproduce", "--out", str(out)]) == 0
    capsys.readouterr()
    data = json.loads(out.read_text())
    assert isinstance(data, list)
    for rec in data:
        assert set(rec) == {"claim_id", "paper_ref", "status", "computed", "expected"}
