import os
import subprocess
from fractions import Fraction

import pytest

import gfano


def test_series_ops():
    assert gfano.multiply([1, 1, 0], [1, -1, 0]) == [1, 0, -1]
    assert gfano.reverse([0, 1, -1, 0, 0]) == [0, 1, 1, 2, 5]
    assert gfano.pow_rational([1, 1, 0, 0], Fraction(1, 2)) == [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]
    assert gfano.normalize([1, 3, 15, 105, 855]) == [1, 0, 6, 24, 162]
    with pytest.raises(ValueError):
        gfano.divide([1, 0], [0, 1])


def test_periods_and_operators():
    assert gfano.iseries("Y30", 5) == [1, 3, 15, 105, 855, 7533]
    b = gfano.catalog_operator("L12")
    assert b == [2, 80, 24, 96, 0]
    f = gfano.holomorphic_solution(b, 30)
    assert f[:6] == [1, 0, 12, 48, 540, 4320]
    assert all(x == 0 for x in gfano.apply_operator(b, f))
    assert gfano.normalize(gfano.iseries("Y24", 30)) == f
    assert gfano.gseries("Y24", 4)[2] == 6
    with pytest.raises(ValueError):
        gfano.gseries("Y28", 4)


def test_hauptmoduln():
    offset, body = gfano.hauptmodul("10A", 4, 8)
    assert offset == -1
    assert body[:6] == [1, 4, 22, 56, 177, 352]
    q = gfano.mirror_map("12A", 6, 20)
    assert all(x.denominator == 1 for x in q)
    offset, body = gfano.eta_product({1: 24}, 5)
    assert offset == 1 and body[:3] == [1, -24, 252]
    assert gfano.klein_j(3)[1][2] == 196884


def test_verification():
    r = gfano.verify_identity("Y24", 4, 6, 30)
    assert r["status"] == "PASS"
    bad = gfano.verify_identity("Y24", 4, 7, 30)
    assert bad["status"] == "FAIL"
    assert bad["first_mismatch"]["index"] == 1
    reports = gfano.verify_all(20)
    assert len(reports) == 10
    assert all(x["status"] == "PASS" for x in reports)
    assert len(gfano.families()) == 9


def test_mathieu():
    assert gfano.epsilon(10) == Fraction(4, 3)
    assert gfano.iota(6) == 8
    info = gfano.frame_shape("2^2 10^2")
    assert info["level"] == 20 and info["weight"] == 2
    assert gfano.hecke_check("1^8 2^8", 60)["holds"] is True


@pytest.mark.skipif("GFANO_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_json():
    out = subprocess.run([os.environ["GFANO_CLI"], "verify", "--family", "Y20", "--order", "20", "--json"],
                         capture_output=True, text=True, check=True)
    assert '"status":"PASS"' in out.stdout
