import pytest

from jacobi_modsym.jacobi import AdmissiblePair
from jacobi_modsym.lift import LiftError, QExpansion, eigen_consistency, shimura_lift
from jacobi_modsym.table import batch_table
from conftest import load_table
from oracles import curve_ap


@pytest.fixture(scope="module")
def table37(symbols):
    return batch_table(symbols["w2m37"], AdmissiblePair(-4, 12), 1200)


def test_lift_m37(table37):
    q = shimura_lift(table37, AdmissiblePair(-3, 21), 20)
    assert q[1] == 1 and q[2] == -2
    for p in [2, 3, 5, 7, 11, 13, 17, 19]:
        assert q[p] == curve_ap("37a1", p)
    rep = eigen_consistency(q, 2, 37)
    assert rep.passed and rep.checks > 0


def test_lift_from_fixture_table():
    t = load_table("table2_m37_pair-4_12.tsv")
    q = shimura_lift(t, AdmissiblePair(-3, 21), 2)
    assert q.coeffs == {1: 1, 2: -2}


def test_lift_errors(table37):
    with pytest.raises(LiftError, match="NA"):
        shimura_lift(table37, AdmissiblePair(-4, 12), 3)
    with pytest.raises(LiftError, match="beyond"):
        shimura_lift(table37, AdmissiblePair(-3, 21), 25)


def test_lift_of_zero_table(symbols):
    z = batch_table(symbols["zero"], AdmissiblePair(-4, 12), 80)
    q = shimura_lift(z, AdmissiblePair(-3, 21), 5)
    assert all(v == 0 for v in q.coeffs.values())
    assert not eigen_consistency(q).passed


def test_eigen_consistency_fault_injection(table37):
    q = shimura_lift(table37, AdmissiblePair(-3, 21), 20)
    bad = QExpansion(q.weight, q.level, dict(q.coeffs))
    bad.coeffs[6] += 1
    rep = eigen_consistency(bad, 2, 37)
    assert not rep.passed
    assert any(v[0] == "a(6)" for v in rep.violations)


def test_eigen_consistency_vacuous():
    rep = eigen_consistency(QExpansion(2, 37, {1: 1, 2: 5, 3: 7}), 2, 37)
    assert rep.passed and rep.checks == 0 and "vacuous" in rep.note


@pytest.mark.parametrize("name,label,table_pair,lift_pair", [
    ("w2m11", "11a1", (12, 10), (5, 7)),
    ("w2m15", "15a1", (24, 12), (21, 9)),
])
def test_lift_skew_examples(symbols, name, label, table_pair, lift_pair):
    s = symbols[name]
    n_max = 7
    table = batch_table(s, AdmissiblePair(*table_pair), n_max * n_max * lift_pair[0])
    q = shimura_lift(table, AdmissiblePair(*lift_pair), n_max)
    assert eigen_consistency(q).passed
    for p in [2, 3, 5, 7]:
        if s.level % p:
            assert q[p] == curve_ap(label, p) * q[1]
