import pytest

from jacobi_modsym.arith import is_square
from jacobi_modsym.jacobi import AdmissiblePair, NotApplicable, coefficient, coefficient_any_pair
from jacobi_modsym.table import batch_table, compare_tables, parse_table, raw_buckets
from conftest import load_table

CASES = [("w2m37", (-4, 12), 48), ("w2m37", (-3, 21), 48), ("w10m1", (-3, 1), 48),
         ("w2m11", (5, 7), 49), ("w2m11", (12, 10), 49), ("w2m15", (21, 9), 49), ("w2m15", (24, 12), 49)]


@pytest.mark.parametrize("name,pair,D_max", CASES)
def test_batch_matches_per_coefficient(symbols, name, pair, D_max):
    s = symbols[name]
    pair = AdmissiblePair(*pair)
    table = batch_table(s, pair, D_max)
    for (D, r), v in table.entries.items():
        if v is None:
            assert is_square(D * pair.D0)
            with pytest.raises(NotApplicable):
                coefficient(s, pair, D, r)
        else:
            assert v == coefficient(s, pair, D, r)


def test_batch_fill_na_matches_any_pair(symbols):
    s = symbols["w2m11"]
    pair = AdmissiblePair(5, 7)
    table = batch_table(s, pair, 49, fill_na=True)
    assert not table.na
    for key, src in table.sources.items():
        res = coefficient_any_pair(s, pair, *key)
        assert table.entries[key] == res.value and src == res.pair


def test_worker_count_determinism(symbols):
    s = symbols["w2m37"]
    pair = AdmissiblePair(-4, 12)
    one = batch_table(s, pair, 300, workers=1).to_tsv()
    assert batch_table(s, pair, 300, workers=3).to_tsv() == one
    assert batch_table(s, pair, 300, workers=8).to_tsv() == one


def test_disjoint_slices_add_up(symbols):
    s = symbols["w2m15"]
    pair = AdmissiblePair(21, 9)
    whole = raw_buckets(s, pair, 0, 900)
    parts = {}
    for lo, hi in [(0, 200), (200, 555), (555, 900)]:
        part = raw_buckets(s, pair, lo, hi)
        assert not set(part) & set(parts)
        parts.update(part)
    assert parts == whole


def test_empty_and_zero_tables(symbols):
    t = batch_table(symbols["w2m37"], AdmissiblePair(-4, 12), 2)
    assert t.entries == {}
    z = batch_table(symbols["zero"], None, 100)
    assert all(v in (0, None) for v in z.entries.values())


def test_table_lookup_and_tsv_round_trip(symbols):
    s = symbols["w2m37"]
    t = batch_table(s, AdmissiblePair(-4, 12), 48, fill_na=True)
    assert t.get(-12, 42) == t.get(-12, 32) == -1
    assert t.get(-7, 74 - 17) == t.get(-7, 17)
    with pytest.raises(KeyError):
        t.get(-51, 1)
    text = t.to_tsv()
    back = parse_table(text)
    assert back.entries == t.entries and back.pair == t.pair and back.sources == t.sources
    assert back.to_tsv() == text
    assert text.splitlines()[0] == "# k=2 m=37 eps=-1 pair=(-4,12)"


def test_compare_tables(symbols):
    ref = load_table("table4_m1.tsv")
    series = load_table("phi10_1_series.tsv")
    res = compare_tables(ref, series, up_to_scalar=True)
    assert res.ok and res.scalar == -1
    assert not compare_tables(ref, series).ok
    assert compare_tables(ref, ref).ok


def test_parse_table_errors():
    with pytest.raises(ValueError):
        parse_table("1\t1\t1\n")
    with pytest.raises(ValueError):
        parse_table("# k=2 m=1 eps=-1 pair=(-3,1)\n1\t2\n")
