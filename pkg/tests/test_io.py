import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heptacyc.bandfile import (
    BandFile,
    dense_from_csv,
    dense_to_csv,
    load_band_file,
    load_rhs,
    save_band_file,
)
from heptacyc.bench import bench, medians
from heptacyc.core import AntiCyclicHeptaMatrix, to_dense
from heptacyc.errors import DimensionTooSmall, LengthMismatch, ParseError
from heptacyc.factorization import determinant, factor
from heptacyc.generate import generate
from heptacyc.oracle import oracle_det
from heptacyc.scalars import Rational


def _doc(n=8, **changes):
    doc = {
        "format": "hepta-band-v1",
        "kind": "cyclic",
        "n": n,
        "entries": {f: ["1" if f == "d" else "0"] * n for f in "daACbBD"},
    }
    doc.update(changes)
    return doc


def _write(tmp_path, doc, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return p


def test_load_fixture_matches_dense(hepta_A, dense_A, hepta_B, dense_B):
    assert to_dense(hepta_A) == dense_A
    assert isinstance(hepta_B, AntiCyclicHeptaMatrix)
    assert to_dense(hepta_B) == dense_B


def test_load_rejects_small_order(tmp_path):
    with pytest.raises(DimensionTooSmall):
        load_band_file(_write(tmp_path, _doc(n=7)))


def test_load_rejects_short_array(tmp_path):
    doc = _doc()
    doc["entries"]["a"] = ["0"] * 7
    with pytest.raises(LengthMismatch):
        load_band_file(_write(tmp_path, doc))


@pytest.mark.parametrize("mutate,needle", [
    (lambda d: d.update(format="v0"), "format"),
    (lambda d: d.update(kind="sideways"), "kind"),
    (lambda d: d.update(n="8"), "'n'"),
    (lambda d: d["entries"].pop("B"), "entries.B"),
    (lambda d: d["entries"]["d"].__setitem__(2, "1.5"), "entries.d[3]"),
    (lambda d: d["entries"]["d"].__setitem__(0, 1.0), "entries.d[1]"),
    (lambda d: d["entries"].update(E=["0"] * 8), "unknown"),
])
def test_parse_errors_name_the_field(tmp_path, mutate, needle):
    doc = _doc()
    mutate(doc)
    with pytest.raises(ParseError) as info:
        load_band_file(_write(tmp_path, doc))
    assert needle in str(info.value)


def test_parse_error_reports_line(tmp_path):
    with pytest.raises(ParseError) as info:
        load_band_file(_write(tmp_path, '{\n  "format": "hepta-band-v1",\n  oops\n}'))
    assert "line 3" in str(info.value)


def test_round_trip_fixtures(fixtures_dir, tmp_path):
    for name in ("A.json", "B.json", "singular.json", "identity8.json", "identity10.json"):
        text = (fixtures_dir / name).read_text()
        M = load_band_file(fixtures_dir / name)
        out = tmp_path / name
        save_band_file(M, out)
        assert out.read_text() == text
        assert load_band_file(out) == M


def test_values_are_canonicalized():
    doc = _doc()
    doc["entries"]["d"][0] = "4/2"
    doc["entries"]["a"][0] = " -6/4 "
    bf = BandFile.loads(json.dumps(doc))
    assert bf.entries["d"][0] == "2"
    assert bf.entries["a"][0] == "-3/2"


@settings(max_examples=20, deadline=None)
@given(st.integers(8, 30), st.integers(0, 10**6), st.integers(0, 3),
       st.sampled_from(["cyclic", "anti"]))
def test_generated_round_trip(n, seed, zp, kind):
    bf = generate(n, seed, zp, kind)
    text = bf.dumps()
    again = BandFile.loads(text)
    assert again == bf
    assert again.dumps() == text


def test_dense_csv_round_trip(dense_A):
    assert dense_from_csv(dense_to_csv(dense_A)) == dense_A
    with pytest.raises(ParseError):
        dense_from_csv("1,2\n3\n")
    with pytest.raises(ParseError) as info:
        dense_from_csv("1,2\n3,x\n")
    assert "line 2" in str(info.value)
    with pytest.raises(ParseError):
        dense_from_csv("")


def test_load_rhs(fixtures_dir, tmp_path):
    assert load_rhs(fixtures_dir / "rhs10.txt") == [Rational(i) for i in range(1, 11)]
    bad = tmp_path / "rhs.txt"
    bad.write_text("1\n2/3\nzz\n")
    with pytest.raises(ParseError) as info:
        load_rhs(bad)
    assert "line 3" in str(info.value)


# -- generator --------------------------------------------------------------

def test_generate_examples():
    H = generate(8, 1, 0).to_matrix()
    assert factor(H).substituted == frozenset()
    H = generate(12, 7, 1).to_matrix()
    assert len(factor(H).substituted) == 1
    assert determinant(H) == oracle_det(to_dense(H))
    with pytest.raises(ValueError):
        generate(12, 7, 4)
    with pytest.raises(DimensionTooSmall):
        generate(7, 0)


def test_generate_is_deterministic():
    for args in [(8, 1, 0, "cyclic"), (20, 3, 2, "anti"), (33, 9, 3, "cyclic")]:
        assert generate(*args).dumps() == generate(*args).dumps()
    assert generate(20, 3, 2).dumps() != generate(20, 4, 2).dumps()


def test_generate_anti_wraps_core():
    bf = generate(10, 5, 1, "anti")
    assert bf.kind == "anti"
    M = bf.to_matrix()
    assert isinstance(M, AntiCyclicHeptaMatrix)
    assert len(factor(M.core).substituted) == 1


@pytest.mark.parametrize("zp", [0, 1, 2, 3])
def test_generate_hits_requested_count_across_sizes(zp):
    for n in (8, 9, 10, 20, 40):
        assert len(factor(generate(n, 0, zp).to_matrix()).substituted) == zp


# -- bench ------------------------------------------------------------------

def test_bench_trials_and_medians():
    records = bench([16], mode="exact", trials=3)
    assert len(records) == 3
    assert all(r.n == 16 and r.factor_s >= 0 and r.op_count > 0 for r in records)
    (row,) = medians(records)
    assert row["trials"] == 3


def test_bench_exact_cap():
    with pytest.raises(ValueError) as info:
        bench([5000], mode="exact")
    assert "cap" in str(info.value)


def test_bench_float_linearity():
    r1, r2 = bench([1000, 2000], mode="float")
    assert 1.8 <= r2.op_count / r1.op_count <= 2.2
    assert r1.invert_s is None
