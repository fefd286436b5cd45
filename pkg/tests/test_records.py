import io
import json

import pytest

from nlhorn.inequalities import enumerate_extended, generate
from nlhorn.records import (
    FORMAT_VERSION,
    cache_file,
    cached_inequalities,
    default_cache_dir,
    dump_inequalities,
    load_inequalities,
    read_inequalities,
    save_inequalities,
    write_report,
)
from nlhorn.verify import scan_conjecture


@pytest.mark.parametrize("family", ["extended", "horn", "weyl", "subset-sum", "variant"])
def test_roundtrip_is_byte_identical(family, tmp_path):
    ineqs = generate(2, family)
    text = dump_inequalities(ineqs)
    back = read_inequalities(io.StringIO(text))
    assert back.vectors() == ineqs.vectors()
    assert dump_inequalities(back) == text
    path = tmp_path / "x.jsonl"
    save_inequalities(ineqs, path)
    assert path.read_text() == text
    assert load_inequalities(path).vectors() == ineqs.vectors()


def test_header_and_records():
    lines = dump_inequalities(enumerate_extended(1)).splitlines()
    head = json.loads(lines[0])
    assert head["format_version"] == FORMAT_VERSION
    assert head["count"] == 3 and head["n"] == 1
    rec = json.loads(lines[1])
    assert set(rec) == {"n", "family", "coeffs", "provenance", "sources", "witness", "trivial"}
    assert rec["trivial"] is False


def test_variant_marks_trivial_rows():
    recs = [json.loads(l) for l in dump_inequalities(generate(2, "variant")).splitlines()[1:]]
    for r in recs:
        assert r["trivial"] == all(c >= 0 for c in r["coeffs"])
        assert any(r["coeffs"])


def test_rejects_other_versions():
    text = dump_inequalities(enumerate_extended(1)).replace('"format_version":1', '"format_version":99')
    with pytest.raises(ValueError):
        read_inequalities(io.StringIO(text))


def test_csv_output():
    text = dump_inequalities(enumerate_extended(1), fmt="csv")
    rows = text.strip().splitlines()
    assert rows[0].startswith("n,family,coeffs")
    assert len(rows) == 4


def test_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("NLHORN_CACHE", str(tmp_path / "c"))
    assert default_cache_dir() == tmp_path / "c"
    a = cached_inequalities(2, "extended")
    path = cache_file(default_cache_dir(), 2, "extended")
    assert path.exists()
    stamp = path.stat().st_mtime_ns
    b = cached_inequalities(2, "extended")
    assert path.stat().st_mtime_ns == stamp
    assert a.vectors() == b.vectors()
    cached_inequalities(2, "extended", regen=True)
    assert path.read_text() == dump_inequalities(a)


def test_report_lines():
    buf = io.StringIO()
    write_report(scan_conjecture(1, 3), buf)
    head = json.loads(buf.getvalue().splitlines()[0])
    assert head["format"] == "nlhorn-report" and head["kind"] == "conjecture"
    assert "tool_version" in head and "wall_time" in head
