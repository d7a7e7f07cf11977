import io
import json

import pytest

from expdioph.scan import (
    ScanConfig,
    load_report,
    merge_reports,
    odd_c_violations,
    read_jsonl,
    rows_with_count,
    save_report,
    scan_range,
    split_config,
    to_tsv_string,
    write_jsonl,
)

CENSUS_13 = ScanConfig(13, 13, 13, 10 ** 9)


@pytest.fixture(scope="module")
def census():
    return scan_range(CENSUS_13)


def test_census_rows_all_exceptional(census):
    keys = {(r.a, r.b, r.c) for r in census.rows}
    assert {(3, 5, 2), (2, 5, 3), (2, 7, 3), (2, 3, 11), (3, 13, 2), (2, 3, 5), (3, 10, 13)} <= keys
    assert all(r.exceptional for r in census.rows)
    assert all(r.n >= 2 for r in census.rows)


def test_small_box():
    rep = scan_range(ScanConfig(5, 5, 5, 10 ** 6))
    assert [(r.a, r.b, r.c) for r in rep.rows] == [
        (2, 3, 5), (2, 5, 3), (3, 2, 5), (3, 5, 2), (5, 2, 3), (5, 3, 2)]


def test_rows_sorted(census):
    keys = [(r.a, r.b, r.c) for r in census.rows]
    assert keys == sorted(keys)


def test_checksum_independent_of_workers(census):
    from dataclasses import replace
    assert scan_range(replace(CENSUS_13, workers=3)).checksum == census.checksum


def test_merge_halves_equals_single_shot(census):
    parts = [scan_range(cfg) for cfg in split_config(CENSUS_13, 2)]
    merged = merge_reports(parts)
    assert merged.checksum == census.checksum
    assert merged.rows == census.rows
    assert merge_reports(parts[::-1]).checksum == census.checksum


def test_merge_three_way_associative(census):
    a, b, c = [scan_range(cfg) for cfg in split_config(CENSUS_13, 3)]
    left = merge_reports([merge_reports([a, b]), c])
    right = merge_reports([a, merge_reports([b, c])])
    assert left.checksum == right.checksum == census.checksum


def test_merge_errors(census):
    with pytest.raises(ValueError):
        merge_reports([])
    with pytest.raises(ValueError):
        merge_reports([census, census])
    lo, hi = split_config(CENSUS_13, 2)
    from dataclasses import replace
    other = scan_range(replace(hi, height=10 ** 8))
    with pytest.raises(ValueError):
        merge_reports([scan_range(lo), other])
    a, _, c = split_config(CENSUS_13, 3)
    with pytest.raises(ValueError):
        merge_reports([scan_range(a), scan_range(c)])


def test_allow_perfect_powers_labels_non_exceptional():
    rep = scan_range(ScanConfig(13, 13, 13, 10 ** 9, exclude_perfect_powers=False))
    assert any(not r.exceptional for r in rep.rows)
    assert len(rep.rows) > len(scan_range(CENSUS_13).rows)


def test_odd_c_bound(census):
    assert odd_c_violations(census) == []


def test_even_c_three_solutions_only_3_5_2():
    rep = scan_range(ScanConfig(30, 30, 30, 10 ** 12, exclude_perfect_powers=False))
    threes = rows_with_count(rep, 3, even_c=True)
    assert [(r.a, r.b, r.c) for r in threes] == [(3, 5, 2), (5, 3, 2)]
    assert all(r.n <= 3 for r in rep.rows if r.c % 2 == 0)


def test_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(1, 5, 5, 100)
    with pytest.raises(ValueError):
        ScanConfig(5, 5, 5, 100, workers=0)
    with pytest.raises(ValueError):
        ScanConfig(5, 5, 50, 10)


def test_jsonl_schema_and_roundtrip(census):
    buf = io.StringIO()
    write_jsonl(census.rows, buf)
    lines = buf.getvalue().splitlines()
    doc = json.loads(lines[0])
    assert set(doc) == {"a", "b", "c", "H", "N", "solutions", "exceptional"}
    assert isinstance(doc["H"], str) and isinstance(doc["a"], int)
    assert tuple(read_jsonl(io.StringIO(buf.getvalue()))) == census.rows


def test_save_and_load(tmp_path, census):
    path = str(tmp_path / "census.jsonl")
    meta = save_report(census, path)
    assert json.load(open(meta))["checksum"] == census.checksum
    assert load_report(path) == census


def test_load_detects_tampering(tmp_path, census):
    path = tmp_path / "census.jsonl"
    save_report(census, str(path))
    lines = path.read_text().splitlines()
    path.write_text("\n".join(lines[1:]) + "\n")
    with pytest.raises(ValueError):
        load_report(str(path))


def test_tsv(census):
    text = to_tsv_string(census.rows)
    header, first = text.splitlines()[:2]
    assert header.split("\t") == ["a", "b", "c", "H", "N", "solutions", "exceptional"]
    assert first.split("\t")[:5] == ["2", "3", "5", "1000000000", "2"]
