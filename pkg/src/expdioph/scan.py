"""Census of multi-solution triples over a box of bases.

Work is chunked statically by ``c`` so that reports are reproducible for any
worker count; rows are sorted before hashing.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
from typing import Iterable, List, Optional, Sequence, TextIO

from .arith import gcd, is_perfect_power
from .exceptional import in_exceptional_set
from .solver import ExpSolution, Triple, enumerate_solutions


@dataclass(frozen=True)
class ScanConfig:
    a_max: int
    b_max: int
    c_max: int
    height: int
    exclude_perfect_powers: bool = True
    workers: int = 1
    c_min: int = 2

    def __post_init__(self):
        if min(self.a_max, self.b_max, self.c_max, self.c_min) < 2:
            raise ValueError("all scan bounds must be >= 2")
        if self.c_min > self.c_max:
            raise ValueError(f"empty c range [{self.c_min}, {self.c_max}]")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.height < self.c_max:
            raise ValueError(f"height {self.height} is below c_max={self.c_max}")

    def identity(self) -> dict:
        """The fields that determine the rows (worker count excluded)."""
        d = asdict(self)
        del d["workers"]
        d["height"] = str(self.height)
        return d


@dataclass(frozen=True)
class ScanRow:
    a: int
    b: int
    c: int
    height: int
    solutions: tuple
    exceptional: bool

    @property
    def n(self) -> int:
        return len(self.solutions)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "H": str(self.height),
            "N": self.n,
            "solutions": [list(s) for s in self.solutions],
            "exceptional": self.exceptional,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ScanRow":
        return cls(
            d["a"], d["b"], d["c"], int(d["H"]),
            tuple(ExpSolution(*s) for s in d["solutions"]), bool(d["exceptional"]),
        )


@dataclass(frozen=True)
class ScanReport:
    rows: tuple
    config: ScanConfig
    checksum: str


def rows_checksum(rows: Sequence[ScanRow], config: ScanConfig) -> str:
    canon = json.dumps(
        {"config": config.identity(), "rows": [r.to_json() for r in rows]},
        sort_keys=True, separators=(",", ":"),
    )
    return hashlib.sha256(canon.encode()).hexdigest()


def _skip(n: int, exclude_pp: bool) -> bool:
    return exclude_pp and is_perfect_power(n) is not None


def _scan_c(args) -> List[ScanRow]:
    c, cfg = args
    if _skip(c, cfg.exclude_perfect_powers) or cfg.height < c:
        return []
    rows = []
    for a in range(2, cfg.a_max + 1):
        if gcd(a, c) != 1 or _skip(a, cfg.exclude_perfect_powers):
            continue
        for b in range(2, cfg.b_max + 1):
            if gcd(a, b) != 1 or gcd(b, c) != 1 or _skip(b, cfg.exclude_perfect_powers):
                continue
            sols = enumerate_solutions(Triple(a, b, c), cfg.height)
            if len(sols) >= 2:
                rows.append(ScanRow(a, b, c, cfg.height, tuple(sols), in_exceptional_set(a, b, c)))
    return rows


def _finish(rows: Iterable[ScanRow], cfg: ScanConfig) -> ScanReport:
    rows = tuple(sorted(rows, key=lambda r: (r.a, r.b, r.c)))
    return ScanReport(rows, cfg, rows_checksum(rows, cfg))


def scan_range(cfg: ScanConfig) -> ScanReport:
    """Rows for every pairwise-coprime triple in the box with N_H >= 2."""
    jobs = [(c, cfg) for c in range(cfg.c_min, cfg.c_max + 1)]
    if cfg.workers == 1:
        parts = map(_scan_c, jobs)
        rows = [r for part in parts for r in part]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = [r for part in pool.map(_scan_c, jobs) for r in part]
    return _finish(rows, cfg)


def split_config(cfg: ScanConfig, parts: int) -> List[ScanConfig]:
    """Cut the c range into ``parts`` contiguous shards."""
    lo, hi = cfg.c_min, cfg.c_max
    n = hi - lo + 1
    parts = max(1, min(parts, n))
    out, start = [], lo
    for i in range(parts):
        size = n // parts + (i < n % parts)
        out.append(replace(cfg, c_min=start, c_max=start + size - 1))
        start += size
    return out


def _settings(cfg: ScanConfig) -> dict:
    d = cfg.identity()
    del d["c_min"], d["c_max"]
    return d


def merge_reports(parts: Sequence[ScanReport]) -> ScanReport:
    """Union of shards over disjoint, contiguous c ranges; checksum recomputed."""
    if not parts:
        raise ValueError("nothing to merge")
    base = _settings(parts[0].config)
    if any(_settings(p.config) != base for p in parts):
        raise ValueError("reports were produced with different settings")
    spans = sorted((p.config.c_min, p.config.c_max) for p in parts)
    for (lo1, hi1), (lo2, hi2) in zip(spans, spans[1:]):
        if lo2 <= hi1:
            raise ValueError(f"overlapping c ranges [{lo1},{hi1}] and [{lo2},{hi2}]")
        if lo2 != hi1 + 1:
            raise ValueError(f"gap between c ranges [{lo1},{hi1}] and [{lo2},{hi2}]")
    cfg = replace(parts[0].config, c_min=spans[0][0], c_max=spans[-1][1])
    return _finish((r for p in parts for r in p.rows), cfg)


def odd_c_violations(report: ScanReport, bound: int = 2) -> List[ScanRow]:
    """Rows with odd c and more than ``bound`` solutions (expected: none)."""
    return [r for r in report.rows if r.c % 2 and r.n > bound]


def rows_with_count(report: ScanReport, n: int, *, even_c: Optional[bool] = None) -> List[ScanRow]:
    return [
        r for r in report.rows
        if r.n == n and (even_c is None or (r.c % 2 == 0) == even_c)
    ]


# -- persistence --------------------------------------------------------------

TSV_COLUMNS = ("a", "b", "c", "H", "N", "solutions", "exceptional")


def write_jsonl(rows: Iterable[ScanRow], fh: TextIO) -> None:
    for r in rows:
        fh.write(json.dumps(r.to_json(), separators=(",", ":")) + "\n")


def read_jsonl(fh: TextIO) -> List[ScanRow]:
    return [ScanRow.from_json(json.loads(line)) for line in fh if line.strip()]


def write_tsv(rows: Iterable[ScanRow], fh: TextIO) -> None:
    w = csv.writer(fh, delimiter="\t", lineterminator="\n")
    w.writerow(TSV_COLUMNS)
    for r in rows:
        d = r.to_json()
        d["solutions"] = json.dumps(d["solutions"], separators=(",", ":"))
        d["exceptional"] = str(d["exceptional"]).lower()
        w.writerow([d[k] for k in TSV_COLUMNS])


def metadata(report: ScanReport) -> dict:
    return {
        "config": {**asdict(report.config), "height": str(report.config.height)},
        "checksum": report.checksum,
        "rows": len(report.rows),
    }


def save_report(report: ScanReport, path: str) -> str:
    """Write ``path`` (JSONL rows) and ``path + '.meta.json'``; return the sidecar path."""
    with open(path, "w") as fh:
        write_jsonl(report.rows, fh)
    meta_path = path + ".meta.json"
    with open(meta_path, "w") as fh:
        json.dump(metadata(report), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return meta_path


def load_report(path: str) -> ScanReport:
    with open(path + ".meta.json") as fh:
        meta = json.load(fh)
    conf = dict(meta["config"])
    conf["height"] = int(conf["height"])
    cfg = ScanConfig(**conf)
    with open(path) as fh:
        rows = read_jsonl(fh)
    report = _finish(rows, cfg)
    if report.checksum != meta["checksum"]:
        raise ValueError(f"checksum mismatch for {path}")
    return report


def to_tsv_string(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    write_tsv(rows, buf)
    return buf.getvalue()
