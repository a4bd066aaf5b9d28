"""Exhaustive, resumable scans over weight vectors, and the example table.

A scan walks every canonical weight vector inside a budget in a fixed
order, computes the minimal log discrepancy of each, and keeps a running
report.  Work is cut into blocks of ``checkpoint_every`` vectors; a block may
be spread across worker processes, but only this process merges results and
writes the checkpoint, so the report never depends on the worker count.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import fibfan, wblowup
from .errors import CorruptCheckpoint, InvalidBound, ToricError
from .lattice import BLOWUP, FIBRATION, positive_epsilon

CHECKPOINT_VERSION = 1
DEFAULT_CHECKPOINT_EVERY = 10_000


def frac_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def frac_from_json(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


@dataclass(frozen=True)
class ScanParams:
    mode: str
    d: int
    eps: Fraction
    bound: int
    coeff_bound: Optional[int] = None
    keep_all: bool = False

    def __post_init__(self):
        if self.mode not in (BLOWUP, FIBRATION):
            raise ToricError(f"unknown scan mode {self.mode!r}")
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 2:
            raise InvalidBound(f"dimension must be an integer ≥ 2, got {self.d!r}")
        object.__setattr__(self, "eps", positive_epsilon(self.eps))
        if self.bound < 1:
            raise InvalidBound(f"bound must be ≥ 1, got {self.bound}")
        if self.mode == FIBRATION:
            if self.coeff_bound is None or self.coeff_bound < 1:
                raise InvalidBound(f"coefficient bound must be ≥ 1, got {self.coeff_bound}")
        elif self.coeff_bound is not None:
            raise InvalidBound("blowup scans take no coefficient bound")

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "d": self.d,
            "eps": frac_json(self.eps),
            "bound": self.bound,
            "coeff_bound": self.coeff_bound,
            "keep_all": self.keep_all,
        }

    @classmethod
    def from_json(cls, obj) -> "ScanParams":
        return cls(obj["mode"], obj["d"], frac_from_json(obj["eps"]), obj["bound"],
                   obj["coeff_bound"], obj["keep_all"])


@dataclass(frozen=True)
class ScanRecord:
    weights: Tuple[int, ...]
    mld_value: Fraction
    qualifying: bool
    key_statistic: int

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "mld": frac_json(self.mld_value),
            "qualifying": self.qualifying,
            "key": self.key_statistic,
        }

    @classmethod
    def from_json(cls, obj) -> "ScanRecord":
        return cls(tuple(obj["weights"]), frac_from_json(obj["mld"]), obj["qualifying"], obj["key"])


@dataclass
class ScanReport:
    """Running or final result of a scan.

    ``records`` holds the qualifying vectors (all vectors when the scan keeps
    everything).  ``per_key`` maps the key statistic (minimal weight, or
    ``n_1``) to ``[scanned, qualifying, smallest mld seen]``.
    """

    params: ScanParams
    scanned: int = 0
    records: List[ScanRecord] = field(default_factory=list)
    per_key: Dict[int, list] = field(default_factory=dict)
    complete: bool = False

    @property
    def qualifying(self) -> List[ScanRecord]:
        return [r for r in self.records if r.qualifying]

    @property
    def frontier(self) -> Optional[int]:
        """Largest key statistic among qualifying vectors within the budget."""
        keys = [k for k, (_, q, _) in self.per_key.items() if q]
        return max(keys) if keys else None

    def add(self, record: ScanRecord) -> None:
        self.scanned += 1
        stats = self.per_key.setdefault(record.key_statistic, [0, 0, record.mld_value])
        stats[0] += 1
        stats[2] = min(stats[2], record.mld_value)
        if record.qualifying:
            stats[1] += 1
        if record.qualifying or self.params.keep_all:
            self.records.append(record)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "complete": self.complete,
            "scanned": self.scanned,
            "frontier": self.frontier,
            "per_key": [
                {"key": k, "scanned": s, "qualifying": q, "min_mld": frac_json(lo)}
                for k, (s, q, lo) in sorted(self.per_key.items())
            ],
            "records": [r.to_json() for r in self.records],
        }

    @classmethod
    def from_json(cls, obj) -> "ScanReport":
        report = cls(ScanParams.from_json(obj["params"]))
        report.complete = obj["complete"]
        report.scanned = obj["scanned"]
        report.records = [ScanRecord.from_json(r) for r in obj["records"]]
        report.per_key = {
            row["key"]: [row["scanned"], row["qualifying"], frac_from_json(row["min_mld"])]
            for row in obj["per_key"]
        }
        return report

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"

    def to_csv(self) -> str:
        lines = ["d,weights,mld_num,mld_den,qualifying,key_statistic"]
        for r in self.records:
            lines.append(",".join([
                str(self.params.d),
                ";".join(str(x) for x in r.weights),
                str(r.mld_value.numerator),
                str(r.mld_value.denominator),
                "true" if r.qualifying else "false",
                str(r.key_statistic),
            ]))
        return "\n".join(lines) + "\n"


def canonical_vectors(params: ScanParams) -> Iterator[Tuple[int, ...]]:
    """Canonical weights in scan order.

    Blowup: ``1 <= n_1 <= ... <= n_d <= bound``.  Fibration:
    ``1 <= n_1 <= bound`` and ``n_2 <= ... <= n_d`` in ``[-coeff_bound, coeff_bound]``.
    Only primitive vectors are produced.
    """
    if params.mode == BLOWUP:
        for n in itertools.combinations_with_replacement(range(1, params.bound + 1), params.d):
            if math.gcd(*n) == 1:
                yield n
    else:
        cb = params.coeff_bound
        for n1 in range(1, params.bound + 1):
            for tail in itertools.combinations_with_replacement(range(-cb, cb + 1), params.d - 1):
                if math.gcd(n1, *tail) == 1:
                    yield (n1,) + tail


def _evaluate_chunk(args) -> List[Tuple[int, int]]:
    mode, chunk = args
    engine = wblowup.mld if mode == BLOWUP else fibfan.mld_prime
    out = []
    for n in chunk:
        value = engine(n).value
        out.append((value.numerator, value.denominator))
    return out


def _split(block, parts):
    size = -(-len(block) // parts)
    return [block[i:i + size] for i in range(0, len(block), size)]


def _payload_hash(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def write_checkpoint(path, report: ScanReport, next_index: int) -> None:
    payload = {
        "version": CHECKPOINT_VERSION,
        "next_index": next_index,
        "report": report.to_json(),
    }
    doc = {"payload": payload, "sha256": _payload_hash(payload)}
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def read_checkpoint(path) -> Tuple[ScanReport, int]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        payload = doc["payload"]
        digest = doc["sha256"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CorruptCheckpoint(f"cannot read checkpoint {path}: {exc}") from exc
    if _payload_hash(payload) != digest:
        raise CorruptCheckpoint(f"checkpoint {path} fails its content hash")
    try:
        if payload["version"] != CHECKPOINT_VERSION:
            raise CorruptCheckpoint(f"unsupported checkpoint version {payload['version']}")
        report = ScanReport.from_json(payload["report"])
        next_index = int(payload["next_index"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptCheckpoint(f"malformed checkpoint {path}: {exc}") from exc
    if next_index != report.scanned:
        raise CorruptCheckpoint("checkpoint index disagrees with its scanned count")
    return report, next_index


def run_scan(params: ScanParams, *, checkpoint=None, resume: bool = False,
             checkpoint_every: int = DEFAULT_CHECKPOINT_EVERY, workers: int = 1,
             max_records: Optional[int] = None) -> ScanReport:
    """Run (or continue) a scan.

    With ``resume`` the checkpoint file is read first and must describe the
    same parameters.  ``max_records`` stops at the first block boundary at or
    past that many scanned vectors, leaving an incomplete report and a
    resumable checkpoint behind.
    """
    if checkpoint_every < 1:
        raise InvalidBound("checkpoint cadence must be ≥ 1")
    if workers < 1:
        raise InvalidBound("worker count must be ≥ 1")
    start = 0
    report = ScanReport(params)
    if resume:
        if checkpoint is None:
            raise ToricError("resume needs a checkpoint path")
        report, start = read_checkpoint(checkpoint)
        if report.params != params:
            raise CorruptCheckpoint("checkpoint was written by a scan with different parameters")
        if report.complete:
            return report

    vectors = itertools.islice(canonical_vectors(params), start, None)
    key_of = min if params.mode == BLOWUP else (lambda n: n[0])
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            if report.complete or (max_records is not None and report.scanned >= max_records):
                break
            block = list(itertools.islice(vectors, checkpoint_every))
            if not block:
                report.complete = True
                break
            if pool is None:
                values = _evaluate_chunk((params.mode, block))
            else:
                chunks = _split(block, workers)
                values = [v for part in pool.map(_evaluate_chunk, [(params.mode, c) for c in chunks])
                          for v in part]
            for n, (num, den) in zip(block, values):
                value = Fraction(num, den)
                report.add(ScanRecord(n, value, value >= params.eps, key_of(n)))
            if len(block) < checkpoint_every:
                report.complete = True
            if checkpoint is not None:
                write_checkpoint(checkpoint, report, report.scanned)
    finally:
        if pool is not None:
            pool.shutdown()
    if checkpoint is not None:
        write_checkpoint(checkpoint, report, report.scanned)
    return report


def scan_blowup(d: int, eps, weight_bound: int, **kwargs) -> ScanReport:
    keep_all = kwargs.pop("keep_all", False)
    return run_scan(ScanParams(BLOWUP, d, eps, weight_bound, None, keep_all), **kwargs)


def scan_fibration(d: int, eps, n1_bound: int, coeff_bound: int, **kwargs) -> ScanReport:
    keep_all = kwargs.pop("keep_all", False)
    return run_scan(ScanParams(FIBRATION, d, eps, n1_bound, coeff_bound, keep_all), **kwargs)


# --- example table -------------------------------------------------------

@dataclass(frozen=True)
class ExampleRow:
    label: str
    compute: Callable[[], object]
    expected: object


@dataclass(frozen=True)
class ExampleResult:
    label: str
    got: object
    expected: object

    @property
    def ok(self) -> bool:
        return self.got == self.expected


def example_rows() -> List[ExampleRow]:
    F = Fraction
    rows = []

    def mld_row(label, n, expected):
        rows.append(ExampleRow(f"{label}: mld{n}", lambda: wblowup.mld(n).value, F(expected)))

    def mldp_row(label, n, expected):
        rows.append(ExampleRow(f"{label}: mld'{n}", lambda: fibfan.mld_prime(n).value, F(expected)))

    mld_row("(1,1)", (1, 1), 1)
    mld_row("(1,2)", (1, 2), 1)
    for k in range(1, 11):
        mld_row("(1,n)", (1, k), 1)
    mld_row("(2,3)", (2, 3), F(2, 3))
    for k in range(2, 11):
        mld_row("(n,n-1)", (k, k - 1), F(2, k))
    for k in [2] + list(range(4, 11)):
        mld_row("(n,2n-1)", (k, 2 * k - 1), F(2, k))
    rows.append(ExampleRow("alpha((1,1,2); (10,11,19))",
                           lambda: wblowup.alpha((1, 1, 2), (10, 11, 19)), F(5, 11)))
    for n2 in range(1, 11):
        for n3 in range(n2, 11):
            mld_row("(1,n2,n3)", (1, n2, n3), 1)
    mld_row("dim 4", (20, 57, 133, 210), 1)
    mld_row("dim 4", (32, 41, 71, 102), 1)

    mldp_row("(1,1)", (1, 1), 1)
    mldp_row("(1,2)", (1, 2), 1)
    for k in range(1, 11):
        mldp_row("(1,n)", (1, k), 1)
    mldp_row("(2,3)", (2, 3), 1)
    for k in range(2, 11):
        mldp_row("(n,1)", (k, 1), F(2, k))

    for k in range(1, 6):
        w = (k, k + 1, k * (k + 1))
        rows.append(ExampleRow(f"pullback multiplicities {w}",
                               lambda w=w: tuple(wblowup.pullback_mult(w, i) for i in (1, 2, 3)), w))
        rows.append(ExampleRow(f"H3~ - (n+1) H1~ on {w}",
                               lambda w=w, k=k: wblowup.relative_class(0, (-(k + 1), 0, 1), w), 0))
        rows.append(ExampleRow(f"H3~ - n H2~ on {w}",
                               lambda w=w, k=k: wblowup.relative_class(0, (0, -k, 1), w), 0))
    return rows


def verify_examples(rows: Optional[List[ExampleRow]] = None) -> List[ExampleResult]:
    rows = example_rows() if rows is None else rows
    results = []
    for row in rows:
        try:
            got = row.compute()
        except Exception as exc:  # a crashing row is a failing row
            got = f"error: {exc}"
        results.append(ExampleResult(row.label, got, row.expected))
    return results
