"""Line-oriented records for verification sweeps.

Every sweep produces one record per checked identity: a check name, the
parameters, a status and the two compared values.  Integers are printed in
plain decimal with no grouping so records are diffable and byte-stable
across runs.

Statuses: "pass" and "fail" are hard outcomes; "note" marks informational
findings (open questions, known discrepancies) that never fail a run.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

Params = tuple[tuple[str, object], ...]

PASS = "pass"
FAIL = "fail"
NOTE = "note"


@dataclass(frozen=True)
class CheckRecord:
    check: str
    params: Params
    status: str
    lhs: str
    rhs: str

    def __post_init__(self):
        if self.status not in (PASS, FAIL, NOTE):
            raise ValueError(f"unknown status {self.status!r}")

    def structured(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params) or "-"
        return "\t".join(
            (
                f"check={self.check}",
                f"params={params}",
                f"status={self.status}",
                f"lhs={self.lhs or '-'}",
                f"rhs={self.rhs or '-'}",
            )
        )

    def plain(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params)
        head = f"{self.check} {params}".strip()
        if self.status == NOTE:
            return f"{head}: note: {self.lhs} | {self.rhs}"
        body = f"{self.lhs} == {self.rhs}" if self.rhs else self.lhs
        return f"{head}: {self.status} ({body})"


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def extend(self, other: "Report") -> "Report":
        self.records.extend(other.records)
        return self

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def notes(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == NOTE]

    def lines(self, structured: bool = True) -> Iterator[str]:
        for r in self.records:
            yield r.structured() if structured else r.plain()

    def __iter__(self) -> Iterator[CheckRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)


def int_list(values: Iterable[int]) -> str:
    """Render a coefficient list as comma-separated plain decimals."""
    return ",".join(str(v) for v in values)
