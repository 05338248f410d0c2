"""OEIS b-file parsing and integer-sequence cross-checks.

A b-file is the standard two-column text format: one ``index value`` pair
per line, ``#`` comment lines ignored, indices strictly increasing.

Every supported sequence mapping carries an explicit index transform,
because offsets differ between sequences (and between a polynomial's
subscript and the b-file index); a silent off-by-one is the classic failure
mode here.  The registry:

  pg3            b-file index n >= 1  ->  G_n(3)            (A329156)
  pg_eval --at x b-file index n >= 1  ->  G_n(x)            (x=3: A329156)
  f_eval --at x  b-file index k >= 0  ->  F_k(x)            (x=3: A002878,
                 the Lucas bisection L(2k+1); x=4: A001834; x=5: A030221)
  sigma          b-file index n >= 1  ->  G_n(2) = sigma(n) (A000203)
  odd_div_count  b-file index n >= 1  ->  #odd divisors     (A001227)

``sigma`` deliberately routes through G_n(2) rather than summing divisors:
the point of the check is to validate the pipeline against independent
reference data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .chebfam import fpoly_value
from .divisors import odd_divisors
from .hilbert import pg_eval_int


class BFileError(ValueError):
    """Malformed b-file; message carries the offending line number."""


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) entries with strictly increasing index."""

    sequence_id: str
    entries: tuple[tuple[int, int], ...]


def parse_bfile(path: str | Path, sequence_id: str = "") -> BFile:
    """Read a b-file; raises ``BFileError`` with a line number on bad input."""
    path = Path(path)
    entries: list[tuple[int, int]] = []
    prev: int | None = None
    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise BFileError(
                    f"{path}:{lineno}: expected 'index value', got {line!r}")
            try:
                idx, val = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileError(
                    f"{path}:{lineno}: non-integer field in {line!r}") from None
            if prev is not None and idx <= prev:
                raise BFileError(
                    f"{path}:{lineno}: index {idx} not increasing (after {prev})")
            prev = idx
            entries.append((idx, val))
    return BFile(sequence_id or path.stem, tuple(entries))


@dataclass(frozen=True)
class SequenceSpec:
    """A checkable sequence: how a b-file index maps to a computed value."""

    key: str
    description: str
    needs_eval_point: bool
    min_index: int
    make: Callable[[int | None], Callable[[int], int]]
    default_oeis_id: str = ""


SEQUENCES: dict[str, SequenceSpec] = {
    "pg3": SequenceSpec(
        "pg3", "ideal-count polynomial values G_n(3)", False, 1,
        lambda at: lambda n: pg_eval_int(n, 3), "A329156"),
    "pg_eval": SequenceSpec(
        "pg_eval", "ideal-count polynomial values G_n(x)", True, 1,
        lambda at: lambda n: pg_eval_int(n, at)),
    "f_eval": SequenceSpec(
        "f_eval", "running-sum family values F_k(x)", True, 0,
        lambda at: lambda k: fpoly_value(k, at)),
    "sigma": SequenceSpec(
        "sigma", "sum of divisors via G_n(2)", False, 1,
        lambda at: lambda n: pg_eval_int(n, 2), "A000203"),
    "odd_div_count": SequenceSpec(
        "odd_div_count", "number of odd divisors", False, 1,
        lambda at: lambda n: len(odd_divisors(n)), "A001227"),
}


@dataclass
class SequenceCheckReport:
    """Outcome of comparing computed values against a b-file overlap."""

    sequence: str
    bfile_id: str
    compared: int
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    # (index, value from b-file, computed value)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence,
            "bfile": self.bfile_id,
            "compared": self.compared,
            "mismatches": [
                {"index": i, "expected": str(e), "computed": str(c)}
                for i, e, c in self.mismatches
            ],
        }


def check_sequence(key: str, bfile: BFile, at: int | None = None,
                   max_index: int | None = None) -> SequenceCheckReport:
    """Compare the named sequence against a b-file over the overlapping
    index range (optionally capped at ``max_index``)."""
    spec = SEQUENCES[key]
    if spec.needs_eval_point and at is None:
        raise ValueError(f"sequence {key!r} needs an evaluation point")
    value_at = spec.make(at)
    report = SequenceCheckReport(key, bfile.sequence_id, 0)
    for idx, val in bfile.entries:
        if idx < spec.min_index:
            continue
        if max_index is not None and idx > max_index:
            break
        computed = value_at(idx)
        report.compared += 1
        if computed != val:
            report.mismatches.append((idx, val, computed))
    return report


def emit_bfile(key: str, path: str | Path, at: int | None = None,
               max_index: int = 100) -> int:
    """Write computed values in b-file format (candidate reference data for
    sequences without one); returns the number of lines written."""
    spec = SEQUENCES[key]
    if spec.needs_eval_point and at is None:
        raise ValueError(f"sequence {key!r} needs an evaluation point")
    value_at = spec.make(at)
    lines = [f"{i} {value_at(i)}" for i in range(spec.min_index, max_index + 1)]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return len(lines)
