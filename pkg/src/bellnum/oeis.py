"""OEIS b-file parsing and the sequence cross-check registry.

b-file format: optional '#' comment lines, then one ``index value``
pair per line (whitespace separated), indices strictly increasing.

The registry maps each supported sequence to a generator producing its
values in linear (row-major for triangles) order plus the OEIS index of
the first generated term, so a downloaded b-file can be matched
directly.  Offsets are configuration: they record how the OEIS indexing
lines up with this package's row conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .exact import (
    arima_rows,
    bell_numbers,
    beta_numbers,
    b_table_rows,
    matsunaga_rows,
    poisson_moments,
    stirling_signed_rows,
)
from .distributions import a033306_pmf, variant_triangle

__all__ = [
    "BFileEntry",
    "BFileParseError",
    "SequenceSpec",
    "REGISTRY",
    "parse_bfile",
    "check_bfile",
]


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


class BFileParseError(ValueError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def parse_bfile(text: str) -> list[BFileEntry]:
    """Parse b-file text into entries, validating the format strictly."""
    entries: list[BFileEntry] = []
    last_index = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'index value', got {raw!r}", lineno)
        try:
            idx = int(parts[0])
            val = int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", lineno) from None
        if last_index is not None and idx <= last_index:
            raise BFileParseError(f"index {idx} not increasing", lineno)
        last_index = idx
        entries.append(BFileEntry(index=idx, value=val))
    return entries


@dataclass(frozen=True)
class SequenceSpec:
    """One checkable sequence: linear generator plus its OEIS offset."""

    oeis_id: str
    first_index: int
    values: Callable[[int], list[int]]  # count -> first `count` terms
    aliases: tuple[str, ...] = ()


def _row_major(row_of: Callable[[int], Sequence[int]], start_n: int) -> Callable[[int], list[int]]:
    """Linear generator that concatenates rows start_n, start_n+1, ..."""

    def gen(count: int) -> list[int]:
        out: list[int] = []
        n = start_n - 1
        while len(out) < count:
            n += 1
            out.extend(row_of(n))
        return out[:count]

    return gen


_stirling_linear = _row_major(lambda n: stirling_signed_rows(n).row(n), 1)
_matsunaga_linear = _row_major(lambda n: matsunaga_rows(n).row(n), 1)
_b_table_linear = _row_major(lambda n: b_table_rows(n).row(n), 1)
_arima_no_first_column_linear = _row_major(lambda n: arima_rows(n).row(n)[1:], 1)


def _arima_row(n: int) -> Sequence[int]:
    return (1,) if n == 0 else arima_rows(n).row(n)


_arima_linear = _row_major(_arima_row, 0)
_arima_reversed_linear = _row_major(lambda n: tuple(reversed(_arima_row(n))), 0)
_a033306_linear = _row_major(
    lambda n: (1,) if n == 0 else ((1, 1) if n == 1 else a033306_pmf(n).weights), 0
)


def _variant_linear(which: str, start_n: int) -> Callable[[int], list[int]]:
    return _row_major(lambda n: variant_triangle(n, which).weights, start_n)


def _prefixed(first_rows: list[list[int]], rest: Callable[[int], list[int]]) -> Callable[[int], list[int]]:
    head = [v for row in first_rows for v in row]

    def gen(count: int) -> list[int]:
        if count <= len(head):
            return head[:count]
        return head + rest(count - len(head))

    return gen


REGISTRY: dict[str, SequenceSpec] = {}


def _register(spec: SequenceSpec) -> None:
    REGISTRY[spec.oeis_id.lower()] = spec
    for a in spec.aliases:
        REGISTRY[a.lower()] = spec


_register(SequenceSpec("A000110", 0, lambda c: bell_numbers(c - 1), aliases=("bell",)))
_register(SequenceSpec("A000296", 0, lambda c: beta_numbers(c - 1), aliases=("beta",)))
_register(SequenceSpec("A001861", 0, lambda c: poisson_moments(2, c - 1), aliases=("tilde-bell",)))
_register(SequenceSpec("A008275", 1, _stirling_linear, aliases=("stirling",)))
_register(SequenceSpec("A056857", 1, _arima_linear, aliases=("arima",)))
_register(SequenceSpec("A056860", 1, _arima_reversed_linear, aliases=("arima-reversed",)))
_register(SequenceSpec("A175757", 1, _arima_no_first_column_linear))
_register(SequenceSpec("matsunaga", 1, _matsunaga_linear))
_register(SequenceSpec("b-table", 1, _b_table_linear))
_register(SequenceSpec("A033306", 0, _a033306_linear))
_register(SequenceSpec("A056856", 1, _prefixed([[1]], _variant_linear("A056856", 2))))
_register(SequenceSpec("A220883", 1, _prefixed([[1]], _variant_linear("A220883", 2))))
_register(SequenceSpec("A260887", 1, _prefixed([[1]], _variant_linear("A260887", 2))))
_register(SequenceSpec("A220884", 1, _prefixed([[1]], _variant_linear("A220884", 2))))
_register(
    SequenceSpec("A124323", 0,
                 _prefixed([[1], [0, 1]], _variant_linear("A124323", 2)))
)
_register(
    SequenceSpec("A086659", 1,
                 _prefixed([[0], [1, 0], [1, 3, 0]],
                           _variant_linear("A086659", 4)))
)
_register(SequenceSpec("A078937", 0, _prefixed([[1], [2, 1]], _variant_linear("A078937", 2))))
_register(SequenceSpec("A078938", 0, _prefixed([[1], [3, 1]], _variant_linear("A078938", 2))))
_register(SequenceSpec("A078939", 0, _prefixed([[1], [4, 1]], _variant_linear("A078939", 2))))


@dataclass(frozen=True)
class CheckResult:
    sequence: str
    compared: int
    first_mismatch: BFileEntry | None
    expected: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and self.compared > 0


def check_bfile(sequence: str, text: str, max_terms: int = 600) -> CheckResult:
    """Compare a b-file against the registry sequence; stop at the first
    mismatch or after max_terms comparisons."""
    key = sequence.lower()
    if key not in REGISTRY:
        raise KeyError(f"unknown sequence {sequence!r}")
    spec = REGISTRY[key]
    entries = parse_bfile(text)
    usable = [e for e in entries if e.index >= spec.first_index][:max_terms]
    if not usable:
        return CheckResult(spec.oeis_id, 0, None, None)
    need = usable[-1].index - spec.first_index + 1
    values = spec.values(need)
    compared = 0
    for e in usable:
        pos = e.index - spec.first_index
        if pos >= len(values):
            break
        if values[pos] != e.value:
            return CheckResult(spec.oeis_id, compared, e, values[pos])
        compared += 1
    return CheckResult(spec.oeis_id, compared, None, None)
