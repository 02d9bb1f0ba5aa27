"""Exact arbitrary-precision side: triangles, sequences and identities.

Everything in this module is computed with Python's native big integers
(or `fractions.Fraction` where values are genuinely rational), so all
equalities asserted elsewhere are exact, never approximate.  The module
covers both eighteenth-century Bell-number procedures:

* the Stirling-number pipeline, which tabulates signed Stirling numbers
  of the first kind, the singleton-free partition counts ``beta``, the
  Matsunaga triangle ``M[n,k]``, and finally evaluates
  ``B_n = 1 + (1/n!) * sum_k M[n,k] n^k`` by Horner's rule;
* the binomial recurrence ``B_n = sum_k C(n-1,k) B_{n-1-k}``, carried
  out through the row table ``b[n,k] = C(n-1,k-1) B_{n-k}`` that trades
  space for time.

The Horner evaluation is instrumented (every partial accumulator and its
bit length is recorded) because the intermediate values reach the scale
of ``B_n * n!`` and cancel violently; the instrumentation makes that
observable data rather than folklore.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

__all__ = [
    "TriangleTable",
    "HornerTrace",
    "PartitionShape",
    "stirling_signed_rows",
    "stirling_unsigned_rows",
    "b_table_rows",
    "bell_numbers",
    "beta_numbers",
    "beta_from_bells",
    "matsunaga_rows",
    "matsunaga_via_sum",
    "bell_matsunaga",
    "weighted_matsunaga_rows",
    "abs_matsunaga_row",
    "generalized_binomial",
    "pnv_eval",
    "pnv_closed",
    "pn_at_n",
    "integer_partitions",
    "bell_polynomial_coefficient",
    "bell_via_shapes",
    "beta_via_shapes",
    "poisson_moments",
    "arima_rows",
    "solve_bell_inverse",
]


@dataclass(frozen=True)
class TriangleTable:
    """Dense lower-triangular table of integers.

    Row ``n`` (``n_min <= n``) holds entries for ``k = k_min .. n``.
    Access outside the stored triangle raises ``IndexError``: boundary
    zeros are the caller's business, silent zeros hide index bugs.
    """

    name: str
    n_min: int
    k_min: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for i, r in enumerate(self.rows):
            n = self.n_min + i
            if len(r) != n - self.k_min + 1:
                raise ValueError(
                    f"{self.name}: row n={n} has {len(r)} entries, "
                    f"expected {n - self.k_min + 1}"
                )

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        if not self.n_min <= n <= self.n_max:
            raise IndexError(f"{self.name}: row n={n} outside [{self.n_min}, {self.n_max}]")
        return self.rows[n - self.n_min]

    def entry(self, n: int, k: int) -> int:
        r = self.row(n)
        if not self.k_min <= k <= n:
            raise IndexError(f"{self.name}: entry (n={n}, k={k}) outside triangle")
        return r[k - self.k_min]

    def items(self) -> Iterator[tuple[int, int, int]]:
        """Yield (n, k, value) in row-major order."""
        for i, r in enumerate(self.rows):
            n = self.n_min + i
            for j, v in enumerate(r):
                yield n, self.k_min + j, v


@dataclass(frozen=True)
class HornerTrace:
    """Record of one Horner evaluation of ``sum_k M[n,k] n^k``.

    The accumulator is seeded with ``M[n,n]``; ``partial_values`` holds
    its value after each of the ``n - 1`` combining steps, so the last
    one equals ``inner_sum / n``.  ``max_bits`` is the largest bit length seen over
    the row entries, every partial and the inner sum itself: it measures
    how large the intermediate numbers get before the division by ``n!``
    collapses them to ``B_n - 1``.
    """

    n: int
    partial_values: tuple[int, ...]
    inner_sum: int
    max_bits: int
    result: int


@dataclass(frozen=True)
class PartitionShape:
    """Multiset of block sizes of a set partition, e.g. one singleton
    and two pairs of a 5-set is ``((1, 1), (2, 2))``.

    Stored as (size, count) pairs with strictly increasing sizes; all
    sizes and counts are positive.
    """

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = 0
        for size, count in self.counts:
            if size <= last or count < 1:
                raise ValueError(f"invalid shape {self.counts!r}")
            last = size

    @classmethod
    def from_mapping(cls, multiplicities: Mapping[int, int]) -> "PartitionShape":
        return cls(tuple(sorted((s, c) for s, c in multiplicities.items() if c)))

    @classmethod
    def from_block_sizes(cls, sizes: Sequence[int]) -> "PartitionShape":
        m: dict[int, int] = {}
        for s in sizes:
            m[s] = m.get(s, 0) + 1
        return cls.from_mapping(m)

    @property
    def n(self) -> int:
        return sum(s * c for s, c in self.counts)

    @property
    def singletons(self) -> int:
        for s, c in self.counts:
            if s == 1:
                return c
        return 0


def stirling_signed_rows(N: int) -> TriangleTable:
    """Signed Stirling numbers of the first kind, rows 1..N.

    Recurrence ``s[n,k] = s[n-1,k-1] - (n-1) s[n-1,k]`` with
    ``s[1,1] = 1``; row n gives the coefficients of
    ``z (z-1) ... (z-n+1)``.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(2, N + 1):
        prev = rows[-1]
        row = []
        for k in range(1, n + 1):
            left = prev[k - 2] if k >= 2 else 0
            right = prev[k - 1] if k <= n - 1 else 0
            row.append(left - (n - 1) * right)
        rows.append(tuple(row))
    return TriangleTable("stirling1", 1, 1, tuple(rows))


def stirling_unsigned_rows(N: int) -> TriangleTable:
    """Unsigned Stirling numbers |s[n,k]| (permutations with k cycles)."""
    signed = stirling_signed_rows(N)
    return TriangleTable(
        "stirling1_unsigned", 1, 1, tuple(tuple(abs(v) for v in r) for r in signed.rows)
    )


def b_table_rows(N: int) -> TriangleTable:
    """The row table ``b[n,k] = C(n-1,k-1) B_{n-k}`` for rows 1..N.

    Built purely by the space-for-time trick: the first column restarts
    each row as the previous row's sum, and every other entry is
    ``(n-1)/(k-1)`` times its upper-left neighbour.  The division is
    performed as multiply-then-exact-divide with a divisibility check,
    so integrality is a verified invariant, not an assumption.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(2, N + 1):
        prev = rows[-1]
        row = [sum(prev)]
        for k in range(2, n + 1):
            num = (n - 1) * prev[k - 2]
            q, rem = divmod(num, k - 1)
            if rem:
                raise ArithmeticError(f"b-table division not exact at (n={n}, k={k})")
            row.append(q)
        rows.append(tuple(row))
    return TriangleTable("b_table", 1, 1, tuple(rows))


def bell_numbers(N: int) -> list[int]:
    """Bell numbers B_0..B_N via the binomial recurrence's row table."""
    if N < 0:
        raise ValueError("N must be >= 0")
    if N == 0:
        return [1]
    table = b_table_rows(N)
    return [1] + [sum(table.row(n)) for n in range(1, N + 1)]


def beta_numbers(N: int) -> list[int]:
    """Singleton-free partition counts beta_0..beta_N.

    ``beta[n+1] = sum_{0<=j<=n-1} C(n,j) beta[j]`` with ``beta0 = 1``,
    ``beta1 = 0``.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    beta = [1, 0]
    for n in range(1, N):
        beta.append(sum(comb(n, j) * beta[j] for j in range(n)))
    return beta[: N + 1]


def beta_from_bells(n: int, bells: Sequence[int]) -> int:
    """beta_n from Bell numbers: alternating sum of B_0..B_{n-1} plus (-1)^n."""
    if len(bells) < n:
        raise ValueError(f"need B_0..B_{n - 1}, got {len(bells)} values")
    s = sum((-1) ** (n - 1 - j) * bells[j] for j in range(n))
    return s + (-1) ** n


def matsunaga_rows(N: int) -> TriangleTable:
    """Matsunaga triangle rows 1..N: ``M[n,k] = n M[n-1,k] + beta_n s[n,k]``
    with M zero for n <= 1.  Every row of the result sums to zero and the
    diagonal entry is beta_n.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    s = stirling_signed_rows(N)
    beta = beta_numbers(N)
    rows: list[tuple[int, ...]] = [(0,)]
    for n in range(2, N + 1):
        prev = rows[-1]
        srow = s.row(n)
        row = [n * (prev[k - 1] if k <= n - 1 else 0) + beta[n] * srow[k - 1]
               for k in range(1, n + 1)]
        rows.append(tuple(row))
    return TriangleTable("matsunaga", 1, 1, tuple(rows))


def matsunaga_via_sum(n: int, k: int) -> int:
    """``M[n,k] = n! sum_{k<=j<=n} (beta_j / j!) s[j,k]``, the unrolled
    form of the triangle recurrence, evaluated independently of it."""
    if not 1 <= k <= n:
        raise IndexError(f"(n={n}, k={k}) outside triangle")
    s = stirling_signed_rows(n)
    beta = beta_numbers(n)
    total = Fraction(0)
    for j in range(k, n + 1):
        total += Fraction(beta[j], factorial(j)) * s.entry(j, k)
    value = total * factorial(n)
    if value.denominator != 1:
        raise ArithmeticError("sum form did not produce an integer")
    return value.numerator


def bell_matsunaga(n: int) -> HornerTrace:
    """Compute B_n by the Stirling-pipeline procedure.

    Evaluates ``sum_k M[n,k] n^k`` by Horner's rule
    ``n (M[n,1] + n (M[n,2] + ... + n (M[n,n-1] + M[n,n] n)))``,
    divides exactly by n! and adds 1.  Degenerate below n = 2 (the
    n = 1 row is all zero), so those inputs are rejected.
    """
    if n < 2:
        raise ValueError("procedure is degenerate for n < 2")
    row = matsunaga_rows(n).row(n)
    bits = max(v.bit_length() for v in row)
    acc = row[n - 1]
    partials = []
    for k in range(n - 1, 0, -1):
        acc = row[k - 1] + n * acc
        partials.append(acc)
        if acc.bit_length() > bits:
            bits = acc.bit_length()
    inner = n * acc
    bits = max(bits, inner.bit_length())
    q, rem = divmod(inner, factorial(n))
    if rem:
        raise ArithmeticError(f"inner sum not divisible by {n}! at n={n}")
    return HornerTrace(
        n=n,
        partial_values=tuple(partials),
        inner_sum=inner,
        max_bits=bits,
        result=q + 1,
    )


def weighted_matsunaga_rows(N: int) -> TriangleTable:
    """Rows 2..N of ``M[n,k] n^k``; row n sums to ``(B_n - 1) n!``."""
    if N < 2:
        raise ValueError("N must be >= 2")
    m = matsunaga_rows(N)
    rows = []
    for n in range(2, N + 1):
        rows.append(tuple(v * n ** k for k, v in zip(range(1, n + 1), m.row(n))))
    return TriangleTable("weighted_matsunaga", 2, 1, tuple(rows))


def abs_matsunaga_row(n: int) -> list[int]:
    """The alternating-sign formula
    ``n! sum_{k<=j<=n} (-1)^(n-j) (beta_j / j!) |s[j,k]|`` for k = 1..n.

    Equals ``|M[n,k]|`` everywhere except (n,k) = (3,1), where it gives
    the negative of the true absolute value; callers check for that one
    exceptional sign themselves.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    s = stirling_unsigned_rows(n)
    beta = beta_numbers(n)
    out = []
    for k in range(1, n + 1):
        total = Fraction(0)
        for j in range(k, n + 1):
            total += Fraction((-1) ** (n - j) * beta[j], factorial(j)) * s.entry(j, k)
        value = total * factorial(n)
        if value.denominator != 1:
            raise ArithmeticError("alternating sum did not produce an integer")
        out.append(value.numerator)
    return out


def generalized_binomial(v: Fraction | int, m: int) -> Fraction:
    """``C(v, m) = v (v-1) ... (v-m+1) / m!`` for rational v, integer m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    v = Fraction(v)
    num = Fraction(1)
    for i in range(m):
        num *= v - i
    return num / factorial(m)


def pnv_eval(n: int, v: Fraction | int) -> Fraction:
    """``P_n(v) = sum_k |M[n,k]| v^k`` by direct summation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v = Fraction(v)
    row = matsunaga_rows(n).row(n)
    return sum((abs(c) * v ** k for k, c in zip(range(1, n + 1), row)), Fraction(0))


def pnv_closed(n: int, v: Fraction | int) -> Fraction:
    """Closed form ``P_n(v) = n! sum_{0<=j<=n-2} C(v+n-j-1, n-j) (-1)^j beta_{n-j}``.

    Only valid from n = 4 on (the low rows carry the (3,1) sign
    exception), so smaller n is refused rather than silently wrong.
    """
    if n < 4:
        raise ValueError("closed form requires n >= 4")
    v = Fraction(v)
    beta = beta_numbers(n)
    total = Fraction(0)
    for j in range(n - 1):
        total += generalized_binomial(v + n - j - 1, n - j) * ((-1) ** j * beta[n - j])
    return total * factorial(n)


def pn_at_n(N: int) -> tuple[list[int], list[int]]:
    """``P_n(n)`` and ``P_n(n)/n!`` for n = 1..N (index 0 unused, set to 0).

    n = 1..3 go through direct summation (the closed form starts at 4);
    the normalized value is checked to be an integer.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    values = [0]
    normalized = [0]
    for n in range(1, N + 1):
        p = pnv_eval(n, n) if n < 4 else pnv_closed(n, n)
        if p.denominator != 1:
            raise ArithmeticError(f"P_{n}({n}) not an integer")
        q, rem = divmod(p.numerator, factorial(n))
        if rem:
            raise ArithmeticError(f"P_{n}({n}) not divisible by {n}!")
        values.append(p.numerator)
        normalized.append(q)
    return values, normalized


def integer_partitions(n: int, min_part: int = 1) -> Iterator[PartitionShape]:
    """All partitions of n with parts >= min_part, as block-size shapes."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def rec(remaining: int, smallest: int, acc: list[int]) -> Iterator[list[int]]:
        if remaining == 0:
            yield acc
            return
        for part in range(smallest, remaining + 1):
            yield from rec(remaining - part, part, acc + [part])

    for sizes in rec(n, min_part, []):
        yield PartitionShape.from_block_sizes(sizes)


def bell_polynomial_coefficient(shape: PartitionShape) -> int:
    """Number of set partitions of an n-set with the given block shape:
    ``n! / (prod_i (i!)^{k_i} k_i!)`` where k_i blocks have size i."""
    n = shape.n
    den = 1
    for size, count in shape.counts:
        den *= factorial(size) ** count * factorial(count)
    q, rem = divmod(factorial(n), den)
    if rem:
        raise ArithmeticError(f"non-integral coefficient for shape {shape.counts!r}")
    return q


def bell_via_shapes(n: int) -> int:
    """B_n as the sum of shape coefficients over all partitions of n."""
    return sum(bell_polynomial_coefficient(s) for s in integer_partitions(n))


def beta_via_shapes(n: int) -> int:
    """beta_n as the same sum restricted to singleton-free shapes."""
    return sum(bell_polynomial_coefficient(s) for s in integer_partitions(n, min_part=2))


def poisson_moments(mean: int, N: int) -> list[int]:
    """Raw moments 0..N of a Poisson variable with integer mean a.

    ``m_{n+1} = a * sum_j C(n,j) m_j``; a = 1 gives the Bell numbers,
    a = 2 the doubled-exponential analogue, and so on.
    """
    if mean < 1 or N < 0:
        raise ValueError("need mean >= 1 and N >= 0")
    m = [1]
    for n in range(N):
        m.append(mean * sum(comb(n, j) * m[j] for j in range(n + 1)))
    return m


def arima_rows(N: int) -> TriangleTable:
    """Arima triangle rows 1..N: ``A[n,k] = C(n,k) B_{n-k}`` for k = 0..n;
    row n sums to B_{n+1}."""
    if N < 1:
        raise ValueError("N must be >= 1")
    bells = bell_numbers(N)
    rows = tuple(
        tuple(comb(n, k) * bells[n - k] for k in range(n + 1)) for n in range(1, N + 1)
    )
    return TriangleTable("arima", 1, 0, rows)


def solve_bell_inverse(target: int) -> int | None:
    """Smallest n with B_n equal to the target, or None.

    Bell numbers increase strictly from n = 1 on, so the scan stops as
    soon as they pass the target.
    """
    if target < 1:
        raise ValueError("target must be >= 1")
    if target == 1:
        return 0
    b = [1, 1]
    n = 1
    while b[n] < target:
        # extend by one row of the binomial recurrence
        n += 1
        b.append(sum(comb(n - 1, k) * b[n - 1 - k] for k in range(n)))
    return n if b[n] == target else None
