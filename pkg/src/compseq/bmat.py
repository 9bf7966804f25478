"""Bit-packed Boolean matrices.

A square matrix over {0,1} is stored as one Python int per row, bit j of
``rows[i]`` holding entry (i, j).  Python ints are arbitrary-precision bit
vectors, so the inner loops of the Boolean (OR-AND) product and of the
row-intersection operator run a machine word at a time, and equality and
hashing are bit-exact with no padding pitfalls.

The row-intersection operator ``gamma`` sends A to the symmetric matrix
with zero diagonal whose (i, j) entry is 1 iff rows i and j of A share a
set column; it is the adjacency matrix of the competition graph of the
digraph whose adjacency matrix is A.

``power_cycle`` finds the exact index and period of the eventually
periodic power sequence A, A^2, A^3, ... by storing every distinct power
(the full matrix, not a hash, so collisions cannot lie) until the first
repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DEFAULT_MEMORY_CAP",
    "BoolMatrix",
    "PowerCycle",
    "DimensionMismatchError",
    "PowerCycleMemoryError",
    "ParseError",
    "bool_mul",
    "bool_pow",
    "gamma",
    "power_cycle",
    "power_trajectory",
    "parse_matrix",
    "format_matrix",
]

DEFAULT_MEMORY_CAP = 100_000


class DimensionMismatchError(ValueError):
    """Two matrices were combined but their dimensions differ."""


class PowerCycleMemoryError(RuntimeError):
    """power_cycle hit its cap on stored distinct powers before repeating."""


class ParseError(ValueError):
    """Malformed input text.  ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BoolMatrix:
    """n x n matrix over {0,1}; ``rows[i]`` has bit j set iff entry (i,j) is 1.

    Canonical form: bits at positions >= n are zero, so two values compare
    equal iff they are the same matrix.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "BoolMatrix":
        n = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            acc = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) is {e!r}, expected 0 or 1")
                acc |= e << j
            rows.append(acc)
        return cls(n, tuple(rows))

    @classmethod
    def zeros(cls, n: int) -> "BoolMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j), 0-based."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"entry ({i},{j}) out of range for n={self.n}")
        return (self.rows[i] >> j) & 1

    def to_entries(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def __repr__(self):
        body = ",".join(format(r, "b").zfill(self.n)[::-1] for r in self.rows)
        return f"BoolMatrix({self.n}, [{body}])"


@dataclass(frozen=True)
class PowerCycle:
    """Exact index and period of a power sequence: A^(m+pi) = A^m iff m >= mu,
    and all of A^1 .. A^(mu+pi-1) are pairwise distinct."""

    index_mu: int
    period_pi: int


def _check_same_dim(a: BoolMatrix, b: BoolMatrix) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimensions differ: {a.n} vs {b.n}")


def bool_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """Boolean product: entry (i,j) of the result is 1 iff some k has
    a[i,k] = b[k,j] = 1.  Row i of the result is the OR of the rows of b
    indexed by the set bits of row i of a."""
    _check_same_dim(a, b)
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            k = (r & -r).bit_length() - 1
            acc |= brows[k]
            r &= r - 1
        out.append(acc)
    return BoolMatrix(a.n, tuple(out))


def bool_pow(a: BoolMatrix, m: int) -> BoolMatrix:
    """Boolean m-th power by repeated squaring; bool_pow(a, 0) is I."""
    if m < 0:
        raise ValueError(f"exponent must be >= 0, got {m}")
    result = BoolMatrix.identity(a.n)
    base = a
    while m:
        if m & 1:
            result = bool_mul(result, base)
        base = bool_mul(base, base)
        m >>= 1
    return result


def gamma(a: BoolMatrix) -> BoolMatrix:
    """Row-intersection operator: result (i,j) = 1 iff i != j and rows i, j
    of a share a set column.  Always symmetric with zero diagonal."""
    n = a.n
    rows = a.rows
    out = [0] * n
    for i in range(n):
        ri = rows[i]
        if not ri:
            continue
        for j in range(i + 1, n):
            if ri & rows[j]:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return BoolMatrix(n, tuple(out))


def power_trajectory(
    a: BoolMatrix, memory_cap: int = DEFAULT_MEMORY_CAP
) -> tuple[PowerCycle, tuple[BoolMatrix, ...]]:
    """All distinct powers of a, in order, plus their cycle structure.

    Returns (cycle, powers) with powers[m-1] = A^m for m = 1..mu+pi-1.
    Raises PowerCycleMemoryError once more than memory_cap distinct powers
    would have to be stored.
    """
    seen = {a.rows: 1}
    powers = [a]
    current = a
    m = 1
    while True:
        current = bool_mul(current, a)
        m += 1
        first = seen.get(current.rows)
        if first is not None:
            return PowerCycle(index_mu=first, period_pi=m - first), tuple(powers)
        if len(seen) >= memory_cap:
            raise PowerCycleMemoryError(
                f"power sequence exceeded memory cap of {memory_cap} distinct powers"
            )
        seen[current.rows] = m
        powers.append(current)


def power_cycle(a: BoolMatrix, memory_cap: int = DEFAULT_MEMORY_CAP) -> PowerCycle:
    """Smallest (mu, pi) with A^(mu+pi) = A^mu, found by exhaustive hashing
    of full matrices (a repeat is a true repeat, never a hash collision)."""
    cycle, _ = power_trajectory(a, memory_cap)
    return cycle


def parse_matrix(text: str) -> BoolMatrix:
    """Parse the matrix text format: line 1 is the dimension n in decimal,
    lines 2..n+1 are rows of exactly n characters from {0,1}."""
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty input")
    head = lines[0].strip()
    try:
        n = int(head)
    except ValueError:
        raise ParseError(1, f"expected a decimal dimension, got {head!r}") from None
    if n < 1:
        raise ParseError(1, f"dimension must be >= 1, got {n}")
    if len(lines) < n + 1:
        raise ParseError(len(lines) + 1, f"expected {n} rows, input ends after row {len(lines) - 1}")
    rows = []
    for i in range(n):
        lineno = i + 2
        row = lines[i + 1].strip()
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} characters, got {len(row)}")
        acc = 0
        for j, ch in enumerate(row):
            if ch == "1":
                acc |= 1 << j
            elif ch != "0":
                raise ParseError(lineno, f"invalid character {ch!r} at column {j + 1}")
        rows.append(acc)
    for extra in range(n + 1, len(lines)):
        if lines[extra].strip():
            raise ParseError(extra + 1, "trailing content after matrix rows")
    return BoolMatrix(n, tuple(rows))


def format_matrix(a: BoolMatrix) -> str:
    """Inverse of parse_matrix; newline-terminated, bit-exact."""
    body = "\n".join(
        "".join("1" if (r >> j) & 1 else "0" for j in range(a.n)) for r in a.rows
    )
    return f"{a.n}\n{body}\n"
