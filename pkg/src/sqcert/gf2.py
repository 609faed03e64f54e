"""Exact dense linear algebra over GF(2).

Vectors pack their coordinates into a single Python integer (bit ``j``
holds the coordinate of column ``j``), so a row operation is one XOR
regardless of width.  Matrices carry an explicit ordered column
labeling supplied by the caller; nothing in this module ever reorders
columns, which keeps downstream serializations replayable bit for bit.

All values are immutable after construction and every operation is a
pure function, so rank problems can be evaluated in parallel freely.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class BitVector:
    """Fixed-length vector over GF(2), packed into one integer."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise ValueError("vector length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError("bit pattern does not fit length %d" % length)
        self.length = length
        self.bits = bits

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> BitVector:
        """Build a vector from an iterable of 0/1 entries (index 0 first)."""
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError("entries must be 0 or 1, got %r" % (v,))
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from01(cls, text: str) -> BitVector:
        """Parse a '0'/'1' string, leftmost character = column 0."""
        if text.strip("01"):
            raise ValueError("expected a string of '0'/'1', got %r" % text)
        return cls.from_bits(int(ch) for ch in text)

    def to01(self) -> str:
        """Render as a '0'/'1' string, leftmost character = column 0."""
        return "".join("1" if self.bits >> j & 1 else "0" for j in range(self.length))

    def popcount(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates, increasing."""
        return tuple(j for j in range(self.length) if self.bits >> j & 1)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return self.bits >> j & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise ValueError("length mismatch: %d vs %d" % (self.length, other.length))
        return BitVector(self.length, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __repr__(self) -> str:
        return "BitVector(%r)" % self.to01()


class BitMatrix:
    """A list of equal-length rows over an ordered column labeling.

    ``column_labels`` defaults to ``0..n-1``; callers that care about
    reproducible serialization pass their own labels (the labels must be
    pairwise distinct).  Rows may be given as :class:`BitVector` or any
    iterable of 0/1 entries.
    """

    __slots__ = ("rows", "column_labels")

    def __init__(self, rows: Iterable, column_labels: Sequence | None = None):
        packed = tuple(
            r if isinstance(r, BitVector) else BitVector.from_bits(r) for r in rows
        )
        if column_labels is None:
            ncols = packed[0].length if packed else 0
            column_labels = range(ncols)
        labels = tuple(column_labels)
        if len(set(labels)) != len(labels):
            raise ValueError("column labels must be pairwise distinct")
        for r in packed:
            if r.length != len(labels):
                raise ValueError(
                    "ragged rows: row of length %d in a %d-column matrix"
                    % (r.length, len(labels))
                )
        self.rows = packed
        self.column_labels = labels

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.column_labels)

    def to01_rows(self) -> list[str]:
        """Row-major '0'/'1' serialization (the certificate wire form)."""
        return [r.to01() for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.rows == other.rows and self.column_labels == other.column_labels

    def __hash__(self) -> int:
        return hash((self.rows, self.column_labels))

    def __repr__(self) -> str:
        return "BitMatrix(%d x %d)" % (self.nrows, self.ncols)


def _forward_eliminate(m: BitMatrix) -> tuple[list[int], list[int], list[int]]:
    """Forward Gaussian elimination with XOR row operations.

    Returns:
        (work, pivots, combo):
            work — echelon row bit-patterns, zero rows at the bottom.
            pivots — pivot column indices in increasing order.
            combo — for each work row, the set of original row indices
                (as a bitmask) whose XOR equals that row.
    """
    work = [r.bits for r in m.rows]
    combo = [1 << i for i in range(len(work))]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.ncols):
        mask = 1 << col
        found = next((r for r in range(pivot_row, len(work)) if work[r] & mask), None)
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        combo[pivot_row], combo[found] = combo[found], combo[pivot_row]
        for r in range(pivot_row + 1, len(work)):
            if work[r] & mask:
                work[r] ^= work[pivot_row]
                combo[r] ^= combo[pivot_row]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(work):
            break
    return work, pivots, combo


def rank(m: BitMatrix) -> int:
    """GF(2) rank of the matrix (0 for an empty matrix)."""
    _, pivots, _ = _forward_eliminate(m)
    return len(pivots)


def row_reduce(m: BitMatrix) -> BitMatrix:
    """Row-echelon form with the same row space and column labels.

    Zero rows are kept at the bottom, so the shape is preserved; pivot
    columns occur in increasing column order (see :func:`pivot_columns`).
    """
    work, _, _ = _forward_eliminate(m)
    return BitMatrix([BitVector(m.ncols, bits) for bits in work], m.column_labels)


def pivot_columns(m: BitMatrix) -> tuple[int, ...]:
    """Pivot column indices of the echelon form, increasing."""
    _, pivots, _ = _forward_eliminate(m)
    return tuple(pivots)


def independent_rows(m: BitMatrix) -> tuple[bool, BitVector | None]:
    """Decide whether the rows are linearly independent over GF(2).

    Returns:
        (flag, witness): flag is True iff rank equals the row count.
        When False, witness is a nonzero selection vector over the row
        indices whose selected rows XOR to zero; it re-verifies from the
        rows alone.
    """
    work, pivots, combo = _forward_eliminate(m)
    if len(pivots) == len(work):
        return True, None
    # Forward elimination leaves exactly the rows below the pivot count zero.
    zero_at = len(pivots)
    return False, BitVector(m.nrows, combo[zero_at])


def transpose(m: BitMatrix) -> BitMatrix:
    """Transpose; the result's columns are labeled by row indices 0..r-1."""
    rows = []
    for col in range(m.ncols):
        bits = 0
        for i, r in enumerate(m.rows):
            bits |= (r.bits >> col & 1) << i
        rows.append(BitVector(m.nrows, bits))
    return BitMatrix(rows, range(m.nrows))
