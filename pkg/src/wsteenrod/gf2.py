"""Dense bit-packed linear algebra over the two-element field.

Vectors are fixed-length bit strings packed into Python integers (bit j is
coordinate j), so vector addition is a single XOR and all arithmetic is
exact.  Row reduction always picks the lowest eligible column and then the
lowest row, which makes every derived basis reproducible across runs.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple


class DimensionMismatch(ValueError):
    """Raised when an operand has the wrong ambient dimension."""


def _mask(n: int) -> int:
    return (1 << n) - 1


class BitVector:
    """A vector over GF(2) of fixed length, packed into one integer."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise DimensionMismatch(f"negative length {length}")
        if bits < 0 or bits >> length:
            raise DimensionMismatch(f"bits 0x{bits:x} overflow length {length}")
        self.length = length
        self.bits = bits

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for j in support:
            if not 0 <= j < length:
                raise DimensionMismatch(f"index {j} out of range for length {length}")
            bits ^= 1 << j
        return cls(length, bits)

    @classmethod
    def from_bits_list(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise DimensionMismatch(f"length {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def dot(self, other: "BitVector") -> int:
        if self.length != other.length:
            raise DimensionMismatch(f"length {self.length} vs {other.length}")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.length) if (self.bits >> j) & 1)

    def to01(self) -> str:
        return "".join(str((self.bits >> j) & 1) for j in range(self.length))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def __repr__(self) -> str:
        return f"BitVector({self.length}, 0b{self.bits:0{max(self.length, 1)}b})"


class BitMatrix:
    """A list of equal-length bit-packed rows."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, ncols: int, rows: Iterable[int]):
        rows = tuple(rows)
        if ncols < 0:
            raise DimensionMismatch(f"negative column count {ncols}")
        for r in rows:
            if r < 0 or r >> ncols:
                raise DimensionMismatch(f"row 0x{r:x} overflows {ncols} columns")
        self.ncols = ncols
        self.nrows = len(rows)
        self.rows = rows

    @classmethod
    def from_vectors(cls, ncols: int, vectors: Iterable[BitVector]) -> "BitMatrix":
        vecs = list(vectors)
        for v in vecs:
            if v.length != ncols:
                raise DimensionMismatch(f"row length {v.length} vs {ncols} columns")
        return cls(ncols, (v.bits for v in vecs))

    @classmethod
    def from_entries(cls, entries: list[list[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            bits = 0
            for j, v in enumerate(row):
                if v & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, (1 << i for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(ncols, (0,) * nrows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix times column vector: coordinate i is row_i . v."""
        if v.length != self.ncols:
            raise DimensionMismatch(f"vector length {v.length} vs {self.ncols} columns")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.nrows, bits)

    def vec_mul(self, v: BitVector) -> BitVector:
        """Row vector times matrix: XOR of the rows selected by v."""
        if v.length != self.nrows:
            raise DimensionMismatch(f"vector length {v.length} vs {self.nrows} rows")
        acc = 0
        bits = v.bits
        while bits:
            i = (bits & -bits).bit_length() - 1
            acc ^= self.rows[i]
            bits &= bits - 1
        return BitVector(self.ncols, acc)

    def compose(self, other: "BitMatrix") -> "BitMatrix":
        """Self followed by other, rows acting on the left (row_i @ other)."""
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.ncols} columns vs {other.nrows} rows")
        out = []
        for r in self.rows:
            acc = 0
            bits = r
            while bits:
                i = (bits & -bits).bit_length() - 1
                acc ^= other.rows[i]
                bits &= bits - 1
            out.append(acc)
        return BitMatrix(other.ncols, out)

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            bits = 0
            for i, r in enumerate(self.rows):
                if (r >> j) & 1:
                    bits |= 1 << i
            cols.append(bits)
        return BitMatrix(self.nrows, cols)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise DimensionMismatch(f"{self.ncols} vs {other.ncols} columns")
        return BitMatrix(self.ncols, self.rows + other.rows)

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


class RrefResult(NamedTuple):
    echelon: BitMatrix
    pivots: tuple[int, ...]
    rank: int


def _rref_rows(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    pivot_row = 0
    nrows = len(rows)
    for col in range(ncols):
        bit = 1 << col
        src = -1
        for i in range(pivot_row, nrows):
            if rows[i] & bit:
                src = i
                break
        if src < 0:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        prow = rows[pivot_row]
        for i in range(nrows):
            if i != pivot_row and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        pivot_row += 1
        if pivot_row == nrows:
            break
    return rows, pivots


def rref(m: BitMatrix) -> RrefResult:
    """Reduced row echelon form of ``m``.

    Returns a matrix of the same shape (zero rows kept at the bottom), the
    pivot columns in increasing order, and the rank.
    """
    rows, pivots = _rref_rows(list(m.rows), m.ncols)
    return RrefResult(BitMatrix(m.ncols, rows), tuple(pivots), len(pivots))


def rank(m: BitMatrix) -> int:
    _, pivots = _rref_rows(list(m.rows), m.ncols)
    return len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^n given by a reduced row echelon basis."""

    ambient_dim: int
    basis: BitMatrix
    pivots: tuple[int, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[BitVector]) -> "Subspace":
        m = BitMatrix.from_vectors(ambient_dim, vectors)
        ech, pivots, rk = rref(m)
        return cls(ambient_dim, BitMatrix(ambient_dim, ech.rows[:rk]), pivots)

    @classmethod
    def from_matrix_rows(cls, m: BitMatrix) -> "Subspace":
        ech, pivots, rk = rref(m)
        return cls(m.ncols, BitMatrix(m.ncols, ech.rows[:rk]), pivots)

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def reduce(self, v: BitVector) -> BitVector:
        """Subtract basis rows until all pivot coordinates vanish."""
        if v.length != self.ambient_dim:
            raise DimensionMismatch(f"length {v.length} vs ambient {self.ambient_dim}")
        bits = v.bits
        for i, p in enumerate(self.pivots):
            if (bits >> p) & 1:
                bits ^= self.basis.rows[i]
        return BitVector(self.ambient_dim, bits)

    def __contains__(self, v: BitVector) -> bool:
        return self.reduce(v).is_zero()


def kernel(m: BitMatrix) -> Subspace:
    """Right kernel of ``m``: the space of v with m . v = 0."""
    ech, pivots, rk = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for i, p in enumerate(pivots):
            if (ech.rows[i] >> f) & 1:
                bits |= 1 << p
        vectors.append(bits)
    return Subspace.from_matrix_rows(BitMatrix(m.ncols, vectors))


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """Express ``b`` over the rows of ``m``.

    Returns x with x . m = b (length = number of rows), or None when b is
    not in the row space.  Raises DimensionMismatch if the lengths differ.
    """
    if b.length != m.ncols:
        raise DimensionMismatch(f"rhs length {b.length} vs {m.ncols} columns")
    n = m.ncols
    # Augment each row with its identity coordinate above bit n.
    rows = [m.rows[i] | (1 << (n + i)) for i in range(m.nrows)]
    pivots: list[int] = []
    pivot_row = 0
    for col in range(n):
        bit = 1 << col
        src = -1
        for i in range(pivot_row, len(rows)):
            if rows[i] & bit:
                src = i
                break
        if src < 0:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        prow = rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        pivot_row += 1
    acc = b.bits
    combo = 0
    for i, p in enumerate(pivots):
        if (acc >> p) & 1:
            acc ^= rows[i] & _mask(n)
            combo ^= rows[i] >> n
    if acc:
        return None
    return BitVector(m.nrows, combo)


def quotient(
    ambient_dim: int, s: Subspace
) -> tuple[list[int], Callable[[BitVector], BitVector]]:
    """Quotient of GF(2)^ambient_dim by the subspace ``s``.

    Returns the non-pivot coordinates (one coset representative per index)
    and a linear idempotent projection whose kernel is exactly ``s``.
    """
    if s.ambient_dim != ambient_dim:
        raise DimensionMismatch(f"subspace ambient {s.ambient_dim} vs {ambient_dim}")
    pivot_set = set(s.pivots)
    reps = [j for j in range(ambient_dim) if j not in pivot_set]
    return reps, s.reduce
