"""
Dense linear algebra over GF(2).

Vectors and matrix rows are packed into Python integers (bit j = coordinate j),
so XOR, AND and popcount run word-parallel inside the interpreter's bignum code.
Values are immutable once built and can be shared between threads.
"""

from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatchError, InvalidParameterError


def popcount(x: int) -> int:
    return bin(x).count('1')


def parity(x: int) -> int:
    return popcount(x) & 1


class BitVector:
    """A binary vector of fixed length."""

    __slots__ = ('_length', '_bits')

    def __init__(self, length: int, bits: int = 0):
        if length < 1:
            raise InvalidParameterError(f"BitVector length must be >= 1, got {length}")
        if bits < 0 or bits >> length:
            raise InvalidParameterError(f"bits {bits:#x} do not fit in length {length}")
        self._length = length
        self._bits = bits

    @classmethod
    def from_list(cls, values: Sequence[int]) -> 'BitVector':
        bits = 0
        for j, value in enumerate(values):
            if value & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def from_string(cls, text: str) -> 'BitVector':
        """Parse '0110' (coordinate 0 first)."""
        if not text or set(text) - {'0', '1'}:
            raise InvalidParameterError(f"Not a 0/1 string: {text!r}")
        return cls.from_list([int(ch) for ch in text])

    @classmethod
    def zeros(cls, length: int) -> 'BitVector':
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> 'BitVector':
        return cls(length, (1 << length) - 1)

    @classmethod
    def unit(cls, length: int, index: int) -> 'BitVector':
        return cls(length, 1 << index)

    @property
    def length(self) -> int:
        return self._length

    @property
    def bits(self) -> int:
        return self._bits

    def weight(self) -> int:
        return popcount(self._bits)

    def support(self) -> List[int]:
        return [j for j in range(self._length) if (self._bits >> j) & 1]

    def to_list(self) -> List[int]:
        return [(self._bits >> j) & 1 for j in range(self._length)]

    def dot(self, other: 'BitVector') -> int:
        self._check_same_length(other)
        return parity(self._bits & other._bits)

    def _check_same_length(self, other: 'BitVector') -> None:
        if self._length != other._length:
            raise DimensionMismatchError(f"Length mismatch: {self._length} vs {other._length}")

    def __add__(self, other: 'BitVector') -> 'BitVector':
        self._check_same_length(other)
        return BitVector(self._length, self._bits ^ other._bits)

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self._length:
            raise IndexError(index)
        return (self._bits >> index) & 1

    def __len__(self) -> int:
        return self._length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._length == other._length and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._length, self._bits))

    def __str__(self) -> str:
        return ''.join(str((self._bits >> j) & 1) for j in range(self._length))

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


class BitMatrix:
    """A rows x cols binary matrix stored as packed row integers."""

    __slots__ = ('_rows', '_cols', '_data')

    def __init__(self, rows: int, cols: int, data: Sequence[int]):
        if rows < 1 or cols < 1:
            raise InvalidParameterError(f"BitMatrix must be nonempty, got {rows}x{cols}")
        if len(data) != rows:
            raise DimensionMismatchError(f"Expected {rows} rows, got {len(data)}")
        limit = 1 << cols
        for row in data:
            if row < 0 or row >= limit:
                raise InvalidParameterError(f"Row {row:#x} does not fit in {cols} columns")
        self._rows = rows
        self._cols = cols
        self._data: Tuple[int, ...] = tuple(data)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> 'BitMatrix':
        if not rows:
            raise InvalidParameterError("BitMatrix must have at least one row")
        cols = len(rows[0])
        if any(len(row) != cols for row in rows):
            raise DimensionMismatchError("Ragged rows")
        return cls(len(rows), cols, [BitVector.from_list(row).bits for row in rows])

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector]) -> 'BitMatrix':
        if not vectors:
            raise InvalidParameterError("BitMatrix must have at least one row")
        cols = vectors[0].length
        if any(v.length != cols for v in vectors):
            raise DimensionMismatchError("Row vectors of different lengths")
        return cls(len(vectors), cols, [v.bits for v in vectors])

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> 'BitMatrix':
        """Build from column integers (bit i of a column = row i)."""
        data = [0] * rows
        for j, column in enumerate(columns):
            for i in range(rows):
                if (column >> i) & 1:
                    data[i] |= 1 << j
        return cls(rows, len(columns), data)

    @classmethod
    def identity(cls, size: int) -> 'BitMatrix':
        return cls(size, size, [1 << i for i in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'BitMatrix':
        return cls(rows, cols, [0] * rows)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def row_ints(self) -> Tuple[int, ...]:
        return self._data

    def row(self, i: int) -> BitVector:
        return BitVector(self._cols, self._data[i])

    def row_vectors(self) -> List[BitVector]:
        return [BitVector(self._cols, r) for r in self._data]

    def column_int(self, j: int) -> int:
        column = 0
        for i, row in enumerate(self._data):
            if (row >> j) & 1:
                column |= 1 << i
        return column

    def column_ints(self) -> List[int]:
        return [self.column_int(j) for j in range(self._cols)]

    def column(self, j: int) -> BitVector:
        return BitVector(self._rows, self.column_int(j))

    def transpose(self) -> 'BitMatrix':
        return BitMatrix(self._cols, self._rows, self.column_ints())

    def select_rows(self, indices: Iterable[int]) -> 'BitMatrix':
        chosen = [self._data[i] for i in indices]
        return BitMatrix(len(chosen), self._cols, chosen)

    def append_rows(self, vectors: Sequence[BitVector]) -> 'BitMatrix':
        for v in vectors:
            if v.length != self._cols:
                raise DimensionMismatchError(f"Row of length {v.length} for {self._cols} columns")
        return BitMatrix(self._rows + len(vectors), self._cols, list(self._data) + [v.bits for v in vectors])

    def hstack(self, other: 'BitMatrix') -> 'BitMatrix':
        if other._rows != self._rows:
            raise DimensionMismatchError(f"Row count mismatch: {self._rows} vs {other._rows}")
        shift = self._cols
        return BitMatrix(self._rows, self._cols + other._cols,
                         [a | (b << shift) for a, b in zip(self._data, other._data)])

    def to_text(self) -> str:
        lines = [f"{self._rows} {self._cols}"]
        lines.extend(str(BitVector(self._cols, r)) for r in self._data)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text: str) -> 'BitMatrix':
        """Parse the 'rows cols' header followed by one 0/1 line per row."""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise InvalidParameterError("Empty matrix text")
        try:
            rows, cols = (int(tok) for tok in lines[0].split())
        except ValueError as e:
            raise InvalidParameterError(f"Bad matrix header {lines[0]!r}: {e}")
        body = lines[1:1 + rows]
        if len(body) != rows or any(len(line) != cols for line in body):
            raise DimensionMismatchError(f"Matrix text does not match header {rows}x{cols}")
        return cls(rows, cols, [BitVector.from_string(line).bits for line in body])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self._rows, self._cols, self._data) == (other._rows, other._cols, other._data)

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._data))

    def __repr__(self) -> str:
        return f"BitMatrix({self._rows}x{self._cols})"


def rref(M: BitMatrix) -> Tuple[BitMatrix, int, List[int]]:
    """
    Reduced row echelon form by leftmost-pivot elimination.

    Returns:
        (R, rank, pivot_columns); R has the same shape as M, zero rows last
    """
    rows = list(M.row_ints)
    pivots: List[int] = []
    pivot_row = 0
    for col in range(M.cols):
        if pivot_row == len(rows):
            break
        bit = 1 << col
        found = next((i for i in range(pivot_row, len(rows)) if rows[i] & bit), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and rows[i] & bit:
                rows[i] ^= pivot
        pivots.append(col)
        pivot_row += 1
    return BitMatrix(M.rows, M.cols, rows), len(pivots), pivots


def rank(M: BitMatrix) -> int:
    return rref(M)[1]


def nullspace(M: BitMatrix) -> List[BitVector]:
    """Basis of {v : M v = 0}, one vector per free column (ascending)."""
    R, r, pivots = rref(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for i, p in enumerate(pivots):
            if (R.row_ints[i] >> free) & 1:
                bits |= 1 << p
        basis.append(BitVector(M.cols, bits))
    return basis


def mat_vec(M: BitMatrix, v: BitVector) -> BitVector:
    if v.length != M.cols:
        raise DimensionMismatchError(f"Vector length {v.length} != matrix cols {M.cols}")
    bits = 0
    for i, row in enumerate(M.row_ints):
        if parity(row & v.bits):
            bits |= 1 << i
    return BitVector(M.rows, bits)


def independent_rows(M: BitMatrix) -> List[int]:
    """Indices of a maximal linearly independent set of rows, earliest rows first."""
    return rref(M.transpose())[2]


def same_row_space(A: BitMatrix, B: BitMatrix) -> bool:
    if A.cols != B.cols:
        return False
    R_a, rank_a, _ = rref(A)
    R_b, rank_b, _ = rref(B)
    return rank_a == rank_b and R_a.row_ints[:rank_a] == R_b.row_ints[:rank_b]
