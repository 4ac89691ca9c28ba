"""
Binary linear codes and their syndrome-space coset tables.

A LinearCode keeps the user-supplied parity check (H_raw) next to a full-rank
row selection of it (H), so every syndrome lives in F_2^(n-k) and the syndrome
space is exactly 2^(n-k) integers. Syndromes are packed integers: bit i is
row i of H.
"""

import itertools
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from .errors import (
    DimensionMismatchError,
    EnumerationGuardError,
    InvalidParameterError,
    UnionNotLinearError,
)
from .gf2_core import BitMatrix, BitVector, independent_rows, mat_vec, nullspace, parity

DEFAULT_MAX_REDUNDANCY = 24

# Frontier chunk size (syndromes x columns) for the vectorized BFS.
_BFS_CHUNK_ELEMENTS = 1 << 22


class LinearCode:
    """
    A binary linear [n, k] code.

    Attributes:
        n: length
        k: dimension
        G: k x n generator (None when k = 0)
        H: (n-k) x n full-rank parity check (None when k = n)
        H_raw: the parity check the code was built from (may be rank deficient)
    """

    def __init__(self, n: int, G: Optional[BitMatrix], H: Optional[BitMatrix],
                 H_raw: Optional[BitMatrix] = None):
        self.n = n
        self.G = G
        self.H = H
        self.H_raw = H_raw if H_raw is not None else H
        self.k = G.rows if G is not None else 0
        r = H.rows if H is not None else 0
        if self.k + r != n:
            raise DimensionMismatchError(f"k={self.k} plus rank(H)={r} does not equal n={n}")
        self._columns: List[int] = H.column_ints() if H is not None else [0] * n

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def column_syndromes(self) -> List[int]:
        """Column j of H as a packed syndrome."""
        return list(self._columns)

    def syndrome(self, x: BitVector) -> int:
        if x.length != self.n:
            raise DimensionMismatchError(f"Vector length {x.length} != code length {self.n}")
        s = 0
        bits = x.bits
        j = 0
        while bits:
            if bits & 1:
                s ^= self._columns[j]
            bits >>= 1
            j += 1
        return s

    def raw_syndrome(self, x: BitVector) -> BitVector:
        """Syndrome under H_raw (e.g. the m-row H_m)."""
        if self.H_raw is None:
            raise InvalidParameterError("Code has no parity-check rows")
        return mat_vec(self.H_raw, x)

    def contains(self, x: BitVector) -> bool:
        return self.syndrome(x) == 0

    def all_ones_syndrome(self) -> int:
        return self.syndrome(BitVector.ones(self.n))

    def codewords(self) -> List[BitVector]:
        """All 2^k codewords (small k only)."""
        if self.G is None:
            return [BitVector.zeros(self.n)]
        if self.k > 20:
            raise EnumerationGuardError(f"2^{self.k} codewords is too large to enumerate")
        words = [0]
        for row in self.G.row_ints:
            words += [w ^ row for w in words]
        return [BitVector(self.n, w) for w in words]

    def to_text(self) -> str:
        """Header 'n k' followed by the G and H matrix-text blocks."""
        parts = [f"{self.n} {self.k}\n"]
        parts.append(self.G.to_text() if self.G is not None else f"0 {self.n}\n")
        parts.append(self.H.to_text() if self.H is not None else f"0 {self.n}\n")
        return ''.join(parts)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}])"


def _matrix_or_none(rows: int, cols: int, data: Sequence[int]) -> Optional[BitMatrix]:
    return BitMatrix(rows, cols, data) if rows else None


def from_parity_check(H_raw: BitMatrix) -> LinearCode:
    """Code {x : H_raw x = 0}; H is a full-rank row selection of H_raw, G its nullspace."""
    n = H_raw.cols
    rows = independent_rows(H_raw)
    H = H_raw.select_rows(rows) if rows else None
    if H is None:
        G = BitMatrix.identity(n)
    else:
        basis = nullspace(H)
        G = _matrix_or_none(len(basis), n, [v.bits for v in basis])
    return LinearCode(n, G, H, H_raw)


def from_generator(G_raw: BitMatrix) -> LinearCode:
    """Code spanned by the rows of G_raw; H is a basis of the dual."""
    n = G_raw.cols
    rows = independent_rows(G_raw)
    G = G_raw.select_rows(rows) if rows else None
    if G is None:
        H = BitMatrix.identity(n)
    else:
        basis = nullspace(G)
        H = _matrix_or_none(len(basis), n, [v.bits for v in basis])
    return LinearCode(n, G, H)


def code_from_text(text: str) -> LinearCode:
    """Inverse of LinearCode.to_text()."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    n, k = (int(tok) for tok in lines[0].split())
    g_rows = int(lines[1].split()[0])
    g_block = lines[1:2 + g_rows]
    h_start = 2 + g_rows
    h_rows = int(lines[h_start].split()[0])
    if g_rows == 0:
        return from_parity_check(BitMatrix.from_text('\n'.join(lines[h_start:h_start + 1 + h_rows])))
    code = from_generator(BitMatrix.from_text('\n'.join(g_block)))
    if code.k != k or code.n != n:
        raise DimensionMismatchError(f"Header [{n},{k}] does not match generator [{code.n},{code.k}]")
    return code


class CosetTable:
    """
    Coset weight and a minimum-weight leader for every syndrome.

    Leaders are stored as BFS parent pointers: via_column[s] is the column
    whose addition reached s from a syndrome one level lower.
    """

    def __init__(self, code: LinearCode, weights: np.ndarray, via_column: np.ndarray):
        self.code = code
        self.weights = weights
        self.via_column = via_column
        self.weights.setflags(write=False)
        self.via_column.setflags(write=False)

    @property
    def size(self) -> int:
        return int(self.weights.size)

    @property
    def column_syndromes(self) -> List[int]:
        return self.code.column_syndromes

    def weight(self, s: int) -> int:
        return int(self.weights[s])

    def leader(self, s: int) -> BitVector:
        columns = self.code.column_syndromes
        bits = 0
        while s:
            j = int(self.via_column[s])
            bits |= 1 << j
            s ^= columns[j]
        return BitVector(self.code.n, bits)

    def distribution(self) -> List[int]:
        return np.bincount(self.weights.astype(np.int64)).tolist()

    def syndromes_of_weight(self, w: int) -> List[int]:
        return np.nonzero(self.weights == w)[0].tolist()


class TranslateView:
    """
    Distances to the translate C + t, read off the coset table:
    d(x, C + t) = weight(syndrome(x) + syndrome(t)).
    """

    def __init__(self, table: CosetTable, t: BitVector):
        self.table = table
        self.code = table.code
        self.shift = self.code.syndrome(t)
        index = np.arange(table.size, dtype=np.int64) ^ self.shift
        self.weights = table.weights[index]
        self.weights.setflags(write=False)

    @property
    def size(self) -> int:
        return int(self.weights.size)

    @property
    def column_syndromes(self) -> List[int]:
        return self.code.column_syndromes

    def weight(self, s: int) -> int:
        return int(self.weights[s])

    def distribution(self) -> List[int]:
        return np.bincount(self.weights.astype(np.int64)).tolist()


class CoverWitness(BaseModel):
    nonantipodal: bool
    witness: Optional[int] = None
    witness_is_all_ones: bool = False
    covering_radius: int
    top_level_size: int


def _check_guard(code: LinearCode, max_redundancy: Optional[int]) -> None:
    if max_redundancy is not None and code.redundancy > max_redundancy:
        raise EnumerationGuardError(
            f"n-k = {code.redundancy} exceeds the enumeration guard {max_redundancy}: "
            f"2^{code.redundancy} syndromes is too large to enumerate"
        )


def build_coset_table(code: LinearCode, max_redundancy: Optional[int] = DEFAULT_MAX_REDUNDANCY) -> CosetTable:
    """
    Breadth-first search over F_2^(n-k) with the columns of H as generators.

    Args:
        code: The code
        max_redundancy: Enumeration guard on n-k (None disables it)

    Raises:
        EnumerationGuardError: If n-k exceeds the guard
    """
    _check_guard(code, max_redundancy)
    r = code.redundancy
    size = 1 << r
    if r >= 8:
        print(f"🔎 Building coset table for {code!r}: {size} syndromes", file=sys.stderr)

    columns = np.array(code.column_syndromes, dtype=np.int64)
    ncols = columns.size
    weights = np.full(size, -1, dtype=np.int16)
    via_column = np.full(size, -1, dtype=np.int32)
    weights[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    chunk = max(1, _BFS_CHUNK_ELEMENTS // max(ncols, 1))
    while frontier.size:
        level += 1
        found = []
        for start in range(0, frontier.size, chunk):
            candidates = (frontier[start:start + chunk, None] ^ columns[None, :]).ravel()
            fresh = np.nonzero(weights[candidates] < 0)[0]
            if fresh.size == 0:
                continue
            values, first = np.unique(candidates[fresh], return_index=True)
            chosen = fresh[first]
            weights[values] = level
            via_column[values] = (chosen % ncols).astype(np.int32)
            found.append(values)
        frontier = np.concatenate(found) if found else np.array([], dtype=np.int64)
    return CosetTable(code, weights, via_column)


def covering_radius(table) -> int:
    return int(table.weights.max())


def minimum_distance_upto(code: LinearCode, w_max: int) -> Optional[int]:
    """
    Smallest w <= w_max such that some w columns of H are dependent.

    Returns:
        w, or None when the minimum distance is greater than w_max
    """
    if not 1 <= w_max <= 4:
        raise InvalidParameterError(f"w_max must be in 1..4, got {w_max}")
    columns = code.column_syndromes
    if any(c == 0 for c in columns):
        return 1
    if w_max < 2:
        return None
    if len(set(columns)) < len(columns):
        return 2
    if w_max < 3:
        return None
    column_set = set(columns)
    for i, j in itertools.combinations(range(len(columns)), 2):
        if columns[i] ^ columns[j] in column_set:
            return 3
    if w_max < 4:
        return None
    # Columns are distinct and 3-independent here, so equal pair sums come from disjoint pairs.
    pair_sums = set()
    for i, j in itertools.combinations(range(len(columns)), 2):
        s = columns[i] ^ columns[j]
        if s in pair_sums:
            return 4
        pair_sums.add(s)
    return None


def codeword_census(code: LinearCode, weight: int) -> List[BitVector]:
    """All codewords of exactly the given weight (0..4), sorted by bit pattern."""
    if not 0 <= weight <= 4:
        raise InvalidParameterError(f"codeword_census supports weights 0..4, got {weight}")
    n = code.n
    columns = code.column_syndromes
    if weight == 0:
        return [BitVector.zeros(n)]
    positions: Dict[int, List[int]] = {}
    for j, c in enumerate(columns):
        positions.setdefault(c, []).append(j)
    found = set()
    if weight == 1:
        found = {1 << j for j in positions.get(0, [])}
    elif weight == 2:
        for js in positions.values():
            for a, b in itertools.combinations(js, 2):
                found.add((1 << a) | (1 << b))
    elif weight == 3:
        for i, j in itertools.combinations(range(n), 2):
            for k in positions.get(columns[i] ^ columns[j], []):
                if k > j:
                    found.add((1 << i) | (1 << j) | (1 << k))
    else:
        by_sum: Dict[int, List[int]] = {}
        for i, j in itertools.combinations(range(n), 2):
            by_sum.setdefault(columns[i] ^ columns[j], []).append((1 << i) | (1 << j))
        for pairs in by_sum.values():
            for a, b in itertools.combinations(pairs, 2):
                if a & b == 0:
                    found.add(a | b)
    return [BitVector(n, bits) for bits in sorted(found)]


def is_nonantipodal_with_coset_cover(code: LinearCode, table: CosetTable) -> CoverWitness:
    """
    True iff exactly one syndrome attains the covering radius; also reports
    whether that syndrome is the syndrome of the all-ones vector.
    """
    rho = covering_radius(table)
    top = table.syndromes_of_weight(rho)
    if len(top) != 1:
        return CoverWitness(nonantipodal=False, covering_radius=rho, top_level_size=len(top))
    witness = top[0]
    return CoverWitness(
        nonantipodal=True,
        witness=witness,
        witness_is_all_ones=witness == code.all_ones_syndrome(),
        covering_radius=rho,
        top_level_size=1,
    )


def union_with_covering_set(code: LinearCode, table: CosetTable) -> LinearCode:
    """
    The linear code C ∪ C(ρ) = C ∪ (C + 1).

    Raises:
        UnionNotLinearError: If C(ρ) is not the single coset C + 1
    """
    cover = is_nonantipodal_with_coset_cover(code, table)
    if not cover.nonantipodal:
        raise UnionNotLinearError(
            f"C(ρ) spans {cover.top_level_size} cosets: union not linear / not a coset"
        )
    if not cover.witness_is_all_ones or cover.witness == 0:
        raise UnionNotLinearError("C(ρ) is a single coset but not C + 1: union not linear / not a coset")
    ones = BitVector.ones(code.n)
    G_raw = code.G.append_rows([ones]) if code.G is not None else BitMatrix.from_vectors([ones])
    return from_generator(G_raw)


def extend_with_parity(code: LinearCode) -> LinearCode:
    """Append an overall parity position to every generator row."""
    n = code.n
    if code.G is None:
        return from_parity_check(BitMatrix.identity(n + 1))
    rows = [row | (parity(row) << n) for row in code.G.row_ints]
    return from_generator(BitMatrix(len(rows), n + 1, rows))


def coset_distance_profile_of_translate(code: LinearCode, table: CosetTable, t: BitVector) -> TranslateView:
    if t.length != code.n:
        raise DimensionMismatchError(f"Translate length {t.length} != code length {code.n}")
    return TranslateView(table, t)


def complement_weight_violations(code: LinearCode, table: CosetTable) -> List[int]:
    """
    Syndromes s with weight(s) + weight(s + syndrome(1)) != ρ.

    Empty for every non-antipodal completely regular code.
    """
    rho = covering_radius(table)
    shifted = table.weights[np.arange(table.size, dtype=np.int64) ^ code.all_ones_syndrome()]
    bad = np.nonzero(table.weights.astype(np.int64) + shifted != rho)[0]
    return bad.tolist()
