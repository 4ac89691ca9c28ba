"""
The concrete code families: H_m, C^(m) and C^[m] = C^(m) ∪ C^(m)(ρ),
together with their closed-form parameters and intersection arrays.

Columns of H_m are indexed by the 2-subsets of {0..m-1} in lexicographic order;
every other module relies on that ordering.
"""

import itertools
from math import comb
from typing import Dict, List, Tuple

from pydantic import BaseModel

from .code_model import LinearCode, build_coset_table, from_generator, from_parity_check, union_with_covering_set
from .errors import InvalidParameterError
from .gf2_core import BitMatrix, BitVector, same_row_space
from .regularity import IntersectionArray

FAMILY_CM = 'Cm'
FAMILY_CM_UNION = 'Cm-union'
FAMILIES = (FAMILY_CM, FAMILY_CM_UNION)


class PairIndex:
    """Bijection between column positions and 2-subsets {i, j} (i < j) of {0..m-1}."""

    def __init__(self, m: int):
        if m < 3:
            raise InvalidParameterError(f"m must be >= 3, got {m}")
        self.m = m
        self.pairs: List[Tuple[int, int]] = list(itertools.combinations(range(m), 2))
        self._position: Dict[Tuple[int, int], int] = {p: idx for idx, p in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def position(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self._position[(i, j)]


class ClosedFormSpec(BaseModel):
    n: int
    k: int
    d: int
    rho: int
    array: IntersectionArray


def _check_m(m: int) -> None:
    if m < 3:
        raise InvalidParameterError(f"m must be >= 3, got {m}")


def _check_union_m(m: int) -> None:
    if m % 2:
        raise InvalidParameterError(f"m must be even (C^({m}) is antipodal, union not a coset extension)")
    if m < 6:
        raise InvalidParameterError(f"m must be >= 6 for the union family, got {m}")


def build_Hm(m: int) -> BitMatrix:
    """m x m(m-1)/2 matrix whose columns are the weight-2 vectors of length m."""
    index = PairIndex(m)
    columns = [(1 << i) | (1 << j) for i, j in index.pairs]
    return BitMatrix.from_columns(m, columns)


def build_Cm(m: int) -> LinearCode:
    _check_m(m)
    return from_parity_check(build_Hm(m))


def systematic_parity_check(m: int) -> BitMatrix:
    """(I_{m-1} | H_{m-1}): the parity check of C^(m) with the pairs {i, m-1} first."""
    _check_m(m)
    H_small = build_Hm(m - 1) if m - 1 >= 3 else BitMatrix.from_columns(2, [0b11])
    return BitMatrix.identity(m - 1).hstack(H_small)


def block_union_generator(m: int) -> BitMatrix:
    """
    The block generator (I_{k-1} | H_{m-1}^T) over (0...0 | 1...1) of C^[m],
    in the coordinate order of systematic_parity_check(m).
    """
    _check_union_m(m)
    H_small = build_Hm(m - 1)
    top = H_small.transpose().hstack(BitMatrix.identity(H_small.cols))
    n = top.cols
    ones = BitVector.ones(n)
    return top.append_rows([ones])


def systematic_to_lexicographic(m: int) -> List[int]:
    """
    Coordinate map from the systematic order to lexicographic pair order.

    Systematic position i < m-1 is the pair {i, m-1}; position m-1+p is the
    p-th pair of {0..m-2}.
    """
    index = PairIndex(m)
    small = PairIndex(m - 1) if m - 1 >= 3 else None
    mapping = [index.position(i, m - 1) for i in range(m - 1)]
    small_pairs = small.pairs if small is not None else [(0, 1)]
    mapping.extend(index.position(i, j) for i, j in small_pairs)
    return mapping


def relabel_columns(M: BitMatrix, mapping: List[int]) -> BitMatrix:
    """Move column j of M to column mapping[j]."""
    rows = []
    for row in M.row_ints:
        out = 0
        for j, target in enumerate(mapping):
            if (row >> j) & 1:
                out |= 1 << target
        rows.append(out)
    return BitMatrix(M.rows, M.cols, rows)


def build_Cm_union(m: int) -> LinearCode:
    """
    C^[m] built as C^(m) ∪ (C^(m) + 1), cross-checked against the block form
    generator by row-space equality.

    Raises:
        InvalidParameterError: If m is odd or smaller than 6
        AssertionError: If the two constructions disagree
    """
    _check_union_m(m)
    base = build_Cm(m)
    union = union_with_covering_set(base, build_coset_table(base))
    block = relabel_columns(block_union_generator(m), systematic_to_lexicographic(m))
    if not same_row_space(union.G, block):
        raise AssertionError(f"C^[{m}] from the covering set differs from the block-form generator")
    return union


def build_family(family: str, m: int) -> LinearCode:
    if family == FAMILY_CM:
        return build_Cm(m)
    if family == FAMILY_CM_UNION:
        return build_Cm_union(m)
    raise InvalidParameterError(f"Unknown family {family!r}. Available: {list(FAMILIES)}")


def closed_form_Cm(m: int) -> ClosedFormSpec:
    _check_m(m)
    n = comb(m, 2)
    rho = m // 2
    b = [comb(m - 2 * i, 2) for i in range(rho)]
    c = [comb(2 * i, 2) for i in range(1, rho + 1)]
    return ClosedFormSpec(n=n, k=n - m + 1, d=3, rho=rho,
                          array=IntersectionArray(rho=rho, b=b, c=c, n=n))


def closed_form_Cm_union(m: int) -> ClosedFormSpec:
    _check_union_m(m)
    n = comb(m, 2)
    rho = m // 4
    b = [comb(m - 2 * i, 2) for i in range(rho)]
    c = [comb(2 * i, 2) for i in range(1, rho + 1)]
    if m % 4 == 0:
        c[-1] = 2 * comb(2 * rho, 2)
    return ClosedFormSpec(n=n, k=n - m + 2, d=3, rho=rho,
                          array=IntersectionArray(rho=rho, b=b, c=c, n=n))


def closed_form(family: str, m: int) -> ClosedFormSpec:
    if family == FAMILY_CM:
        return closed_form_Cm(m)
    if family == FAMILY_CM_UNION:
        return closed_form_Cm_union(m)
    raise InvalidParameterError(f"Unknown family {family!r}. Available: {list(FAMILIES)}")
