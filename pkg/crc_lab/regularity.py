"""
Complete-regularity verification and intersection-array algebra.

For a linear code the neighbor counts of a vector x (how many of its n
neighbors sit one level lower / higher in the distance partition) depend only
on the syndrome of x, so the check runs over the 2^(n-k) syndromes instead of
all 2^n vectors. The reduction is exact.
"""

from collections import Counter
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from common_utils.parallel import parallel_map, split_range

from .code_model import coset_distance_profile_of_translate, is_nonantipodal_with_coset_cover
from .errors import InvalidParameterError, UnionNotRegularError
from .gf2_core import BitVector

DEFAULT_VIOLATION_CAP = 100

OddRule = Literal['corrected', 'as_printed']


class IntersectionArray(BaseModel):
    """
    (b_0, ..., b_{ρ-1}; c_1, ..., c_ρ) with valency/length n.

    Entries are not validated on construction so that candidate arrays
    (e.g. from a printed formula) can be built and compared; call
    violations() / is_valid for the invariants.
    """

    model_config = ConfigDict(frozen=True)

    rho: int
    b: List[int]
    c: List[int]
    n: int

    def c_at(self, level: int) -> int:
        return 0 if level == 0 else self.c[level - 1]

    def b_at(self, level: int) -> int:
        return 0 if level == self.rho else self.b[level]

    def a_at(self, level: int) -> int:
        return self.n - self.b_at(level) - self.c_at(level)

    def levels(self) -> List[Tuple[int, int]]:
        """(c_l, b_l) for l = 0..ρ."""
        return [(self.c_at(l), self.b_at(l)) for l in range(self.rho + 1)]

    def violations(self) -> List[str]:
        problems = []
        if len(self.b) != self.rho or len(self.c) != self.rho:
            problems.append(f"expected {self.rho} entries in b and c, got {len(self.b)} and {len(self.c)}")
            return problems
        for i, value in enumerate(self.b):
            if value <= 0:
                problems.append(f"b_{i} = {value} is not positive")
        for i, value in enumerate(self.c, start=1):
            if value <= 0:
                problems.append(f"c_{i} = {value} is not positive")
        for level in range(self.rho + 1):
            if self.a_at(level) < 0:
                problems.append(f"a_{level} = {self.a_at(level)} is negative")
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def __str__(self) -> str:
        return f"({','.join(map(str, self.b))}; {','.join(map(str, self.c))})"


class Violation(BaseModel):
    syndrome: int
    level: int
    c: int
    b: int
    expected_c: int
    expected_b: int


class RegularityReport(BaseModel):
    is_completely_regular: bool
    rho: int
    array: Optional[IntersectionArray] = None
    violations: List[Violation] = []
    violation_count: int = 0

    def to_json_dict(self) -> Dict:
        return {
            'cr': self.is_completely_regular,
            'rho': self.rho,
            'b': list(self.array.b) if self.array is not None else None,
            'c': list(self.array.c) if self.array is not None else None,
            'violations': [v.model_dump() for v in self.violations],
        }


def _profile_chunk(weights: np.ndarray, columns: np.ndarray, span: range) -> Tuple[np.ndarray, np.ndarray]:
    s = np.arange(span.start, span.stop, dtype=np.int64)
    level = weights[s][:, None]
    neighbor_levels = weights[s[:, None] ^ columns[None, :]]
    down = (neighbor_levels == level - 1).sum(axis=1)
    up = (neighbor_levels == level + 1).sum(axis=1)
    return down, up


def neighbor_counts(table, threads: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Per-syndrome (c(s), b(s)) arrays for a coset table or translate view.

    c(s) = #{columns h : weight(s+h) = weight(s) - 1}
    b(s) = #{columns h : weight(s+h) = weight(s) + 1}
    """
    weights = table.weights.astype(np.int16)
    columns = np.array(table.column_syndromes, dtype=np.int64)
    spans = split_range(weights.size, max(1, weights.size // 4096))
    parts = parallel_map(lambda span: _profile_chunk(weights, columns, span), spans, threads)
    down = np.concatenate([p[0] for p in parts])
    up = np.concatenate([p[1] for p in parts])
    return down, up


def intersection_profile(code, table, violation_cap: int = DEFAULT_VIOLATION_CAP,
                         threads: Optional[int] = None) -> RegularityReport:
    """
    Check complete regularity level by level.

    Every level must show a single (c, b) pair. The most frequent pair of a
    level is taken as its reference; all other syndromes are violations
    (reported up to violation_cap, counted in full).
    """
    weights = table.weights.astype(np.int64)
    rho = int(weights.max())
    down, up = neighbor_counts(table, threads)

    reference: Dict[int, Tuple[int, int]] = {}
    violations: List[Violation] = []
    violation_count = 0
    for level in range(rho + 1):
        members = np.nonzero(weights == level)[0]
        pairs = Counter(zip(down[members].tolist(), up[members].tolist()))
        expected = min(pairs.items(), key=lambda item: (-item[1], item[0]))[0]
        reference[level] = expected
        if len(pairs) == 1:
            continue
        bad = members[(down[members] != expected[0]) | (up[members] != expected[1])]
        violation_count += int(bad.size)
        for s in bad.tolist():
            if len(violations) >= violation_cap:
                break
            violations.append(Violation(
                syndrome=s, level=level, c=int(down[s]), b=int(up[s]),
                expected_c=expected[0], expected_b=expected[1],
            ))

    if violation_count:
        return RegularityReport(is_completely_regular=False, rho=rho,
                                violations=violations, violation_count=violation_count)
    array = IntersectionArray(
        rho=rho,
        b=[reference[l][1] for l in range(rho)],
        c=[reference[l][0] for l in range(1, rho + 1)],
        n=len(table.column_syndromes),
    )
    return RegularityReport(is_completely_regular=True, rho=rho, array=array)


def inverse_array(arr: IntersectionArray) -> IntersectionArray:
    """b^r_i = c_{ρ-i}, c^r_i = b_{ρ-i}."""
    rho = arr.rho
    return IntersectionArray(
        rho=rho,
        b=[arr.c_at(rho - i) for i in range(rho)],
        c=[arr.b_at(rho - i) for i in range(1, rho + 1)],
        n=arr.n,
    )


def verify_inverse_array(code, table, threads: Optional[int] = None) -> bool:
    """
    Measure the profile of C + 1 and compare it with inverse_array of C's array.

    Raises:
        InvalidParameterError: If C(ρ) is not the coset C + 1
    """
    cover = is_nonantipodal_with_coset_cover(code, table)
    if not (cover.nonantipodal and cover.witness_is_all_ones):
        raise InvalidParameterError("verify_inverse_array needs a non-antipodal code with C(ρ) = C + 1")
    base = intersection_profile(code, table, threads=threads)
    if not base.is_completely_regular:
        return False
    view = coset_distance_profile_of_translate(code, table, BitVector.ones(code.n))
    translate = intersection_profile(code, view, threads=threads)
    return translate.is_completely_regular and translate.array == inverse_array(base.array)


def _check_union_compatible(arr: IntersectionArray) -> None:
    rho = arr.rho
    for j in range(1, rho + 1):
        if arr.c_at(j) != arr.b_at(rho - j):
            raise UnionNotRegularError(
                f"c_{j} = {arr.c_at(j)} differs from b_{rho - j} = {arr.b_at(rho - j)}: union not completely regular"
            )


def union_array_levels(arr: IntersectionArray, odd_rule: OddRule = 'corrected') -> List[Tuple[int, int]]:
    """
    Predicted (c^a_s, b^a_s), s = 0..⌊ρ/2⌋, for A = C ∪ (C + 1).

    odd_rule='as_printed' applies c^a = 0, b^a = b_s at the top level when ρ is
    odd; it exists so the mismatch against measured arrays can be shown.
    """
    _check_union_compatible(arr)
    rho = arr.rho
    rho_a = rho // 2
    levels = [(arr.c_at(s), arr.b_at(s)) for s in range(rho_a)]
    s = rho_a
    if rho % 2 == 0:
        levels.append((arr.c_at(s) + arr.b_at(s), 0))
    elif odd_rule == 'as_printed':
        levels.append((0, arr.b_at(s)))
    else:
        levels.append((arr.c_at(s), 0))
    return levels


def array_from_levels(levels: List[Tuple[int, int]], n: int) -> IntersectionArray:
    rho = len(levels) - 1
    return IntersectionArray(
        rho=rho,
        b=[levels[l][1] for l in range(rho)],
        c=[levels[l][0] for l in range(1, rho + 1)],
        n=n,
    )


def union_array(arr: IntersectionArray, odd_rule: OddRule = 'corrected') -> IntersectionArray:
    """
    Intersection array of C ∪ (C + 1) from the array of C.

    Raises:
        UnionNotRegularError: If the compatibility conditions fail or the top
            level keeps an outward count
    """
    levels = union_array_levels(arr, odd_rule)
    if levels[-1][1] != 0:
        raise UnionNotRegularError(f"b^a at the covering radius is {levels[-1][1]}, not 0")
    return array_from_levels(levels, arr.n)


def compare_levels(measured: IntersectionArray, levels: List[Tuple[int, int]]) -> List[Dict[str, int]]:
    """Per-level differences between a measured array and predicted (c, b) pairs."""
    mismatches = []
    observed = measured.levels()
    for level in range(max(len(observed), len(levels))):
        got = observed[level] if level < len(observed) else None
        want = levels[level] if level < len(levels) else None
        if got != want:
            mismatches.append({
                'level': level,
                'measured_c': got[0] if got else None,
                'measured_b': got[1] if got else None,
                'predicted_c': want[0] if want else None,
                'predicted_b': want[1] if want else None,
            })
    return mismatches
