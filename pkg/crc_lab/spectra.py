"""
Exact coset-graph spectra from two independent sources.

character_spectrum: the coset graph is a translation graph on F_2^r, so its
eigenvalues are the character sums λ_u = Σ_h (-1)^(u·h) over the columns h of
H. A fast Walsh–Hadamard transform of the column histogram yields all of them.

array_spectrum: a distance-regular graph has exactly the eigenvalues of its
(ρ+1) x (ρ+1) tridiagonal intersection matrix. The characteristic polynomial
is factored over Q with sympy; linear factors give the integer eigenvalues and
anything else is reported as isolating intervals.
"""

from math import comb
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
import sympy
from pydantic import BaseModel

from .code_model import LinearCode, build_coset_table
from .constructions import build_Cm_union, closed_form_Cm_union
from .errors import EnumerationGuardError, InvalidParameterError
from .regularity import IntersectionArray, intersection_profile

DEFAULT_SPECTRUM_MAX_REDUNDANCY = 20

SOURCE_CHARACTER = 'character-sum'
SOURCE_INTERSECTION = 'intersection-matrix'

AUDIT_AGREE = 'agree'
AUDIT_MISMATCH = 'audit: mismatch'


class SpectrumReport(BaseModel):
    source: Literal['character-sum', 'intersection-matrix']
    # value -> multiplicity; multiplicity is None when the source cannot give it
    eigenvalues: Dict[int, Optional[int]]
    intervals: List[Tuple[str, str]] = []

    def eigenvalue_set(self) -> List[int]:
        """Distinct integer eigenvalues, largest first."""
        return sorted(self.eigenvalues, reverse=True)

    def total_multiplicity(self) -> Optional[int]:
        if any(mult is None for mult in self.eigenvalues.values()):
            return None
        return sum(self.eigenvalues.values())

    def weighted_sum(self) -> Optional[int]:
        if any(mult is None for mult in self.eigenvalues.values()):
            return None
        return sum(value * mult for value, mult in self.eigenvalues.items())

    def to_json_dict(self) -> Dict:
        return {
            'source': self.source,
            'eigs': [[value, self.eigenvalues[value]] for value in self.eigenvalue_set()],
            'intervals': [list(interval) for interval in self.intervals],
        }


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalized transform: out[u] = Σ_x (-1)^popcount(u & x) values[x]."""
    size = values.size
    if size & (size - 1):
        raise InvalidParameterError(f"Transform length {size} is not a power of two")
    out = values.astype(np.int64).copy()
    half = 1
    while half < size:
        blocks = out.reshape(-1, 2, half)
        low = blocks[:, 0, :].copy()
        high = blocks[:, 1, :]
        blocks[:, 0, :] = low + high
        blocks[:, 1, :] = low - high
        half *= 2
    return out


def character_spectrum(code: LinearCode,
                       max_redundancy: Optional[int] = DEFAULT_SPECTRUM_MAX_REDUNDANCY) -> SpectrumReport:
    """
    Eigenvalues and multiplicities of the coset graph of `code`.

    Raises:
        EnumerationGuardError: If n-k exceeds the guard
    """
    r = code.redundancy
    if max_redundancy is not None and r > max_redundancy:
        raise EnumerationGuardError(f"2^{r} characters is too large to enumerate")
    histogram = np.bincount(np.array(code.column_syndromes, dtype=np.int64), minlength=1 << r)
    sums = walsh_hadamard(histogram)
    values, counts = np.unique(sums, return_counts=True)
    return SpectrumReport(
        source=SOURCE_CHARACTER,
        eigenvalues={int(v): int(c) for v, c in zip(values.tolist(), counts.tolist())},
    )


def intersection_matrix(arr: IntersectionArray) -> sympy.Matrix:
    """Row l holds c_l, a_l, b_l in columns l-1, l, l+1."""
    size = arr.rho + 1

    def entry(i: int, j: int) -> int:
        if j == i - 1:
            return arr.c_at(i)
        if j == i:
            return arr.a_at(i)
        if j == i + 1:
            return arr.b_at(i)
        return 0

    return sympy.Matrix(size, size, entry)


def array_spectrum(arr: IntersectionArray) -> SpectrumReport:
    """
    Eigenvalues of the intersection matrix.

    Integer roots come from the linear factors of the characteristic
    polynomial. Roots of higher-degree factors are irrational and returned
    as rational isolating intervals.
    """
    x = sympy.Symbol('x')
    poly = intersection_matrix(arr).charpoly(x)
    _, factors = sympy.factor_list(poly.as_expr(), x)
    eigenvalues: Dict[int, Optional[int]] = {}
    intervals: List[Tuple[str, str]] = []
    for factor, _multiplicity in factors:
        factor_poly = sympy.Poly(factor, x)
        if factor_poly.degree() == 1:
            lead, const = factor_poly.all_coeffs()
            root = sympy.Rational(-const, lead)
            if root.q == 1:
                eigenvalues[int(root)] = None
                continue
        for (low, high), _ in factor_poly.intervals():
            intervals.append((str(low), str(high)))
    return SpectrumReport(source=SOURCE_INTERSECTION, eigenvalues=eigenvalues, intervals=sorted(intervals))


class EigenvalueAudit(BaseModel):
    m: int
    rho: int
    printed: List[int]
    observed_closed_form: List[int]
    character_sum: List[int]
    intersection_matrix: List[int]
    oracles_agree: bool
    printed_agrees: bool
    observed_agrees: bool
    status: str

    def to_json_dict(self) -> Dict:
        return self.model_dump()


def printed_eigenvalues(m: int) -> List[int]:
    """The closed forms as printed, evaluated for i = 0..⌊m/4⌋."""
    rho = closed_form_Cm_union(m).rho
    n = comb(m, 2)
    if m % 4 == 2:
        return [n - 16 * i * (rho + 1 - i) for i in range(rho + 1)]
    return [n - 8 * i * (2 * rho + 1 - i) for i in range(rho + 1)]


def observed_eigenvalues(m: int) -> List[int]:
    """binom(m,2) - 4i(m-2i), i = 0..⌊m/4⌋."""
    rho = closed_form_Cm_union(m).rho
    return [comb(m, 2) - 4 * i * (m - 2 * i) for i in range(rho + 1)]


def paper_eigenvalue_formula(m: int, character: Optional[SpectrumReport] = None,
                             intersection: Optional[SpectrumReport] = None) -> EigenvalueAudit:
    """
    Evaluate the printed eigenvalue formulas of Γ^[m] and compare them with both oracles.

    The formulas are data under audit; a disagreement is reported, never raised.

    Raises:
        InvalidParameterError: If m is odd or smaller than 6
    """
    spec = closed_form_Cm_union(m)
    if character is None or intersection is None:
        code = build_Cm_union(m)
        if character is None:
            character = character_spectrum(code)
        if intersection is None:
            report = intersection_profile(code, build_coset_table(code))
            intersection = array_spectrum(report.array if report.array is not None else spec.array)

    printed = printed_eigenvalues(m)
    observed = observed_eigenvalues(m)
    oracle = set(character.eigenvalue_set())
    printed_agrees = set(printed) == oracle
    return EigenvalueAudit(
        m=m,
        rho=spec.rho,
        printed=printed,
        observed_closed_form=observed,
        character_sum=character.eigenvalue_set(),
        intersection_matrix=intersection.eigenvalue_set(),
        oracles_agree=oracle == set(intersection.eigenvalue_set()) and not intersection.intervals,
        printed_agrees=printed_agrees,
        observed_agrees=set(observed) == oracle,
        status=AUDIT_AGREE if printed_agrees else AUDIT_MISMATCH,
    )
