"""
Measured parameters against the closed forms, plus the structural facts
behind them: where the covering set sits and which low-weight words exist.
"""

from typing import Any, Dict

from ..code_model import (
    codeword_census,
    covering_radius,
    is_nonantipodal_with_coset_cover,
    minimum_distance_upto,
)
from ..constructions import build_Hm
from ..transitivity import dual_low_weight_census
from .base_check import BaseCheck


class ParametersCheck(BaseCheck):
    """(n, k, d, ρ), antipodality, dual weight-(m-1) census, weight-3 census."""

    name = 'parameters'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        code, table, spec = ctx.code, ctx.table, ctx.closed_form
        measured = {
            'n': code.n,
            'k': code.k,
            'd': minimum_distance_upto(code, 4),
            'rho': covering_radius(table),
        }
        expected = {'n': spec.n, 'k': spec.k, 'd': spec.d, 'rho': spec.rho}
        for key, value in expected.items():
            self.expect(f"{key} = {measured[key]}, expected {value}", measured[key] == value)

        cover = is_nonantipodal_with_coset_cover(code, table)
        result: Dict[str, Any] = {
            'measured': measured,
            'closed_form': expected,
            'covering_set': {
                'cosets': cover.top_level_size,
                'is_all_ones_coset': cover.witness_is_all_ones,
            },
        }

        if ctx.is_base_family:
            even = ctx.m % 2 == 0
            self.expect("single weight-ρ coset iff m is even", cover.nonantipodal == even)
            if even:
                self.expect("weight-ρ coset is C + 1", cover.witness_is_all_ones)
            if ctx.m >= 4:
                words = dual_low_weight_census(code, ctx.m - 1, ctx.coset_guard)
                rows = set(build_Hm(ctx.m).row_vectors())
                self.expect(f"{len(words)} dual words of weight m-1, expected {ctx.m}", len(words) == ctx.m)
                self.expect("dual weight-(m-1) words are the rows of H_m", set(words) == rows)
                result['dual_weight_m_minus_1'] = len(words)
        else:
            union_words = codeword_census(code, 3)
            base_words = codeword_census(ctx.base_code, 3)
            inside = all(ctx.base_code.contains(word) for word in union_words)
            # Only for m = 6 does C + 1 reach weight 3 (ρ of C^(m) is m/2).
            self.expect("weight-3 words outside C^(m) only for m = 6", inside == (ctx.m > 6))
            result['weight_3_words'] = {'union': len(union_words), 'base': len(base_words)}
        return result
