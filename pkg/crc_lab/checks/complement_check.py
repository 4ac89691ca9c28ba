"""
Checks that only apply when C(ρ) = C + 1: the translate profile of C + 1
is the inverse array, and weight(s) + weight(s + syndrome(1)) = ρ.
"""

from typing import Any, Dict

from ..code_model import complement_weight_violations, is_nonantipodal_with_coset_cover
from ..regularity import inverse_array, verify_inverse_array
from .base_check import BaseCheck

SAMPLE_SIZE = 10


def _applicable(ctx) -> bool:
    cover = is_nonantipodal_with_coset_cover(ctx.code, ctx.table)
    return cover.nonantipodal and cover.witness_is_all_ones


class InverseArrayCheck(BaseCheck):
    name = 'inverse_array'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        if not _applicable(ctx):
            return {'applicable': False}
        ok = verify_inverse_array(ctx.code, ctx.table, ctx.threads)
        self.expect("profile of C + 1 is not the inverse array", ok)
        result: Dict[str, Any] = {'applicable': True, 'ok': ok}
        if ctx.profile.array is not None:
            result['inverse_array'] = str(inverse_array(ctx.profile.array))
        return result


class ComplementWeightCheck(BaseCheck):
    name = 'lemma32'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        if not _applicable(ctx):
            return {'applicable': False}
        bad = complement_weight_violations(ctx.code, ctx.table)
        self.expect(f"{len(bad)} syndromes with weight(s) + weight(s + syndrome(1)) != ρ", not bad)
        return {'applicable': True, 'violations': len(bad), 'sample': bad[:SAMPLE_SIZE]}
