"""Complete transitivity through the S_m action on cosets."""

from typing import Any, Dict

from ..transitivity import coset_orbit_count, translate_preserved
from .base_check import BaseCheck


class TransitivityCheck(BaseCheck):
    name = 'ct'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        report = coset_orbit_count(ctx.code, ctx.table, ctx.generators, ctx.coset_guard)
        self.expect(f"{report.orbits} orbits, expected {report.rho_plus_1}", report.orbits == report.rho_plus_1)
        self.expect("orbits are not the weight classes", report.ct)
        preserved = all(translate_preserved(ctx.code, tau) for tau in ctx.generators)
        self.expect("generator does not preserve C + 1", preserved)
        result = report.to_json_dict()
        result['translate_preserved'] = preserved
        return result
