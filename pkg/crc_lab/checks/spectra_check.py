"""Character-sum and intersection-matrix spectra, plus the eigenvalue-formula audit."""

from typing import Any, Dict

from ..spectra import array_spectrum, character_spectrum, paper_eigenvalue_formula
from .base_check import BaseCheck


class SpectraCheck(BaseCheck):
    name = 'spectra'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        ctx.check_redundancy(ctx.graph_guard, 'graph')
        character = character_spectrum(ctx.code, ctx.graph_guard)
        result: Dict[str, Any] = {'character_sum': character.to_json_dict()}
        vertices = 1 << ctx.code.redundancy
        self.expect("multiplicities do not sum to the vertex count", character.total_multiplicity() == vertices)
        self.expect("eigenvalues do not sum to zero", character.weighted_sum() == 0)

        array = ctx.profile.array
        if not self.expect("no intersection array to take a spectrum of", array is not None):
            return result
        intersection = array_spectrum(array)
        result['intersection_matrix'] = intersection.to_json_dict()
        agree = not intersection.intervals and set(character.eigenvalue_set()) == set(intersection.eigenvalue_set())
        result['oracles_agree'] = agree
        self.expect("character-sum and intersection-matrix eigenvalues differ", agree)

        if not ctx.is_base_family:
            audit = paper_eigenvalue_formula(ctx.m, character, intersection)
            self.audit('eigenvalue_formula', audit.printed_agrees)
            result['eigenvalue_formula'] = audit.to_json_dict()
        return result
