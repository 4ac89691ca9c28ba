"""Complete regularity by exhaustive neighbor counts over all syndromes."""

from typing import Any, Dict

from ..code_model import build_coset_table, extend_with_parity
from ..constructions import closed_form_Cm
from ..errors import UnionNotRegularError
from ..regularity import compare_levels, intersection_profile, union_array, union_array_levels
from .base_check import BaseCheck


class RegularityCheck(BaseCheck):
    name = 'cr'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        report = ctx.profile
        spec = ctx.closed_form
        self.expect(f"not completely regular ({report.violation_count} violations)", report.is_completely_regular)
        result = report.to_json_dict()
        result['closed_form'] = str(spec.array)
        if report.array is None:
            return result
        self.expect(f"array {report.array} differs from closed form {spec.array}", report.array == spec.array)

        if not ctx.is_base_family:
            base_array = closed_form_Cm(ctx.m).array
            try:
                predicted = union_array(base_array)
            except UnionNotRegularError as e:
                self.expect(str(e), False)
                return result
            self.expect(f"array {report.array} differs from union prediction {predicted}", report.array == predicted)
            result['union_prediction'] = str(predicted)

            mismatches = compare_levels(report.array, union_array_levels(base_array, 'as_printed'))
            result['odd_line_as_printed'] = {
                'status': self.audit('odd_line_as_printed', not mismatches),
                'mismatches': mismatches,
            }

            extended = extend_with_parity(ctx.code)
            extended_report = intersection_profile(extended, build_coset_table(extended, ctx.coset_guard),
                                                   ctx.violation_cap, ctx.threads)
            result['extension'] = {
                'n': extended.n,
                'k': extended.k,
                'cr': extended_report.is_completely_regular,
                'array': str(extended_report.array) if extended_report.array is not None else None,
                'violation_count': extended_report.violation_count,
            }
        return result
