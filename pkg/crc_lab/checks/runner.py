"""
Runs a selection of checks for one (family, m) and assembles the RunReport.
"""

import sys
import time
from typing import Any, Dict, List, Optional, Sequence, Type

from pydantic import BaseModel

from ..errors import InvalidParameterError
from .base_check import BaseCheck
from .complement_check import ComplementWeightCheck, InverseArrayCheck
from .context import VerificationContext
from .graph_check import GraphCheck
from .parameters_check import ParametersCheck
from .regularity_check import RegularityCheck
from .spectra_check import SpectraCheck
from .transitivity_check import TransitivityCheck

# Run order; the parameters check always runs first.
CHECK_CLASSES: Dict[str, Type[BaseCheck]] = {
    'parameters': ParametersCheck,
    'cr': RegularityCheck,
    'ct': TransitivityCheck,
    'inverse_array': InverseArrayCheck,
    'lemma32': ComplementWeightCheck,
    'graph': GraphCheck,
    'spectra': SpectraCheck,
}


class RunReport(BaseModel):
    family: str
    m: int
    passed: bool
    failures: List[str]
    audits: Dict[str, str]
    results: Dict[str, Dict[str, Any]]
    timing: Optional[Dict[str, float]] = None

    def to_json_dict(self) -> Dict[str, Any]:
        report = self.model_dump()
        if self.timing is None:
            report.pop('timing')
        return report


def selected_checks(names: Sequence[str]) -> List[str]:
    unknown = [name for name in names if name not in CHECK_CLASSES]
    if unknown:
        raise InvalidParameterError(f"Unknown checks {unknown}. Available: {list(CHECK_CLASSES)}")
    return ['parameters'] + [name for name in CHECK_CLASSES if name in names and name != 'parameters']


def run_verification(context: VerificationContext, names: Sequence[str], timing: bool = False) -> RunReport:
    """
    Run the named checks in their fixed order.

    Timings always go to stderr; they enter the report only when requested,
    so default reports are reproducible byte for byte.
    """
    results: Dict[str, Dict[str, Any]] = {}
    failures: List[str] = []
    audits: Dict[str, str] = {}
    elapsed: Dict[str, float] = {}
    for name in selected_checks(names):
        check = CHECK_CLASSES[name](context)
        started = time.perf_counter()
        results[name] = check.execute()
        elapsed[name] = round(time.perf_counter() - started, 3)
        print(f"⏱️  {context.describe()}: {name} took {elapsed[name]:.3f}s", file=sys.stderr)
        failures.extend(check.failures)
        audits.update(check.audits)
    return RunReport(
        family=context.family,
        m=context.m,
        passed=not failures,
        failures=failures,
        audits=audits,
        results=results,
        timing=elapsed if timing else None,
    )
