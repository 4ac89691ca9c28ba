"""
Verification checks package.

Each verification family has its own module; runner.py wires them into a
RunReport.
"""

from .base_check import BaseCheck
from .complement_check import ComplementWeightCheck, InverseArrayCheck
from .context import VerificationContext
from .graph_check import GraphCheck
from .parameters_check import ParametersCheck
from .regularity_check import RegularityCheck
from .runner import CHECK_CLASSES, RunReport, run_verification, selected_checks
from .spectra_check import SpectraCheck
from .transitivity_check import TransitivityCheck

__all__ = [
    'BaseCheck',
    'VerificationContext',
    'ParametersCheck',
    'RegularityCheck',
    'TransitivityCheck',
    'InverseArrayCheck',
    'ComplementWeightCheck',
    'GraphCheck',
    'SpectraCheck',
    'CHECK_CLASSES',
    'RunReport',
    'run_verification',
    'selected_checks',
]
