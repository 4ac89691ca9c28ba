"""
Base class for verification checks.

A check reads what it needs from a shared VerificationContext, records
failed assertions and audit outcomes, and returns a JSON-ready dict.
"""

import sys
from abc import ABC, abstractmethod
from typing import Any, Dict, List

from ..spectra import AUDIT_AGREE, AUDIT_MISMATCH
from .context import VerificationContext


class BaseCheck(ABC):
    """Base class for one family of verifications (parameters, CR, graph, ...)."""

    name: str = 'check'

    def __init__(self, context: VerificationContext):
        self.context = context
        self.failures: List[str] = []
        self.audits: Dict[str, str] = {}

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, label: str, ok: bool) -> bool:
        """Record an assertion; failures are reported, not raised."""
        if not ok:
            self.failures.append(f"{self.name}: {label}")
            print(f"❌ {self.context.describe()} {self.name}: {label}", file=sys.stderr)
        return bool(ok)

    def audit(self, label: str, agrees: bool) -> str:
        """Record a formula audit; a mismatch never fails the run."""
        status = AUDIT_AGREE if agrees else AUDIT_MISMATCH
        self.audits[f"{self.name}.{label}"] = status
        if not agrees:
            print(f"⚠️  {self.context.describe()} {self.name}: {label} {status}", file=sys.stderr)
        return status

    def execute(self) -> Dict[str, Any]:
        print(f"🔎 {self.context.describe()}: running {self.name}", file=sys.stderr)
        result = self.run()
        if self.passed:
            print(f"✅ {self.context.describe()}: {self.name} passed", file=sys.stderr)
        return result

    @abstractmethod
    def run(self) -> Dict[str, Any]:
        """Run the verification. Must be implemented by subclasses."""
        raise NotImplementedError("run() must be implemented by subclass")
