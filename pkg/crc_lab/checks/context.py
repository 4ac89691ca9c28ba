"""
Shared, lazily built objects for one (family, m) verification run.

Codes, coset tables, graphs and distance matrices are expensive; each is
built at most once and reused by every check that asks for it.
"""

from functools import cached_property
from typing import List, Optional

import numpy as np

from ..code_model import CosetTable, LinearCode, build_coset_table
from ..config import Config
from ..constructions import FAMILY_CM, ClosedFormSpec, build_Cm, build_Cm_union, build_family, closed_form
from ..coset_graph import Graph, build_coset_graph, layer_distances
from ..errors import EnumerationGuardError
from ..regularity import RegularityReport, intersection_profile
from ..transitivity import Permutation, symmetric_coset_generators


class VerificationContext:
    """
    Everything the checks share for one code.

    With unsafe_large every enumeration guard is lifted.
    """

    def __init__(self, family: str, m: int, config: Config, unsafe_large: bool = False):
        self.family = family
        self.m = m
        self.config = config
        self.unsafe_large = unsafe_large
        self.guards = config.get_guards_config()
        self.threads = config.get_parallel_config()['threads']
        self.violation_cap = config.get_regularity_config()['violation_cap']
        # Validates the family and m before anything is built.
        self.closed_form: ClosedFormSpec = closed_form(family, m)

    def describe(self) -> str:
        return f"{self.family} m={self.m}"

    @property
    def is_base_family(self) -> bool:
        return self.family == FAMILY_CM

    def _guard(self, value: int) -> Optional[int]:
        return None if self.unsafe_large else value

    @property
    def coset_guard(self) -> Optional[int]:
        return self._guard(self.guards['coset_table_max_redundancy'])

    @property
    def graph_guard(self) -> Optional[int]:
        return self._guard(self.guards['graph_max_redundancy'])

    def check_redundancy(self, guard: Optional[int], what: str) -> None:
        """Refuse before construction when n-k is already known to be too large."""
        redundancy = self.closed_form.n - self.closed_form.k
        if guard is not None and redundancy > guard:
            raise EnumerationGuardError(
                f"{self.describe()}: n-k = {redundancy} exceeds the {what} guard {guard}, too large to enumerate"
            )

    @cached_property
    def code(self) -> LinearCode:
        self.check_redundancy(self.coset_guard, 'coset table')
        return build_family(self.family, self.m)

    @cached_property
    def table(self) -> CosetTable:
        return build_coset_table(self.code, self.coset_guard)

    @cached_property
    def profile(self) -> RegularityReport:
        return intersection_profile(self.code, self.table, self.violation_cap, self.threads)

    @cached_property
    def generators(self) -> List[Permutation]:
        return symmetric_coset_generators(self.code, self.m)

    @cached_property
    def base_code(self) -> LinearCode:
        """C^(m): the code itself for the base family, the half below the union otherwise."""
        return self.code if self.is_base_family else build_Cm(self.m)

    @cached_property
    def base_table(self) -> CosetTable:
        return self.table if self.is_base_family else build_coset_table(self.base_code, self.coset_guard)

    @cached_property
    def graph(self) -> Graph:
        self.check_redundancy(self.graph_guard, 'graph')
        return build_coset_graph(self.code, self.table, self.graph_guard, raw_labels=self.is_base_family)

    @cached_property
    def layers(self) -> np.ndarray:
        """Distances from vertex 0; d(u, v) = layers[u ^ v] on a coset graph."""
        return layer_distances(self.graph)

    @cached_property
    def union_code(self) -> LinearCode:
        return self.code if not self.is_base_family else build_Cm_union(self.m)

    @cached_property
    def union_graph(self) -> Graph:
        return self.graph if not self.is_base_family else build_coset_graph(self.union_code, max_redundancy=self.graph_guard)
