"""
Shared fixtures.

Codes, coset tables and graphs are cached for the whole session; several
test modules walk the same m ranges.
"""

from functools import lru_cache

import pytest

from crc_lab.code_model import build_coset_table
from crc_lab.constructions import build_Cm, build_Cm_union
from crc_lab.coset_graph import all_pairs_distances, build_coset_graph
from crc_lab.regularity import intersection_profile


@lru_cache(maxsize=None)
def cm(m):
    return build_Cm(m)


@lru_cache(maxsize=None)
def cm_union(m):
    return build_Cm_union(m)


@lru_cache(maxsize=None)
def table_of(family, m):
    code = cm(m) if family == 'Cm' else cm_union(m)
    return build_coset_table(code)


@lru_cache(maxsize=None)
def profile_of(family, m):
    code = cm(m) if family == 'Cm' else cm_union(m)
    return intersection_profile(code, table_of(family, m))


@lru_cache(maxsize=None)
def graph_of(family, m):
    code = cm(m) if family == 'Cm' else cm_union(m)
    return build_coset_graph(code, table_of(family, m), raw_labels=family == 'Cm')


@lru_cache(maxsize=None)
def distances_of(family, m):
    return all_pairs_distances(graph_of(family, m))


class Suite:
    """Accessors over the session caches."""

    cm = staticmethod(cm)
    cm_union = staticmethod(cm_union)
    table = staticmethod(table_of)
    profile = staticmethod(profile_of)
    graph = staticmethod(graph_of)
    distances = staticmethod(distances_of)


@pytest.fixture(scope='session')
def suite():
    return Suite


@pytest.fixture(autouse=True)
def fixed_thread_count(monkeypatch):
    """Keep worker counts predictable regardless of the host."""
    monkeypatch.setenv('CRCLAB_THREADS', '2')
