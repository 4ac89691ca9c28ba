"""
Coset graphs and the graph-side certificates.

The coset graph of a linear code has the syndromes as vertices; s and s'
are adjacent iff s + s' is a column of H. Graphs are stored in compressed
sparse row form (numpy indptr/indices), so a graph on 2^20 vertices costs a
few hundred megabytes at most. Checks that need every pairwise distance
work from a dense distance matrix and are guarded separately.
"""

import sys
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel

from common_utils.parallel import parallel_map, split_range
from common_utils.union_find import find_orbits

from .code_model import CosetTable, LinearCode
from .errors import (
    DimensionMismatchError,
    DisconnectedGraphError,
    EnumerationGuardError,
    InvalidParameterError,
    LabelMismatchError,
    NonAutomorphismError,
    NotAntipodalError,
)
from .gf2_core import BitVector
from .regularity import IntersectionArray
from .transitivity import CosetAction, Permutation

DEFAULT_GRAPH_MAX_REDUNDANCY = 20

# Dense V x V distance matrices (int16) above this size are refused.
DISTANCE_MATRIX_MAX_VERTICES = 1 << 13

# Ordered-pair orbit closure runs over V^2 points in pure Python.
PAIR_ORBIT_MAX_VERTICES = 1 << 9

MULTIGRAPH_WARNING = "multigraph/loop collapse"


class Graph:
    """
    Simple undirected graph on 0..vertex_count-1.

    Attributes:
        vertex_count: number of vertices
        indptr, indices: CSR adjacency; neighbors of v are indices[indptr[v]:indptr[v+1]], sorted
        labels: optional per-vertex label ints (e.g. raw syndromes), label_bits wide
        classes: for a folded graph, the vertex classes of the original graph
        warnings: construction warnings
    """

    def __init__(self, vertex_count: int, indptr: np.ndarray, indices: np.ndarray,
                 labels: Optional[np.ndarray] = None, label_bits: int = 0,
                 classes: Optional[List[Tuple[int, ...]]] = None,
                 warnings: Optional[List[str]] = None):
        if vertex_count < 1:
            raise InvalidParameterError("A graph needs at least one vertex")
        if indptr.size != vertex_count + 1:
            raise DimensionMismatchError(f"indptr has {indptr.size} entries for {vertex_count} vertices")
        self.vertex_count = vertex_count
        self.indptr = indptr.astype(np.int64)
        self.indices = indices.astype(np.int64)
        self.labels = labels
        self.label_bits = label_bits
        self.classes = classes
        self.warnings = list(warnings or [])
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]], **kwargs) -> 'Graph':
        """Build from undirected edges; loops and repeated edges are dropped."""
        pairs = np.array([(u, v) for u, v in edges if u != v], dtype=np.int64).reshape(-1, 2)
        return cls._from_pair_array(vertex_count, pairs, **kwargs)

    @classmethod
    def _from_pair_array(cls, vertex_count: int, pairs: np.ndarray, **kwargs) -> 'Graph':
        both = np.concatenate([pairs, pairs[:, ::-1]]) if pairs.size else pairs
        keys = np.unique(both[:, 0] * vertex_count + both[:, 1]) if both.size else np.array([], dtype=np.int64)
        sources = keys // vertex_count
        indices = keys % vertex_count
        indptr = np.zeros(vertex_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(sources, minlength=vertex_count), out=indptr[1:])
        return cls(vertex_count, indptr, indices, **kwargs)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(self.indices[self.indptr[v]:self.indptr[v + 1]].tolist())

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def edge_count(self) -> int:
        return int(self.indices.size // 2)

    def is_regular(self) -> bool:
        degrees = self.degrees()
        return bool((degrees == degrees[0]).all())

    @property
    def valency(self) -> int:
        if not self.is_regular():
            raise InvalidParameterError("Graph is not regular")
        return int(self.degrees()[0])

    def neighbor_array(self) -> np.ndarray:
        """V x k neighbor matrix of a regular graph."""
        return self.indices.reshape(self.vertex_count, self.valency)

    def padded_neighbors(self) -> np.ndarray:
        """V x max-degree neighbor matrix, short rows padded with the vertex itself."""
        if self.is_regular() and self.valency:
            return self.neighbor_array()
        degrees = self.degrees()
        width = int(degrees.max()) if degrees.size else 0
        padded = np.repeat(np.arange(self.vertex_count, dtype=np.int64)[:, None], max(width, 1), axis=1)
        for v in np.nonzero(degrees)[0].tolist():
            padded[v, :degrees[v]] = self.indices[self.indptr[v]:self.indptr[v + 1]]
        return padded

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        sources = np.repeat(np.arange(self.vertex_count, dtype=np.int64), self.degrees())
        keep = sources < self.indices
        return list(zip(sources[keep].tolist(), self.indices[keep].tolist()))

    def edge_keys(self) -> np.ndarray:
        """Sorted u*V + v over both orientations of every edge."""
        sources = np.repeat(np.arange(self.vertex_count, dtype=np.int64), self.degrees())
        return sources * self.vertex_count + self.indices

    def adjacency_matrix(self) -> np.ndarray:
        _check_dense(self)
        matrix = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        sources = np.repeat(np.arange(self.vertex_count, dtype=np.int64), self.degrees())
        matrix[sources, self.indices] = True
        return matrix

    def label_string(self, v: int) -> str:
        if self.labels is None or self.label_bits < 1:
            return str(v)
        return str(BitVector(self.label_bits, int(self.labels[v])))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    def __repr__(self) -> str:
        return f"Graph(V={self.vertex_count}, E={self.edge_count})"


def _check_dense(g: Graph, max_vertices: Optional[int] = DISTANCE_MATRIX_MAX_VERTICES) -> None:
    if max_vertices is not None and g.vertex_count > max_vertices:
        raise EnumerationGuardError(
            f"{g.vertex_count} vertices is too large to enumerate all pairs "
            f"(limit {max_vertices})"
        )


def _linear_images(r: int, basis_images: Sequence[int]) -> np.ndarray:
    images = np.zeros(1 << r, dtype=np.int64)
    for i, value in enumerate(basis_images):
        block = 1 << i
        images[block:2 * block] = images[:block] ^ value
    return images


def build_coset_graph(code: LinearCode, table: Optional[CosetTable] = None,
                      max_redundancy: Optional[int] = DEFAULT_GRAPH_MAX_REDUNDANCY,
                      raw_labels: bool = False) -> Graph:
    """
    Translation graph on F_2^(n-k) with the columns of H as connection set.

    Args:
        code: The code
        table: Its coset table; required for raw_labels
        max_redundancy: Guard on n-k (None disables it)
        raw_labels: Label each vertex by the H_raw-syndrome of its coset
            (for C^(m): the even-weight m-vector of the coset)

    Raises:
        EnumerationGuardError: If n-k exceeds the guard
    """
    r = code.redundancy
    if max_redundancy is not None and r > max_redundancy:
        raise EnumerationGuardError(f"2^{r} vertices is too large to enumerate (graph guard n-k <= {max_redundancy})")
    size = 1 << r
    columns = code.column_syndromes
    connection = sorted(set(columns) - {0})
    warnings = []
    if len(connection) != len(columns):
        # A zero column is a loop, a repeated column a multi-edge; both collapse.
        warnings.append(MULTIGRAPH_WARNING)
        print(f"⚠️  {code!r} has d <= 2: {MULTIGRAPH_WARNING}", file=sys.stderr)
    if r >= 12:
        print(f"🔎 Building coset graph: {size} vertices, valency {len(connection)}", file=sys.stderr)

    vertices = np.arange(size, dtype=np.int64)
    neighbor_rows = np.sort(vertices[:, None] ^ np.array(connection, dtype=np.int64)[None, :], axis=1)
    indptr = np.arange(size + 1, dtype=np.int64) * len(connection)

    labels = vertices
    label_bits = r
    if raw_labels:
        if table is None:
            raise InvalidParameterError("raw_labels needs the coset table")
        label_bits = code.H_raw.rows if code.H_raw is not None else 0
        basis = [code.raw_syndrome(table.leader(1 << i)).bits for i in range(r)]
        labels = _linear_images(r, basis)
    return Graph(size, indptr, neighbor_rows.ravel(), labels=labels, label_bits=label_bits, warnings=warnings)


def _bfs(padded: np.ndarray, source: int) -> np.ndarray:
    dist = np.full(padded.shape[0], -1, dtype=np.int16)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        candidates = padded[frontier].ravel()
        candidates = np.unique(candidates[dist[candidates] < 0])
        dist[candidates] = level
        frontier = candidates
    return dist


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Distances from source; -1 marks unreachable vertices."""
    return _bfs(g.padded_neighbors(), source)


def all_pairs_distances(g: Graph, threads: Optional[int] = None,
                        max_vertices: Optional[int] = DISTANCE_MATRIX_MAX_VERTICES) -> np.ndarray:
    """
    Dense V x V int16 distance matrix, -1 for unreachable pairs.

    Raises:
        EnumerationGuardError: If V exceeds max_vertices
    """
    _check_dense(g, max_vertices)
    padded = g.padded_neighbors()
    spans = split_range(g.vertex_count, max(1, g.vertex_count // 64))
    rows = parallel_map(lambda span: np.stack([_bfs(padded, u) for u in span]), spans, threads)
    return np.concatenate(rows)


def _require_connected(distances: np.ndarray) -> None:
    if (distances < 0).any():
        raise DisconnectedGraphError("Graph is disconnected")


def diameter(g: Graph, distances: Optional[np.ndarray] = None) -> int:
    """
    Raises:
        DisconnectedGraphError: If some pair is unreachable
    """
    if distances is None:
        distances = all_pairs_distances(g)
    _require_connected(distances)
    return int(distances.max())


def distance_graph(g: Graph, i: int, distances: Optional[np.ndarray] = None) -> Graph:
    """Γ_i: same vertices, adjacent iff at distance i in g."""
    if distances is None:
        distances = all_pairs_distances(g)
    pairs = np.argwhere(np.triu(distances == i, k=1))
    return Graph._from_pair_array(g.vertex_count, pairs.astype(np.int64))


class GraphViolation(BaseModel):
    level: int
    c: int
    b: int
    source: int
    target: int
    reason: Optional[str] = None


class DistanceRegularReport(BaseModel):
    is_distance_regular: bool
    diameter: int
    array: Optional[IntersectionArray] = None
    violations: List[GraphViolation] = []

    def to_json_dict(self) -> Dict:
        return {
            'drg': self.is_distance_regular,
            'diameter': self.diameter,
            'b': list(self.array.b) if self.array is not None else None,
            'c': list(self.array.c) if self.array is not None else None,
            'violations': [v.model_dump() for v in self.violations],
        }


def _level_counts(neighbors: np.ndarray, k: int, span: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    """First (source, target) seen for each (level, c, b) key over the sources in span."""
    seen: Dict[int, Tuple[int, int]] = {}
    for u in span:
        dist = _bfs(neighbors, u).astype(np.int64)
        if (dist < 0).any():
            raise DisconnectedGraphError(f"Graph is disconnected: vertex {u} does not reach every vertex")
        around = dist[neighbors]
        here = dist[:, None]
        c = (around == here - 1).sum(axis=1)
        b = (around == here + 1).sum(axis=1)
        keys = (dist * (k + 1) + c) * (k + 1) + b
        values, first = np.unique(keys, return_index=True)
        for key, v in zip(values.tolist(), first.tolist()):
            seen.setdefault(key, (u, v))
    return seen


def distance_regular_check(g: Graph, threads: Optional[int] = None,
                           sources: Optional[Sequence[int]] = None) -> DistanceRegularReport:
    """
    BFS from every vertex; at each distance i the counts of neighbors at
    i-1 and i+1 must not depend on the pair.

    Args:
        g: The graph
        threads: Worker threads
        sources: BFS roots (default: every vertex). One root is enough when
            the automorphism group is vertex-transitive.

    Raises:
        DisconnectedGraphError: If g is disconnected
    """
    n = g.vertex_count
    if not g.is_regular():
        dist = bfs_distances(g, 0)
        _require_connected(dist)
        degrees = g.degrees()
        u = int(np.argmax(degrees != degrees[0]))
        return DistanceRegularReport(
            is_distance_regular=False, diameter=int(dist.max()),
            violations=[GraphViolation(level=0, c=0, b=int(degrees[u]), source=0, target=u,
                                       reason=f"vertex {u} has degree {int(degrees[u])}, vertex 0 has {int(degrees[0])}")],
        )

    k = g.valency
    neighbors = g.neighbor_array() if k else np.arange(n, dtype=np.int64)[:, None]
    roots = list(range(n)) if sources is None else [int(u) for u in sources]
    spans = [roots[s.start:s.stop] for s in split_range(len(roots), max(1, len(roots) // 32))]
    parts = parallel_map(lambda span: _level_counts(neighbors, k, span), spans, threads)
    seen: Dict[int, Tuple[int, int]] = {}
    for part in parts:
        for key, pair in part.items():
            seen.setdefault(key, pair)

    by_level: Dict[int, List[Tuple[int, int, Tuple[int, int]]]] = {}
    for key in sorted(seen):
        level, rest = divmod(key, (k + 1) ** 2)
        c, b = divmod(rest, k + 1)
        by_level.setdefault(level, []).append((c, b, seen[key]))
    rho = max(by_level)

    violations = [
        GraphViolation(level=level, c=c, b=b, source=pair[0], target=pair[1])
        for level, entries in sorted(by_level.items()) if len(entries) > 1
        for c, b, pair in entries
    ]
    if violations:
        return DistanceRegularReport(is_distance_regular=False, diameter=rho, violations=violations)
    array = IntersectionArray(
        rho=rho,
        b=[by_level[i][0][1] for i in range(rho)],
        c=[by_level[i][0][0] for i in range(1, rho + 1)],
        n=k,
    )
    return DistanceRegularReport(is_distance_regular=True, diameter=rho, array=array)


def code_vertex_action(code: LinearCode, table: CosetTable, generators: Sequence[Permutation]) -> List[np.ndarray]:
    """Vertex permutations of the coset graph induced by coordinate automorphisms."""
    action = CosetAction(code, table, generators)
    return [action.syndrome_map(index) for index in range(len(generators))]


def translation_generators(redundancy: int) -> List[np.ndarray]:
    """s -> s + e_i for each basis syndrome: automorphisms of every coset graph."""
    vertices = np.arange(1 << redundancy, dtype=np.int64)
    return [vertices ^ (1 << i) for i in range(redundancy)]


def check_automorphism(g: Graph, images: np.ndarray) -> None:
    """
    Raises:
        NonAutomorphismError: If images is not a permutation of the vertices
            mapping edges onto edges
    """
    images = np.asarray(images, dtype=np.int64)
    n = g.vertex_count
    if images.shape != (n,) or not np.array_equal(np.sort(images), np.arange(n)):
        raise NonAutomorphismError("Vertex map is not a permutation of the vertex set")
    keys = g.edge_keys()
    sources = keys // n
    mapped = images[sources] * n + images[g.indices]
    if not np.isin(mapped, keys).all():
        raise NonAutomorphismError("Vertex map sends an edge to a non-edge")


def pair_orbit_counts(g: Graph, generators: Sequence[np.ndarray], distances: Optional[np.ndarray] = None,
                      max_vertices: Optional[int] = PAIR_ORBIT_MAX_VERTICES) -> Dict[int, int]:
    """
    Number of orbits of <generators> on ordered pairs at each distance.

    Raises:
        NonAutomorphismError: If a generator is not an automorphism
        EnumerationGuardError: If V exceeds max_vertices
    """
    n = g.vertex_count
    if max_vertices is not None and n > max_vertices:
        raise EnumerationGuardError(f"{n}^2 ordered pairs is too large to enumerate")
    for images in generators:
        check_automorphism(g, images)
    if distances is None:
        distances = all_pairs_distances(g)
    _require_connected(distances)

    image_maps = (
        (np.asarray(images, dtype=np.int64)[:, None] * n + np.asarray(images, dtype=np.int64)[None, :]).ravel().tolist()
        for images in generators
    )
    labels = np.array(find_orbits(n * n, image_maps).canonical_labels(), dtype=np.int64)
    flat = distances.ravel()
    return {i: int(np.unique(labels[flat == i]).size) for i in range(int(flat.max()) + 1)}


def distance_transitive_check(g: Graph, generators: Sequence[np.ndarray], distances: Optional[np.ndarray] = None,
                              max_vertices: Optional[int] = PAIR_ORBIT_MAX_VERTICES) -> bool:
    """For every distance i, the ordered pairs at distance i form one orbit."""
    counts = pair_orbit_counts(g, generators, distances, max_vertices)
    return all(count == 1 for count in counts.values())


class PrimitivityReport(BaseModel):
    primitive: bool
    distance_graph_connected: List[bool]

    def to_json_dict(self) -> Dict:
        return {'primitive': self.primitive, 'distance_graph_connected': self.distance_graph_connected}


def primitivity_check(g: Graph, distances: Optional[np.ndarray] = None) -> PrimitivityReport:
    """Connectivity of each distance-i graph, i = 1..diameter."""
    if distances is None:
        distances = all_pairs_distances(g)
    rho = diameter(g, distances)
    connected = []
    for i in range(1, rho + 1):
        connected.append(nx.is_connected(distance_graph(g, i, distances).to_networkx()))
    return PrimitivityReport(primitive=all(connected), distance_graph_connected=connected)


def antipodal_classes(g: Graph, distances: Optional[np.ndarray] = None) -> Optional[List[Tuple[int, ...]]]:
    """
    Classes of "equal or at distance ρ", sorted by smallest member, or None
    when that relation is not an equivalence.
    """
    if distances is None:
        distances = all_pairs_distances(g)
    rho = diameter(g, distances)
    related = (distances == 0) | (distances == rho)
    classes: List[Tuple[int, ...]] = []
    assigned = np.zeros(g.vertex_count, dtype=bool)
    for u in range(g.vertex_count):
        if assigned[u]:
            continue
        members = np.nonzero(related[u])[0]
        if not (related[members] == related[u]).all():
            return None
        assigned[members] = True
        classes.append(tuple(members.tolist()))
    return classes


def antipodality_check(g: Graph, distances: Optional[np.ndarray] = None) -> bool:
    return antipodal_classes(g, distances) is not None


# Translation graphs: vertices are F_2^r as ints and N(v) = v + N(0). Every
# coset graph is one, so d(u, v) = d(0, u + v) and one BFS layering from 0
# replaces the dense distance matrix.

_TRANSLATION_CHUNK_ROWS = 1 << 14


def is_translation_graph(g: Graph) -> bool:
    """True iff V is a power of two and every neighborhood is a translate of N(0)."""
    n = g.vertex_count
    if n & (n - 1) or not g.is_regular():
        return False
    if g.valency == 0:
        return True
    connection = np.array(g.neighbors(0), dtype=np.int64)
    neighbors = g.neighbor_array()
    for span in split_range(n, max(1, n // _TRANSLATION_CHUNK_ROWS)):
        vertices = np.arange(span.start, span.stop, dtype=np.int64)
        rows = np.sort(vertices[:, None] ^ connection[None, :], axis=1)
        if not np.array_equal(rows, neighbors[span.start:span.stop]):
            return False
    return True


def layer_distances(g: Graph) -> np.ndarray:
    """
    Distances from vertex 0 of a connected translation graph.

    Raises:
        InvalidParameterError: If g is not a translation graph
        DisconnectedGraphError: If g is disconnected
    """
    if not is_translation_graph(g):
        raise InvalidParameterError(f"{g!r} is not a translation graph on F_2^r")
    layers = bfs_distances(g, 0)
    _require_connected(layers)
    return layers


def layer_orbit_counts(g: Graph, stabilizer: Sequence[np.ndarray],
                       layers: Optional[np.ndarray] = None) -> Dict[int, int]:
    """
    Number of orbits of <stabilizer> on each distance layer around vertex 0.

    Translations act transitively on the vertices, so the ordered pairs at
    distance i form a single orbit of <translations, stabilizer> whenever the
    stabilizer is transitive on layer i.

    Raises:
        NonAutomorphismError: If a generator moves vertex 0 or is not an automorphism
    """
    if layers is None:
        layers = layer_distances(g)
    for images in stabilizer:
        check_automorphism(g, images)
        if int(images[0]) != 0:
            raise NonAutomorphismError("Stabilizer generator moves vertex 0")
    image_maps = (np.asarray(images, dtype=np.int64).tolist() for images in stabilizer)
    labels = np.array(find_orbits(g.vertex_count, image_maps).canonical_labels(), dtype=np.int64)
    return {i: int(np.unique(labels[layers == i]).size) for i in range(int(layers.max()) + 1)}


def translation_distance_transitive_check(g: Graph, stabilizer: Sequence[np.ndarray],
                                          layers: Optional[np.ndarray] = None) -> bool:
    counts = layer_orbit_counts(g, stabilizer, layers)
    return all(count == 1 for count in counts.values())


def _span_rank(values: Sequence[int], full: int) -> int:
    basis: List[int] = []
    for x in values:
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
            basis.sort(reverse=True)
            if len(basis) == full:
                break
    return len(basis)


def translation_primitivity_check(g: Graph, layers: Optional[np.ndarray] = None) -> PrimitivityReport:
    """Γ_i is the translation graph of layer i, connected iff layer i spans F_2^r."""
    if layers is None:
        layers = layer_distances(g)
    r = g.vertex_count.bit_length() - 1
    connected = [
        _span_rank(np.nonzero(layers == i)[0].tolist(), r) == r
        for i in range(1, int(layers.max()) + 1)
    ]
    return PrimitivityReport(primitive=all(connected), distance_graph_connected=connected)


def translation_antipodal_classes(g: Graph, layers: Optional[np.ndarray] = None) -> Optional[List[Tuple[int, ...]]]:
    """
    Antipodal classes are the cosets of A = {0} ∪ layer ρ, provided A is closed
    under addition; None otherwise.
    """
    if layers is None:
        layers = layer_distances(g)
    rho = int(layers.max())
    members = np.nonzero((layers == 0) | (layers == rho))[0]
    in_a = np.zeros(g.vertex_count, dtype=bool)
    in_a[members] = True
    for a in members.tolist():
        if not in_a[members ^ a].all():
            return None
    classes: List[Tuple[int, ...]] = []
    assigned = np.zeros(g.vertex_count, dtype=bool)
    for v in range(g.vertex_count):
        if assigned[v]:
            continue
        coset = np.sort(members ^ v)
        assigned[coset] = True
        classes.append(tuple(coset.tolist()))
    return classes


def halved_cube_isomorphism_check(m: int, g: Graph) -> bool:
    """
    Identity-map isomorphism with the halved m-cube: vertices carry the
    even-weight m-vectors as labels, and two are adjacent iff their labels
    differ in exactly two coordinates.

    Raises:
        LabelMismatchError: If the labels are not exactly the even-weight m-vectors
    """
    if g.labels is None or g.label_bits != m:
        raise LabelMismatchError(f"Graph vertices are not labeled by length-{m} vectors")
    labels = np.asarray(g.labels, dtype=np.int64)
    weights = np.zeros(1 << m, dtype=np.int64)
    for bit in range(m):
        weights[1 << bit:1 << (bit + 1)] = weights[:1 << bit] + 1
    if (labels.size != 1 << (m - 1) or np.unique(labels).size != labels.size
            or (weights[labels] % 2).any()):
        raise LabelMismatchError(f"Labels are not the {1 << (m - 1)} even-weight vectors of length {m}")
    # Each label has exactly binom(m, 2) labels at distance 2, so matching
    # valency plus every edge at label distance 2 gives the same edge set.
    if not g.is_regular() or g.valency != comb(m, 2):
        return False
    sources = np.repeat(np.arange(g.vertex_count, dtype=np.int64), g.degrees())
    return bool((weights[labels[sources] ^ labels[g.indices]] == 2).all())


def fold(g: Graph, distances: Optional[np.ndarray] = None,
         classes: Optional[List[Tuple[int, ...]]] = None) -> Graph:
    """
    Quotient on antipodal classes; classes are adjacent iff some members are.

    Pass classes from translation_antipodal_classes to skip the dense distance matrix.

    Raises:
        NotAntipodalError: If g is not antipodal or a class has more than two vertices
    """
    if classes is None:
        classes = antipodal_classes(g, distances)
    if classes is None:
        raise NotAntipodalError("Graph is not antipodal")
    if any(len(members) > 2 for members in classes):
        raise NotAntipodalError(f"Antipodal classes of size {max(len(c) for c in classes)}: folding needs size <= 2")
    class_of = np.zeros(g.vertex_count, dtype=np.int64)
    for index, members in enumerate(classes):
        class_of[list(members)] = index
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    mapped = class_of[edges]
    mapped = mapped[mapped[:, 0] != mapped[:, 1]]
    return Graph._from_pair_array(len(classes), mapped, classes=classes)


def fold_isomorphism_check(folded: Graph, base_code: LinearCode, base_table: CosetTable,
                           union_code: LinearCode, union_graph: Graph) -> bool:
    """
    Check that fold(Γ_C) ≅ Γ_{C ∪ (C+1)} under the syndrome-pair map
    {s, s + syndrome(1)} -> union syndrome of leader(s), edge for edge.
    """
    if folded.classes is None:
        raise InvalidParameterError("Graph was not produced by fold()")
    images = []
    for members in folded.classes:
        targets = {union_code.syndrome(base_table.leader(s)) for s in members}
        if len(targets) != 1:
            return False
        images.append(targets.pop())
    images = np.array(images, dtype=np.int64)
    if folded.vertex_count != union_graph.vertex_count or np.unique(images).size != images.size:
        return False
    n = union_graph.vertex_count
    sources = np.repeat(np.arange(folded.vertex_count, dtype=np.int64), folded.degrees())
    mapped = np.sort(images[sources] * n + images[folded.indices])
    agree = np.array_equal(mapped, np.sort(union_graph.edge_keys()))
    if not agree:
        print(f"❌ Folded graph and union graph differ on edges ({folded!r} vs {union_graph!r})", file=sys.stderr)
    return bool(agree)


def write_edge_list(g: Graph) -> str:
    """One "u v" line per edge, zero-based, u < v."""
    return ''.join(f"{u} {v}\n" for u, v in g.edges())


def write_dot(g: Graph, name: str = 'coset_graph') -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f'  {v} [label="{g.label_string(v)}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return '\n'.join(lines) + '\n'

