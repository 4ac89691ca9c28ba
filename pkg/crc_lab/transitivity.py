"""
Coordinate permutations, the induced action on cosets, and orbit counting.

S_m enters through two generators (a transposition and an m-cycle) acting on
{0..m-1}; their images on the lexicographic pair positions are coordinate
permutations of C^(m) and C^[m].
"""

import sys
from typing import Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from common_utils.union_find import find_orbits

from .code_model import CosetTable, LinearCode, covering_radius
from .constructions import PairIndex
from .errors import EnumerationGuardError, InvalidParameterError, NonAutomorphismError
from .gf2_core import BitVector

DEFAULT_MAX_REDUNDANCY = 24


class Permutation:
    """A bijection of 0..degree-1, stored by images."""

    __slots__ = ('image',)

    def __init__(self, image: Sequence[int]):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(len(image))):
            raise InvalidParameterError(f"Not a permutation: {image}")
        self.image = image

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> 'Permutation':
        image = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                image[a] = b
        return cls(image)

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: 'Permutation') -> 'Permutation':
        """self ∘ other: apply other first."""
        if other.degree != self.degree:
            raise InvalidParameterError("Degree mismatch in composition")
        return Permutation([self.image[other.image[x]] for x in range(self.degree)])

    def inverse(self) -> 'Permutation':
        inv = [0] * self.degree
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(inv)

    def order(self) -> int:
        power, k = self, 1
        identity = Permutation.identity(self.degree)
        while power != identity:
            power = self.compose(power)
            k += 1
        return k

    def apply_to_vector(self, x: BitVector) -> BitVector:
        """Coordinate j of x moves to position image[j]."""
        if x.length != self.degree:
            raise InvalidParameterError(f"Vector length {x.length} != permutation degree {self.degree}")
        bits = 0
        for j in x.support():
            bits |= 1 << self.image[j]
        return BitVector(x.length, bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"


def symmetric_group_generators(m: int) -> List[Permutation]:
    """Transposition (0 1) and the m-cycle (0 1 ... m-1)."""
    return [
        Permutation.from_cycles(m, (0, 1)),
        Permutation.from_cycles(m, tuple(range(m))),
    ]


def induced_pair_permutation(m: int, sigma: Permutation) -> Permutation:
    """Column {i, j} goes to column {σ(i), σ(j)} under the lexicographic pair index."""
    if sigma.degree != m:
        raise InvalidParameterError(f"sigma has degree {sigma.degree}, expected {m}")
    index = PairIndex(m)
    return Permutation([index.position(sigma(i), sigma(j)) for i, j in index.pairs])


def induced_symmetric_generators(m: int) -> List[Permutation]:
    return [induced_pair_permutation(m, sigma) for sigma in symmetric_group_generators(m)]


def preserves_code(code: LinearCode, tau: Permutation) -> bool:
    """True iff every generator row, permuted by tau, is still a codeword."""
    if tau.degree != code.n:
        raise InvalidParameterError(f"Permutation degree {tau.degree} != code length {code.n}")
    if code.G is None:
        return True
    return all(code.contains(tau.apply_to_vector(row)) for row in code.G.row_vectors())


def translate_preserved(code: LinearCode, tau: Permutation) -> bool:
    """A code automorphism also maps C + 1 onto itself (tau fixes the all-ones vector)."""
    ones = BitVector.ones(code.n)
    return preserves_code(code, tau) and code.syndrome(tau.apply_to_vector(ones)) == code.all_ones_syndrome()


class CosetAction:
    """
    Action of code automorphisms on syndromes: s -> syndrome(τ(leader(s))).

    Generators are validated on construction; a permutation outside Aut(C)
    does not map cosets to cosets.
    """

    def __init__(self, code: LinearCode, table: CosetTable, generators: Sequence[Permutation]):
        for tau in generators:
            if not preserves_code(code, tau):
                raise NonAutomorphismError(f"{tau!r} does not preserve {code!r}")
        self.code = code
        self.table = table
        self.generators = list(generators)
        self._columns = code.column_syndromes
        self._images: Dict[int, np.ndarray] = {}

    def apply(self, tau: Permutation, s: int) -> int:
        out = 0
        for j in self.table.leader(s).support():
            out ^= self._columns[tau(j)]
        return out

    def syndrome_map(self, index: int) -> np.ndarray:
        """Image of every syndrome under generator `index`, cached."""
        if index not in self._images:
            tau = self.generators[index]
            # Linear on syndromes: the image of a basis vector fixes the whole map.
            r = self.code.redundancy
            basis_images = [self.apply(tau, 1 << i) for i in range(r)]
            images = np.zeros(1 << r, dtype=np.int64)
            for i, value in enumerate(basis_images):
                block = 1 << i
                images[block:2 * block] = images[:block] ^ value
            self._images[index] = images
        return self._images[index]


class OrbitReport(BaseModel):
    orbits: int
    rho_plus_1: int
    ct: bool
    orbit_sizes: List[int]
    orbit_weights: List[List[int]]
    labels: Optional[List[int]] = None

    def to_json_dict(self) -> Dict:
        return {
            'orbits': self.orbits,
            'rho_plus_1': self.rho_plus_1,
            'ct': self.ct,
            'orbit_sizes': self.orbit_sizes,
        }


def coset_orbit_count(code: LinearCode, table: CosetTable, generators: Sequence[Permutation],
                      max_redundancy: Optional[int] = DEFAULT_MAX_REDUNDANCY) -> OrbitReport:
    """
    Orbits of <generators> on all syndromes, labeled by their smallest syndrome.

    Raises:
        NonAutomorphismError: If a generator does not preserve the code
        EnumerationGuardError: If n-k exceeds the guard
    """
    if max_redundancy is not None and code.redundancy > max_redundancy:
        raise EnumerationGuardError(f"2^{code.redundancy} cosets is too large to enumerate")
    action = CosetAction(code, table, generators)
    image_maps = (action.syndrome_map(index).tolist() for index in range(len(generators)))
    labels = find_orbits(table.size, image_maps).canonical_labels()

    by_label: Dict[int, List[int]] = {}
    for s, label in enumerate(labels):
        by_label.setdefault(label, []).append(s)
    representatives = sorted(by_label)
    rho = covering_radius(table)
    orbit_weights = [sorted({table.weight(s) for s in by_label[rep]}) for rep in representatives]
    # Every weight class is nonempty, so rho+1 single-weight orbits cover each class once.
    ct = len(representatives) == rho + 1 and all(len(w) == 1 for w in orbit_weights)
    return OrbitReport(
        orbits=len(representatives),
        rho_plus_1=rho + 1,
        ct=ct,
        orbit_sizes=[len(by_label[rep]) for rep in representatives],
        orbit_weights=orbit_weights,
        labels=labels,
    )


def is_completely_transitive(code: LinearCode, table: CosetTable, generators: Sequence[Permutation],
                             max_redundancy: Optional[int] = DEFAULT_MAX_REDUNDANCY) -> bool:
    """
    ρ+1 orbits, each exactly one weight class. With generators inside Aut(C)
    this certifies complete transitivity of the full automorphism group.
    """
    return coset_orbit_count(code, table, generators, max_redundancy).ct


def dual_low_weight_census(code: LinearCode, weight_target: int,
                           max_redundancy: Optional[int] = DEFAULT_MAX_REDUNDANCY) -> List[BitVector]:
    """
    All dual codewords (row space of H) of the target weight, in enumeration order.

    Raises:
        EnumerationGuardError: If 2^(n-k) dual codewords exceed the guard
    """
    r = code.redundancy
    if max_redundancy is not None and r > max_redundancy:
        raise EnumerationGuardError(f"2^{r} dual codewords is too large to enumerate")
    if code.H is None:
        return [BitVector.zeros(code.n)] if weight_target == 0 else []
    words = [0]
    for row in code.H.row_ints:
        words += [w ^ row for w in words]
    if r >= 16:
        print(f"🔎 Scanned {len(words)} dual codewords", file=sys.stderr)
    return [BitVector(code.n, w) for w in sorted(words) if bin(w).count('1') == weight_target]


def symmetric_coset_generators(code: LinearCode, m: int) -> List[Permutation]:
    """Induced S_m generators on the coordinates of a code of length m(m-1)/2."""
    gens = induced_symmetric_generators(m)
    if gens[0].degree != code.n:
        raise InvalidParameterError(f"Code length {code.n} is not m(m-1)/2 for m={m}")
    return gens
