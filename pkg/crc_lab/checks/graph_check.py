"""
The coset-graph suite: size and valency, distance-regularity with the
code's own array, distance-transitivity, primitivity, antipodality, the
halved-cube labeling and folding onto the union graph.

Coset graphs are translation graphs, so everything is read off the BFS
layering from vertex 0; no V x V matrix is built.
"""

from typing import Any, Dict

from ..coset_graph import (
    code_vertex_action,
    distance_regular_check,
    fold,
    fold_isomorphism_check,
    halved_cube_isomorphism_check,
    layer_orbit_counts,
    translation_antipodal_classes,
    translation_primitivity_check,
)
from .base_check import BaseCheck


class GraphCheck(BaseCheck):
    name = 'graph'

    def run(self) -> Dict[str, Any]:
        ctx = self.context
        g, code, spec = ctx.graph, ctx.code, ctx.closed_form
        layers = ctx.layers
        result: Dict[str, Any] = {
            'vertices': g.vertex_count,
            'edges': g.edge_count,
            'warnings': g.warnings,
        }
        self.expect(f"{g.vertex_count} vertices, expected 2^{code.redundancy}", g.vertex_count == 1 << code.redundancy)
        regular = g.is_regular() and g.valency == code.n
        self.expect(f"valency is not n = {code.n}", regular)
        result['valency'] = g.valency if g.is_regular() else None

        rho = int(layers.max())
        result['diameter'] = rho
        self.expect(f"diameter {rho}, expected {spec.rho}", rho == spec.rho)

        drg = distance_regular_check(g, ctx.threads, sources=[0])
        result['drg'] = drg.to_json_dict()
        self.expect("not distance-regular", drg.is_distance_regular)
        self.expect("graph array differs from the code array", drg.array is not None and drg.array == ctx.profile.array)

        stabilizer = code_vertex_action(code, ctx.table, ctx.generators)
        orbits = layer_orbit_counts(g, stabilizer, layers)
        transitive = all(count == 1 for count in orbits.values())
        result['dt'] = transitive
        result['layer_orbits'] = [orbits[i] for i in sorted(orbits)]
        self.expect("pairs at some distance form more than one orbit", transitive)

        primitivity = translation_primitivity_check(g, layers)
        result['primitivity'] = primitivity.to_json_dict()
        classes = translation_antipodal_classes(g, layers)
        result['antipodal'] = classes is not None
        result['antipodal_class_sizes'] = sorted({len(c) for c in classes}) if classes is not None else None

        if ctx.is_base_family:
            self._check_base_family(result, classes, primitivity.primitive)
        else:
            self.expect("union graph is imprimitive", primitivity.primitive)
            if ctx.m >= 8:
                self.expect("union graph is antipodal", classes is None)
        return result

    def _check_base_family(self, result: Dict[str, Any], classes, primitive: bool) -> None:
        ctx = self.context
        g = ctx.graph
        halved = halved_cube_isomorphism_check(ctx.m, g)
        result['halved_cube'] = halved
        self.expect("labels do not realize the halved m-cube", halved)
        if ctx.m % 2:
            return
        self.expect("graph is primitive", not primitive)
        self.expect("graph is not antipodal with classes of size 2",
                    classes is not None and all(len(c) == 2 for c in classes))
        if ctx.m < 6 or classes is None:
            return
        folded = fold(g, classes=classes)
        agrees = fold_isomorphism_check(folded, ctx.code, ctx.table, ctx.union_code, ctx.union_graph)
        result['fold'] = {'vertices': folded.vertex_count, 'edges': folded.edge_count, 'isomorphic_to_union': agrees}
        self.expect("folded graph is not the union graph", agrees)
