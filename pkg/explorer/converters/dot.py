# Copyright 2024 The biposets authors.
# All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

"""DOT emission: covering edges for components that are partial orders."""

import networkx as nx
import pydot

from explorer.constants import DOT_COMPONENTS
from explorer.exceptions import UsageError
from explorer.managers.axioms import AxiomsManager

__all__ = ['emit_dot']

EDGE_STYLES = {
    1: {'style': 'solid', 'color': 'black'},
    2: {'style': 'dashed', 'color': 'blue'},
}

axioms_manager = AxiomsManager()


def _component_edges(rel):
    """(edges, reduced) for one relation, diagonal dropped"""
    strict = nx.DiGraph()
    strict.add_nodes_from(range(rel.n))
    strict.add_edges_from((i, j) for i, j in rel.pairs() if i != j)
    if axioms_manager.check_classical_por(rel).passed:
        return sorted(nx.transitive_reduction(strict).edges()), True
    return sorted(strict.edges()), False


def emit_dot(bp, component='both'):
    """Digraph text, rendered bottom-up; 'both' overlays two edge styles"""
    component = str(component)
    if component not in DOT_COMPONENTS:
        raise UsageError("component must be one of %s" % ', '.join(DOT_COMPONENTS))
    selected = (1, 2) if component == DOT_COMPONENTS[2] else (int(component),)
    graph = pydot.Dot('biposet', graph_type='digraph', rankdir='BT')
    for i, label in enumerate(bp.ground.labels):
        graph.add_node(pydot.Node('n%i' % i, label='"%s"' % label))

    raw = []
    for index in selected:
        edges, reduced = _component_edges(bp.d.r1 if index == 1 else bp.d.r2)
        if not reduced:
            raw.append(index)
        for i, j in edges:
            graph.add_edge(pydot.Edge('n%i' % i, 'n%i' % j, **EDGE_STYLES[index]))
    if raw:
        graph.set('comment', '"no transitive reduction for component %s: not a partial order"'
                          % ' and '.join(str(i) for i in raw))
    return graph.to_string()
