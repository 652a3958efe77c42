from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..cdc.cover import intersection_stats


@dataclass(frozen=True)
class CycleAdjacencyGraph:
    """
    One node per cycle (or label) of a cover, an edge whenever two of them share a host edge. The degree of a node
    is the sigma value of its cycle. shared maps a sorted node pair to the host edges carrying it, through lists
    the nodes met at every host vertex.
    """
    graph: nx.Graph
    shared: dict
    through: tuple

    def degrees(self):
        return np.array([self.graph.degree(i) for i in sorted(self.graph.nodes)], dtype=int)

    def is_regular(self, degree):
        return bool((self.degrees() == degree).all())

    def triangles(self):
        return {frozenset(clique) for clique in nx.enumerate_all_cliques(self.graph) if len(clique) == 3}

    def vertex_triangles(self):
        """For every host vertex, the set of the cycles through it."""
        return list(self.through)

    def has_vertex_triangle_bijection(self):
        """Whether host vertices and triangles of this graph correspond one to one."""
        per_vertex = self.vertex_triangles()
        return len(set(per_vertex)) == len(per_vertex) and set(per_vertex) == self.triangles()

    def stray_triangles(self):
        """
        Triangles whose three shared edges have no common endpoint. Once every pair sits on a single edge, no later
        edge can turn such a triangle into the three cycles of one vertex.
        """
        stray = []
        for triangle in self.triangles():
            a, b, c = sorted(triangle)
            ends = [{v for e in self.shared[pair] for v in e} for pair in ((a, b), (b, c), (a, c))]
            if not ends[0] & ends[1] & ends[2]:
                stray.append(triangle)
        return stray


def build_cycle_adjacency_graph(graph, cdc):
    """
    :param graph: host Graph
    :param cdc: valid CDC of graph
    :return: CycleAdjacencyGraph
    """
    mu, _ = intersection_stats(cdc)
    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(cdc.t))
    adjacency.add_edges_from((int(i), int(j)) for i, j in np.argwhere(np.triu(mu, 1) > 0))
    shared = {}
    for e, indices in cdc.edge_cover().items():
        shared.setdefault(tuple(sorted(indices)), []).append(e)
    through = [set() for _ in range(graph.n)]
    for index, cycle in enumerate(cdc.cycles):
        for v in cycle:
            through[v].add(index)
    return CycleAdjacencyGraph(adjacency, shared, tuple(frozenset(t) for t in through))


def configuration_adjacency(cfg):
    """
    The adjacency graph of the labels of a possibly partial configuration.
    :param cfg: CycleConfiguration
    :return: CycleAdjacencyGraph over the labels of cfg
    """
    adjacency = nx.Graph()
    adjacency.add_nodes_from(cfg.labels())
    shared = {}
    for e, pair in zip(cfg.graph.edges(), cfg.pairs):
        adjacency.add_edge(*pair)
        shared.setdefault(pair, []).append(e)
    through = tuple(frozenset(cfg.labels_at(v)) for v in range(cfg.graph.n))
    return CycleAdjacencyGraph(adjacency, shared, through)
