from dataclasses import dataclass

import networkx as nx

from ..util import (SelfLoopException, DuplicateEdgeException, VertexRangeException, DegreeExceededException,
                    CycleFormatException)

MAX_DEGREE = 3


def edge_key(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph of maximum degree 3 on vertices 0..n-1.

    Instances are immutable; adjacency is a tuple of sorted neighbor tuples. Use build_graph to construct one
    from an edge list with validation.
    """
    vertex_count: int
    adjacency: tuple

    @property
    def n(self):
        return self.vertex_count

    @property
    def m(self):
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self):
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return [len(a) for a in self.adjacency]

    def has_edge(self, u, v):
        return v in self.adjacency[u]

    def is_cubic(self):
        return all(len(a) == MAX_DEGREE for a in self.adjacency)

    def is_connected(self):
        if self.vertex_count == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def component_count(self):
        return nx.number_connected_components(self.to_networkx())

    def distances_from(self, source):
        """BFS distances from source; unreachable vertices are absent from the result."""
        return nx.single_source_shortest_path_length(self.to_networkx(), source)

    def relabel(self, perm):
        """
        Applies a vertex permutation.
        :param perm: sequence mapping old vertex i to new vertex perm[i]
        :return: isomorphic Graph
        """
        return build_graph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges()])

    def to_networkx(self):
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.vertex_count))
        nxg.add_edges_from(self.edges())
        return nxg

    @classmethod
    def from_networkx(cls, nxg):
        nodes = sorted(nxg.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph(len(nodes), [(index[u], index[v]) for u, v in nxg.edges()])

    def __str__(self):
        return f"Graph(n={self.vertex_count}, m={self.m})"


def build_graph(n, edges, max_degree=MAX_DEGREE):
    """
    Builds a validated Graph.
    :param n: number of vertices
    :param edges: iterable of vertex pairs
    :param max_degree: degree cap, 3 for every graph of this package
    :return: Graph with sorted adjacency
    """
    neighbors = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeException(f"edge {u}-{v} leaves the vertex range 0..{n - 1}")
        if u == v:
            raise SelfLoopException(f"self-loop at vertex {u}")
        if v in neighbors[u]:
            raise DuplicateEdgeException(f"edge {u}-{v} given twice")
        neighbors[u].add(v)
        neighbors[v].add(u)
        if len(neighbors[u]) > max_degree or len(neighbors[v]) > max_degree:
            raise DegreeExceededException(f"edge {u}-{v} pushes a vertex past degree {max_degree}")
    return Graph(n, tuple(tuple(sorted(a)) for a in neighbors))


def girth(graph):
    """
    Length of a shortest cycle, math.inf for forests.
    """
    return nx.girth(graph.to_networkx())


def normalize_cycle(vertices):
    """
    Rotates a closed walk to start at its minimal vertex and picks the lexicographically smaller direction.
    """
    vertices = list(vertices)
    k = len(vertices)
    i = vertices.index(min(vertices))
    forward = vertices[i:] + vertices[:i]
    backward = [forward[0]] + forward[1:][::-1]
    return tuple(min(forward, backward))


def cycle_edges(cycle):
    return [edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def validate_cycle(graph, cycle, length=None):
    if length is not None and len(cycle) != length:
        raise CycleFormatException(f"cycle {cycle} does not have length {length}")
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise CycleFormatException(f"cycle {cycle} repeats a vertex")
    for u, v in cycle_edges(cycle):
        if not (0 <= u < graph.n and 0 <= v < graph.n) or not graph.has_edge(u, v):
            raise CycleFormatException(f"cycle {cycle} uses {u}-{v}, which is not an edge of the graph")
    return normalize_cycle(cycle)


def enumerate_cycles(graph, k):
    """
    All cycles of length exactly k, each once in normalized form, sorted.

    A cycle is found from its minimal vertex by a DFS restricted to larger vertices; of the two traversal
    directions only the one whose second vertex is smaller than its last is kept.
    """
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    found = []
    adj = graph.adjacency
    for root in range(graph.vertex_count):
        path = [root]
        on_path = {root}

        def extend(u):
            if len(path) == k:
                if root in adj[u] and path[1] < path[-1]:
                    found.append(tuple(path))
                return
            for w in adj[u]:
                if w > root and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    on_path.discard(w)
                    path.pop()

        extend(root)
    return sorted(found)
