from dataclasses import dataclass

import numpy as np

HOST_COLOR = 0
EDGE_NODE_COLOR = 1
LABEL_NODE_COLOR = 2


@dataclass(frozen=True)
class CanonicalForm:
    """
    certificate: bytes equal for two inputs exactly when they are isomorphic.
    permutation: permutation[v] is the canonical position of input vertex v.
    """
    certificate: bytes
    permutation: tuple


def _refine(cells, adjacency):
    """Splits an ordered partition until it is equitable."""
    while True:
        cell_of = {}
        for index, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = index
        refined = []
        for index, cell in enumerate(cells):
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(sorted(cell_of[w] for w in adjacency[v]))
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _target_cell(cells):
    best = None
    for index, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = index
    return best


def canonical_labeling(n, adjacency, colors=None):
    """
    Canonical form of a vertex-colored graph by partition refinement and individualization.

    Every leaf of the search tree is a discrete partition; its code is the sorted edge list under the induced
    positions, and the largest code wins. Colors only need to be comparable; vertices of smaller color come first.
    :param n: vertex count
    :param adjacency: per-vertex iterable of neighbors, any degree
    :param colors: optional per-vertex color, defaults to a single color
    :return: CanonicalForm
    """
    if colors is None:
        colors = [0] * n
    if n == 0:
        return CanonicalForm(np.array([0], dtype=np.uint32).tobytes(), ())
    adjacency = [tuple(a) for a in adjacency]
    edges = [(u, v) for u in range(n) for v in adjacency[u] if u < v]
    palette = sorted(set(colors))
    color_rank = {c: i for i, c in enumerate(palette)}
    initial = [[v for v in range(n) if colors[v] == c] for c in palette]

    best = {'code': None, 'positions': None}

    def search(cells):
        cells = _refine(cells, adjacency)
        target = _target_cell(cells)
        if target is None:
            positions = [0] * n
            for index, cell in enumerate(cells):
                positions[cell[0]] = index
            code = tuple(sorted((min(positions[u], positions[v]), max(positions[u], positions[v]))
                                for u, v in edges))
            if best['code'] is None or code > best['code']:
                best['code'] = code
                best['positions'] = positions
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(initial)
    positions = best['positions']
    colors_by_position = [0] * n
    for v in range(n):
        colors_by_position[positions[v]] = color_rank[colors[v]]
    flat = [value for edge in best['code'] for value in edge]
    certificate = np.array([n, len(palette)] + colors_by_position + flat, dtype=np.uint32).tobytes()
    return CanonicalForm(certificate, tuple(positions))


def canonical_form(graph):
    """
    Canonical certificate of a Graph together with its canonizing permutation.
    """
    return canonical_labeling(graph.n, graph.adjacency)


def find_isomorphism(graph1, graph2):
    """
    Explicit isomorphism extracted from canonical forms and checked edge by edge.
    :return: dict mapping vertices of graph1 to vertices of graph2, or None
    """
    if graph1.n != graph2.n or graph1.m != graph2.m:
        return None
    form1 = canonical_form(graph1)
    form2 = canonical_form(graph2)
    if form1.certificate != form2.certificate:
        return None
    inverse2 = {p: v for v, p in enumerate(form2.permutation)}
    mapping = {v: inverse2[form1.permutation[v]] for v in range(graph1.n)}
    if any(not graph2.has_edge(mapping[u], mapping[v]) for u, v in graph1.edges()):
        raise AssertionError("canonical forms agree but the extracted mapping is not an isomorphism")
    return mapping


def is_isomorphic(graph1, graph2):
    return find_isomorphism(graph1, graph2) is not None


def labeled_certificate(n, labeled_edges, vertex_colors=None):
    """
    Certificate of a graph whose edges carry sets of anonymous labels, invariant under vertex relabeling and
    under any bijection of the labels.

    Built on an auxiliary graph with one node per host vertex, per edge and per label; an edge node is joined
    to its two endpoints and to each of its labels.
    :param n: host vertex count
    :param labeled_edges: iterable of ((u, v), labels)
    :param vertex_colors: optional host vertex colors, must be smaller than the edge and label node colors
    :return: certificate bytes
    """
    labeled_edges = list(labeled_edges)
    labels = sorted({label for _, ls in labeled_edges for label in ls})
    label_node = {label: n + len(labeled_edges) + i for i, label in enumerate(labels)}
    total = n + len(labeled_edges) + len(labels)
    adjacency = [[] for _ in range(total)]
    for i, ((u, v), ls) in enumerate(labeled_edges):
        node = n + i
        for w in [u, v] + [label_node[label] for label in ls]:
            adjacency[node].append(w)
            adjacency[w].append(node)
    base = list(vertex_colors) if vertex_colors is not None else [HOST_COLOR] * n
    top = max(base, default=HOST_COLOR)
    colors = base + [top + EDGE_NODE_COLOR] * len(labeled_edges) + [top + LABEL_NODE_COLOR] * len(labels)
    return canonical_labeling(total, adjacency, colors).certificate
