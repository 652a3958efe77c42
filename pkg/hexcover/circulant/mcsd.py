from dataclasses import dataclass
from itertools import permutations

from ..util import requires_cubic


@dataclass(frozen=True)
class MCSDLabeling:
    """
    Chordal sense of direction from a cyclic ordering: ranks[v] is the position of v, and the label of edge uv at u
    is (ranks[v] - ranks[u]) mod n.
    """
    graph: object
    ranks: tuple

    def label(self, u, v):
        return (self.ranks[v] - self.ranks[u]) % self.graph.n

    def edge_labels(self):
        """Map from edge (u, v), u < v, to the label pair seen from u and from v."""
        return {(u, v): (self.label(u, v), self.label(v, u)) for u, v in self.graph.edges()}

    def labels(self):
        return sorted({label for pair in self.edge_labels().values() for label in pair})

    def is_minimal(self):
        return len(self.labels()) == 3


def _place(graph, step):
    """Ranks under which every vertex sees its neighbors at offsets step, -step and n/2, or None."""
    n = graph.n
    offsets = (step, n - step, n // 2)
    ranks = [None] * n
    taken = set()
    ranks[0] = 0
    taken.add(0)

    def search():
        u = next((v for v in range(n)
                  if ranks[v] is not None and any(ranks[w] is None for w in graph.neighbors(v))), None)
        if u is None:
            return all(r is not None for r in ranks) and all((ranks[w] - ranks[v]) % n in offsets
                                                             for v, w in graph.edges())
        targets = [(ranks[u] + d) % n for d in offsets]
        placed = [ranks[w] for w in graph.neighbors(u) if ranks[w] is not None]
        if any(r not in targets for r in placed):
            return False
        free = [t for t in targets if t not in placed]
        unplaced = [w for w in graph.neighbors(u) if ranks[w] is None]
        for choice in permutations(free, len(unplaced)):
            if any(t in taken for t in choice):
                continue
            for w, t in zip(unplaced, choice):
                ranks[w] = t
                taken.add(t)
            if search():
                return True
            for w, t in zip(unplaced, choice):
                ranks[w] = None
                taken.discard(t)
        return False

    return tuple(ranks) if search() else None


@requires_cubic
def find_mcsd(graph):
    """
    Searches a cyclic ordering whose chordal labeling uses exactly three labels.

    At a cubic vertex the three labels are distinct and closed under inversion mod n, so they are s, n - s and n/2
    for one s in 1..n/2 - 1; the search fixes vertex 0 at rank 0 and tries each s.
    :param graph: connected cubic Graph
    :return: MCSDLabeling, or None when no ordering gives three labels
    """
    n = graph.n
    for step in range(1, n // 2):
        ranks = _place(graph, step)
        if ranks is not None:
            return MCSDLabeling(graph, ranks)
    return None
