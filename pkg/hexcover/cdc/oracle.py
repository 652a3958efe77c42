from ..graph.graph import enumerate_cycles, cycle_edges
from ..util import requires_cubic_component
from .cover import CDC, CYCLE_LENGTH

FIRST = 'first'
ALL = 'all'


def _exact_double_cover(edges, hexagons, first_only):
    """
    Selections of hexagons covering every edge exactly twice.

    Branches on the edge with the fewest usable hexagons; a hexagon tried at a node is excluded for its later
    siblings, so every selection is produced once.
    """
    need = {e: 2 for e in edges}
    hexagon_edges = [cycle_edges(h) for h in hexagons]
    through = {e: [] for e in edges}
    for index, hes in enumerate(hexagon_edges):
        for e in hes:
            through[e].append(index)
    blocked = [False] * len(hexagons)
    chosen = []
    solutions = []

    def usable(index):
        return not blocked[index] and all(need[e] > 0 for e in hexagon_edges[index])

    def search():
        target = None
        options = None
        for e in edges:
            if need[e] == 0:
                continue
            candidates = [i for i in through[e] if usable(i)]
            if len(candidates) < need[e]:
                return False
            if options is None or len(candidates) < len(options):
                target, options = e, candidates
        if target is None:
            solutions.append(tuple(chosen))
            return first_only
        undo = []
        for index in options:
            blocked[index] = True
            chosen.append(index)
            for e in hexagon_edges[index]:
                need[e] -= 1
            if search():
                return True
            for e in hexagon_edges[index]:
                need[e] += 1
            chosen.pop()
            undo.append(index)
        for index in undo:
            blocked[index] = False
        return False

    search()
    return solutions


@requires_cubic_component
def find_6cdc(graph, mode=FIRST):
    """
    Exhaustive search for 6-cycle double covers.
    :param graph: cubic Graph
    :param mode: 'first' for at most one cover, 'all' for every cover
    :return: list of CDC, sorted by cycle tuple; empty when graph has no 6-CDC
    """
    if mode not in (FIRST, ALL):
        raise ValueError(f"mode must be '{FIRST}' or '{ALL}', got {mode!r}")
    hexagons = enumerate_cycles(graph, CYCLE_LENGTH)
    found = _exact_double_cover(graph.edges(), hexagons, first_only=(mode == FIRST))
    covers = {frozenset(hexagons[i] for i in selection) for selection in found}
    return sorted((CDC.from_cycles(graph, cover) for cover in covers), key=lambda c: c.cycles)
