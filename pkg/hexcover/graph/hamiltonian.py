from .graph import edge_key, normalize_cycle


def _search_cycles(graph, first_only):
    n = graph.n
    if n < 3:
        return []
    adj = graph.adjacency
    found = []
    path = [0]
    used = [False] * n
    used[0] = True

    def stranded(u):
        # an unvisited vertex needs two usable neighbors; the path ends count as usable
        for w in adj[u]:
            if used[w]:
                continue
            free = sum(1 for x in adj[w] if not used[x] or x == u or x == 0)
            if free < 2:
                return True
        return False

    def extend(u):
        if len(path) == n:
            if 0 in adj[u] and path[1] < path[-1]:
                found.append(tuple(path))
                return first_only
            return False
        if stranded(u):
            return False
        for w in adj[u]:
            if not used[w]:
                used[w] = True
                path.append(w)
                if extend(w):
                    return True
                path.pop()
                used[w] = False
        return False

    extend(0)
    return found


def find_hamiltonian_cycle(graph):
    """
    First Hamiltonian cycle found by backtracking from vertex 0, normalized, or None.
    """
    found = _search_cycles(graph, first_only=True)
    return normalize_cycle(found[0]) if found else None


def hamiltonian_cycles(graph):
    """Every Hamiltonian cycle of graph, each once in normalized form, sorted."""
    return sorted(normalize_cycle(c) for c in _search_cycles(graph, first_only=False))


def hamiltonian_edge_list(cycle):
    return tuple(sorted(edge_key(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))))


def least_hamiltonian_cycle(graph):
    """
    The Hamiltonian cycle whose sorted edge list is lexicographically least, or None.
    """
    cycles = hamiltonian_cycles(graph)
    if not cycles:
        return None
    return min(cycles, key=hamiltonian_edge_list)


def is_hamiltonian_cycle(graph, cycle):
    if len(cycle) != graph.n or len(set(cycle)) != graph.n or graph.n < 3:
        return False
    return all(graph.has_edge(cycle[i], cycle[(i + 1) % graph.n]) for i in range(graph.n))


def find_path_cover(graph, pairs, skip=frozenset()):
    """
    Vertex-disjoint paths joining each (start, end) pair, together visiting every vertex not in skip.

    A pair with start == end is a single-vertex path. Vertices in skip are visited elsewhere and may not be used.
    :param graph: Graph the paths live in
    :param pairs: sequence of (start, end) vertex pairs
    :param skip: vertices the cover must avoid
    :return: list of vertex tuples, one per pair, or None when no cover exists
    """
    endpoints = [v for pair in pairs for v in pair]
    if len(set(endpoints)) != len(endpoints) - sum(1 for s, t in pairs if s == t):
        return None
    if any(v in skip for v in endpoints):
        return None
    used = set(skip)
    for v in endpoints:
        used.add(v)
    reserved = set(endpoints)
    paths = []

    def build(index, current):
        if index == len(pairs):
            return len(used) == graph.n
        start, end = pairs[index]
        if current is None:
            if start == end:
                paths.append((start,))
                if build(index + 1, None):
                    return True
                paths.pop()
                return False
            current = [start]
        u = current[-1]
        for w in graph.neighbors(u):
            if w == end:
                paths.append(tuple(current + [end]))
                if build(index + 1, None):
                    return True
                paths.pop()
            elif w not in used and w not in reserved:
                used.add(w)
                current.append(w)
                if build(index, current):
                    return True
                current.pop()
                used.discard(w)
        return False

    return list(paths) if build(0, None) else None
