from networkx.algorithms import isomorphism


def iter_subgraph_embeddings(host, pattern):
    """
    Yields every injective edge-preserving map from pattern into host, as a tuple indexed by pattern vertex.

    The subgraph need not be induced, so the search runs on VF2 monomorphisms rather than subgraph isomorphisms.
    :param host: Graph
    :param pattern: Graph
    """
    if pattern.n > host.n:
        return
    matcher = isomorphism.GraphMatcher(host.to_networkx(), pattern.to_networkx())
    for host_to_pattern in matcher.subgraph_monomorphisms_iter():
        image = [None] * pattern.n
        for v, u in host_to_pattern.items():
            image[u] = v
        yield tuple(image)


def find_subgraph_embeddings(host, pattern):
    """
    All embeddings of pattern into host (subgraph isomorphism, not necessarily induced).
    :return: list of tuples, entry i is the host image of pattern vertex i
    """
    return list(iter_subgraph_embeddings(host, pattern))


def embedded_edge_set(pattern, embedding):
    return frozenset((min(embedding[u], embedding[v]), max(embedding[u], embedding[v])) for u, v in pattern.edges())
