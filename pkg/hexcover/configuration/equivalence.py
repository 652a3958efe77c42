from dataclasses import dataclass

from ..graph.embedding import iter_subgraph_embeddings, embedded_edge_set


@dataclass(frozen=True)
class BoundaryCorrespondence:
    """
    groups: pairs (v, U) matching each deficient vertex v of the first configuration to a set U of deficient
    vertices of the second with the same deficiency.
    label_map: through-label of the first configuration -> through-label of the second.
    through: records (v, label, partner label, fragment length) for every cycle passing a matched boundary.
    """
    groups: tuple
    label_map: dict
    through: tuple

    def vertex_map(self):
        return {v: group[0] for v, group in self.groups}


def _boundary_profile(cfg):
    """
    Per deficient vertex: None if it cannot take part in a boundary, else its ending labels with the length
    and far endpoint of each fragment.
    """
    profile = {}
    for v in cfg.deficient_vertices():
        # a two-vertex group would route an outside cycle through the interior, so only degree-1 vertices match
        if cfg.graph.degree(v) != 1:
            return None
        ends = []
        for label in cfg.ending_labels(v):
            fragment = cfg.fragment_at(v, label)
            ends.append((label, fragment.length, fragment.other_end(v)))
        profile[v] = ends
    return profile


def configs_equivalent(cfg1, cfg2, merge_labels=False):
    """
    Searches for a boundary correspondence between two configurations: a bijection of deficient vertices of
    equal deficiency and a map of through-labels under which every cycle ending at a boundary vertex keeps its
    fragment length and its far endpoint.
    :param cfg1: CycleConfiguration
    :param cfg2: CycleConfiguration
    :param merge_labels: allow two labels of cfg1 to map onto one label of cfg2, which joins their fragments
        into one cycle; used where one graph is glued onto another with identified boundary vertices
    :return: BoundaryCorrespondence, or None when the configurations are not equivalent
    """
    profile1 = _boundary_profile(cfg1)
    profile2 = _boundary_profile(cfg2)
    if profile1 is None or profile2 is None or len(profile1) != len(profile2):
        return None
    signature = lambda ends: tuple(sorted(length for _, length, _ in ends))
    by_signature = {}
    for u, ends in profile2.items():
        by_signature.setdefault(signature(ends), []).append(u)
    order = sorted(profile1, key=lambda v: (len(by_signature.get(signature(profile1[v]), [])), v))
    if any(signature(profile1[v]) not in by_signature for v in order):
        return None

    vertex_map = {}
    used = set()
    label_map = {}
    label_image_count = {}

    def assign(label, image):
        current = label_map.get(label)
        if current is not None:
            return current == image, False
        if not merge_labels and label_image_count.get(image, 0):
            return False, False
        label_map[label] = image
        label_image_count[image] = label_image_count.get(image, 0) + 1
        return True, True

    def unassign(label):
        image = label_map.pop(label)
        label_image_count[image] -= 1

    def consistent(v, u, orientation):
        """orientation pairs each ending label at v with one at u; checks lengths and far endpoints."""
        for (label1, length1, far1), (label2, length2, far2) in orientation:
            if length1 != length2:
                return False
            if far1 in vertex_map and vertex_map[far1] != far2:
                return False
        return True

    def search(index):
        if index == len(order):
            return True
        v = order[index]
        ends1 = profile1[v]
        for u in by_signature[signature(ends1)]:
            if u in used:
                continue
            ends2 = profile2[u]
            for ends2_ordered in (ends2, ends2[::-1]):
                orientation = list(zip(ends1, ends2_ordered))
                vertex_map[v] = u
                if not consistent(v, u, orientation):
                    del vertex_map[v]
                    continue
                added = []
                ok = True
                for (label1, _, _), (label2, _, _) in orientation:
                    fits, new = assign(label1, label2)
                    if new:
                        added.append(label1)
                    if not fits:
                        ok = False
                        break
                if ok:
                    used.add(u)
                    if search(index + 1):
                        return True
                    used.discard(u)
                for label in added:
                    unassign(label)
                del vertex_map[v]
        return False

    if not search(0):
        return None
    through = tuple((v, label1, label_map[label1], length)
                    for v in sorted(profile1) for label1, length, _ in profile1[v])
    groups = tuple((v, (vertex_map[v],)) for v in sorted(vertex_map))
    return BoundaryCorrespondence(groups, dict(label_map), through)


def iter_copies(seed_graph, host_graph):
    """
    One embedding per distinct copy (image edge set) of seed_graph in host_graph.
    """
    seen = set()
    for embedding in iter_subgraph_embeddings(host_graph, seed_graph):
        key = embedded_edge_set(seed_graph, embedding)
        if key in seen:
            continue
        seen.add(key)
        yield embedding


def is_self_similar(candidate, seed, exclude_complete_cycle_isomorphs=False):
    """
    Whether candidate is equivalent to seed and every copy of the seed graph inside it carries a configuration
    equivalent to seed's. With the exclusion flag, copies whose configuration contains a complete cycle are
    left out, but at least one copy must still be checked.
    :param candidate: CycleConfiguration on a proper supergraph of the seed graph
    :param seed: CycleConfiguration of the seed
    :param exclude_complete_cycle_isomorphs: skip copies holding a closed label
    :return: boolean
    """
    if configs_equivalent(seed, candidate) is None:
        return False
    checked = 0
    for embedding in iter_copies(seed.graph, candidate.graph):
        induced = candidate.pullback(seed.graph, embedding)
        if exclude_complete_cycle_isomorphs and induced.has_closed_label():
            continue
        if configs_equivalent(seed, induced) is None:
            return False
        checked += 1
    return checked > 0
