from .graph import Graph, build_graph, girth, enumerate_cycles, normalize_cycle, cycle_edges, validate_cycle, edge_key
from .canonical import CanonicalForm, canonical_form, canonical_labeling, labeled_certificate, find_isomorphism, \
    is_isomorphic
from .embedding import find_subgraph_embeddings, iter_subgraph_embeddings, embedded_edge_set
from .graph6 import encode_graph6, decode_graph6, graph6_text, read_graph6_lines
from .hamiltonian import find_hamiltonian_cycle, hamiltonian_cycles, least_hamiltonian_cycle, is_hamiltonian_cycle, \
    find_path_cover, hamiltonian_edge_list
