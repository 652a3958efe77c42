from os import path

# expansion searches stop at search_bound_factor * |V(S_g)| vertices per candidate
search_bound_factor = 4

# states popped by a single expansion search before giving up loudly
max_search_states = 400000

# hard limits of the corpus enumeration and of the single-byte graph6 header
max_cubic_order = 16
max_graph6_order = 62

default_max_n = 14

# catalog.txt and corpus_<n>.g6 live here; the CLI --cache-dir option overrides it
cache_dir = path.join(path.expanduser('~'), '.hexcover')

# worker processes for crosscheck and generation, 1 means serial
jobs = 1

# slow test groups collected by tests/conftest.py: 'catalog', 'corpus'
enabled_test_groups = []
