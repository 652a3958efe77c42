from .graph import Graph, build_graph, girth, canonical_form, is_isomorphic, encode_graph6, decode_graph6
from .cdc import CDC, find_6cdc, verify_6cdc, check_structure_theorems
from .configuration import CycleConfiguration, enumerate_seed_configs, build_S
from .seedlab.api import build_catalog, derive_I, derive_B, reverse_substitute
from .generator.api import generate, reduce_to_base
from .circulant import mobius_ladder, torus_2layer, circulant, find_mcsd
from .enumeration import enumerate_cubic
from .resource import ResourceManager
