from .catalog import SeedCatalog, SeedCatalogEntry, BaseInstance, load_catalog, BASE_TYPES
from .adjacency import CycleAdjacencyGraph, build_cycle_adjacency_graph, configuration_adjacency
from .expansion import ExpansionRules, ExpansionSearch, ExpansionState
