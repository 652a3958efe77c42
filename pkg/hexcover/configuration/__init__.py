from .configuration import CycleConfiguration, Fragment, deficiency, fragments, configuration_violations, \
    is_valid_configuration, local_violation, repeated_pairs
from .equivalence import BoundaryCorrespondence, configs_equivalent, is_self_similar, iter_copies
from .seeds import build_S, seed_variants, enumerate_configurations, enumerate_seed_configs, SeedConfiguration, \
    SeedVariant, fragment_profile
