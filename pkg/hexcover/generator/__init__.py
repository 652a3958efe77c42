from .substitution import Site, Replacement, cdc_configuration, configuration_cdc, substitution_sites, \
    substitute_at, reverse_sites, reverse_at, splice_hamiltonian, path_cover_key
