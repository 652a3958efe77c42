from .cover import CDC, CdcReport, verify_6cdc, intersection_stats, LEMMAS
from .oracle import find_6cdc
from .api import check_structure_theorems, StructureReport, lemma_suite
