from tilerscope.combinatorics.valence import (
    ADMISSIBLE_SETS,
    Admissibility,
    AdmissibilityReason,
    ValenceSet,
    facet_admissible,
    facet_valences,
    shave_edge_count,
    valence_set,
)
from tilerscope.combinatorics.euler import CountProfile, euler_counts
from tilerscope.combinatorics.screen import ScreenReason, ScreenVerdict, Shape, combinatorial_screen
