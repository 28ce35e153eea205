from __future__ import absolute_import

from .brace import (Brace, brace_inverse, brace_to_lcs,
                    check_brace_compatibility, lcs_from_brace_table,
                    lcs_to_brace)
from .cycle_set import (LinearCycleSet, center, is_ideal, is_lcs_morphism,
                        lcs_from_table, socle, trivial_lcs, validate_lcs,
                        yleft)
from .enumeration import enumerate_lcs
