from __future__ import absolute_import

from .actions import admissible_actions, fixed_action_report
from .checks import (action_report, check_central_cocycle, check_general,
                     check_remarks, check_trivial_ideal, cocycle_report,
                     compare_triangle_formulation, extension_report,
                     sigma_nu_check)
from .data import (ACTION_LAWS, ExtensionData, ProductExtension,
                   build_product_extension, invariant_report, trivial_data,
                   twist_by_cochain)
from .equivalence import (EquivalenceWitness, classify_extensions,
                          enumerate_cocycle_data, equivalence_classes,
                          extensions_equivalent, witness_report)
from .extract import (all_sections, extract_data, is_short_exact,
                      section_isomorphism)
