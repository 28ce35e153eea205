from __future__ import absolute_import

from .cochains import CochainGroup, cochain_group
from .complex import (TotalComplex, cohomology, cohomology_order,
                      total_complex, verify_double_complex,
                      verify_preserves_normalization, verify_total_complex)
from .degree2 import (coboundary_d1, ext_vs_h2_report, is_2coboundary,
                      is_2cocycle)
from .differentials import Bicomplex, diff_D, diff_h, diff_v
