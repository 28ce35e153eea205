from __future__ import absolute_import

from .group import (AbstractGroup, FiniteAbelianGroup, TableGroup, add,
                    group_from_orders, neg, zero)
from .hom import (GroupHom, all_homs, automorphisms, factor_through,
                  hom_image, hom_kernel, hom_table, preimage,
                  quotient_invariants, subquotient_invariants)
from .snf import smith_normal_form
