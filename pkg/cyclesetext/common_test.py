from __future__ import absolute_import

import pytest

from cyclesetext import common
from cyclesetext.common import (DEFAULT_LIMITS, SizeGuardError, check_guard,
                                resolve_limits)


def test_exports():
    for name in common.__all__:
        assert hasattr(common, name), name
    assert not hasattr(common, 'patch')


class TestLimits:

    def test_defaults(self):
        assert resolve_limits() == DEFAULT_LIMITS
        assert resolve_limits(max_search=None) == DEFAULT_LIMITS

    def test_override(self):
        limits = resolve_limits(max_search=5)
        assert limits.max_search == 5
        assert limits.max_tuples == DEFAULT_LIMITS.max_tuples

    def test_not_positive(self):
        with pytest.raises(ValueError):
            resolve_limits(max_tuples=0)

    def test_guard(self):
        limits = resolve_limits(max_search=5)
        check_guard(limits, 'max_search', 5)
        with pytest.raises(SizeGuardError) as excinfo:
            check_guard(limits, 'max_search', 6)
        assert excinfo.value.guard == 'max_search'
        assert excinfo.value.requested == 6
        assert '--max-search' in str(excinfo.value)
