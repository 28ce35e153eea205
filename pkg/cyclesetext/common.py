""" Shared size guards and exceptions of the package.

Every operation whose cost grows exponentially with the size of the input
structures takes an optional `limits` keyword. When it is `None` the module
level `DEFAULT_LIMITS` apply.
"""
from __future__ import absolute_import

import collections

__all__ = [
    'GUARD_FLAGS', 'check_guard',
    'SizeLimits', 'DEFAULT_LIMITS', 'resolve_limits', 'SizeGuardError',
    'HypothesisError', 'InvalidActionError', 'NotACochainError',
    'NotExactError', 'DescriptorError'
]

SizeLimits = collections.namedtuple(
    'SizeLimits',
    ['max_enumerate_order', 'max_classify_order', 'max_search', 'max_tuples'])

DEFAULT_LIMITS = SizeLimits(
    max_enumerate_order=8,
    max_classify_order=4,
    max_search=10**6,
    max_tuples=10**5)

# Command line flag that overrides each guard.
GUARD_FLAGS = {
    'max_enumerate_order': '--max-order',
    'max_classify_order': '--max-order',
    'max_search': '--max-search',
    'max_tuples': '--max-tuples',
}


def resolve_limits(limits=None, **overrides):
    """ Returns the limits to use, applying non `None` overrides.

    # Arguments
        limits: SizeLimits or `None`. Base limits, `DEFAULT_LIMITS` if `None`.
        overrides: Fields of `SizeLimits` to replace.

    # Returns
        SizeLimits: The resolved limits.

    # Raises
        ValueError: if any guard is not positive.
    """
    limits = limits or DEFAULT_LIMITS
    overrides = {k: v for k, v in overrides.items() if v is not None}
    limits = limits._replace(**overrides)
    for name, value in limits._asdict().items():
        if value < 1:
            raise ValueError('Guard {} must be positive, got {}'.format(
                name, value))
    return limits


class SizeGuardError(ValueError):
    """ A configured size guard would be exceeded.

    # Attributes
        guard: String. Name of the `SizeLimits` field.
        requested: Integer. Size the operation would need.
        limit: Integer. Configured limit.
    """

    def __init__(self, guard, requested, limit):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super(SizeGuardError, self).__init__(
            'Size guard {} exceeded: {} > {}. Override it with {}.'.format(
                guard, requested, limit, GUARD_FLAGS.get(guard, guard)))


def check_guard(limits, guard, requested):
    limit = getattr(limits, guard)
    if requested > limit:
        raise SizeGuardError(guard, requested, limit)


class HypothesisError(ValueError):
    """ The precondition of a checker does not hold.

    # Attributes
        condition: String. Name of the violated hypothesis.
        witness: Tuple. Arguments where it fails.
    """

    def __init__(self, condition, witness=None, message=None):
        self.condition = condition
        self.witness = witness
        super(HypothesisError, self).__init__(
            message or 'Hypothesis {} violated at {}'.format(
                condition, witness))


class InvalidActionError(ValueError):
    """ The tables given for the actions violate one of their laws. """

    def __init__(self, law, witness=None):
        self.law = law
        self.witness = witness
        super(InvalidActionError, self).__init__(
            'Action law {} violated at {}'.format(law, witness))


class NotACochainError(ValueError):
    pass


class NotExactError(ValueError):
    pass


class DescriptorError(ValueError):
    """ A JSON document does not describe the expected structure. """
