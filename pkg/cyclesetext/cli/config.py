""" Command line flags and the run configuration built from them. """
from __future__ import absolute_import

import collections

from absl import flags

from ..common import resolve_limits

__all__ = ['COMMANDS', 'RunConfig', 'config_from_flags']

FLAGS = flags.FLAGS

COMMANDS = ('validate', 'check', 'classify', 'cohomology', 'complex-check',
            'extract', 'equivalent')

flags.DEFINE_string('input', None, 'Path of the input JSON document.')
flags.DEFINE_string('input2', None,
                    'Path of the second ExtensionData document of '
                    '`equivalent`.')
flags.DEFINE_enum('output', 'json', ['json', 'text'], 'Output format.')
flags.DEFINE_enum('mode', 'general', ['general', 'central', 'socle'],
                  'Checker used by `check`.')
flags.DEFINE_integer('degree', None,
                     'Degree of `cohomology`. Defaults to the "degree" field '
                     'of the request, or 2.')
flags.DEFINE_integer('maxdeg', 4, 'Largest degree checked by `complex-check`.')
flags.DEFINE_integer('max-order', None,
                     'Largest group order accepted by enumerations and '
                     'classifications.')
flags.DEFINE_integer('max-search', None,
                     'Largest exhaustive search space, such as the '
                     '|I|^(|H|-1) maps tried by `equivalent`.')
flags.DEFINE_integer('max-tuples', None,
                     'Largest number of basis tuples of a cochain group.')
flags.DEFINE_integer('seed', 0, 'Seed of the random number generator.')
flags.DEFINE_integer('verbosity_info', 0,
                     'Verbosity of the informative log messages.')


class RunConfig(
        collections.namedtuple('RunConfig', [
            'command', 'input', 'input2', 'output', 'mode', 'degree',
            'maxdeg', 'limits', 'seed', 'verbosity'
        ])):
    """ Everything a subcommand needs to run.

    # Attributes
        command: String. One of `COMMANDS`.
        input, input2: String or `None`. Input paths.
        output: String. `json` or `text`.
        mode: String. `general`, `central` or `socle`.
        degree: Integer or `None`.
        maxdeg: Integer.
        limits: SizeLimits with the guard overrides applied.
        seed: Integer.
        verbosity: Integer.
    """


def config_from_flags(command):
    """ Builds the RunConfig of `command` from the parsed flags.

    # Raises
        ValueError: if `command` is unknown or a guard is not positive.
    """
    if command not in COMMANDS:
        raise ValueError('Unknown command {!r}, expected one of {}'.format(
            command, ', '.join(COMMANDS)))
    max_order = FLAGS['max-order'].value
    limits = resolve_limits(None,
                            max_enumerate_order=max_order,
                            max_classify_order=max_order,
                            max_search=FLAGS['max-search'].value,
                            max_tuples=FLAGS['max-tuples'].value)
    return RunConfig(command=command,
                     input=FLAGS.input,
                     input2=FLAGS.input2,
                     output=FLAGS.output,
                     mode=FLAGS.mode,
                     degree=FLAGS.degree,
                     maxdeg=FLAGS.maxdeg,
                     limits=limits,
                     seed=FLAGS.seed,
                     verbosity=FLAGS.verbosity_info)
