""" Entry point: `python -m cyclesetext.cli <command> [flags]`.

Exit codes:

    0  success
    1  the checked property is false
    2  malformed input
    3  a size guard is exceeded
    4  the actions violate their laws
    5  the hypothesis of the checker does not hold
"""
from __future__ import absolute_import, print_function

import numpy as np
import pandas as pd
from absl import app

from .. import logging
from ..common import (DescriptorError, HypothesisError, InvalidActionError,
                      NotExactError, SizeGuardError)
from ..storage import dumps
from .commands import (EXIT_ACTION, EXIT_FAILED, EXIT_GUARD, EXIT_HYPOTHESIS,
                       EXIT_PARSE, SUBCOMMANDS)
from .config import COMMANDS, config_from_flags

__all__ = ['main', 'run', 'render_text', 'execute']

# Order matters: the package exceptions are all ValueError.
_EXIT_CODES = [
    (DescriptorError, EXIT_PARSE),
    (SizeGuardError, EXIT_GUARD),
    (InvalidActionError, EXIT_ACTION),
    (HypothesisError, EXIT_HYPOTHESIS),
    (NotExactError, EXIT_FAILED),
    (ValueError, EXIT_PARSE),
]


def render_text(doc):
    """ Plain text rendering of an output document, reports as tables. """
    lines = []
    for key in sorted(doc):
        if key == 'report':
            report = doc[key]
            lines.append('report: {} ({})'.format(
                report['title'], 'pass' if report['passed'] else 'fail'))
            frame = pd.DataFrame(report['identities'],
                                 columns=['identity', 'status', 'witness'])
            if len(frame):
                lines.append(frame.to_string(index=False))
        else:
            lines.append('{}: {}'.format(key, dumps(doc[key]) if isinstance(
                doc[key], (dict, list)) else doc[key]))
    return '\n'.join(lines)


def execute(config):
    """ Runs a subcommand, turning the expected errors into exit codes.

    # Returns
        tuple: Exit code and output document.
    """
    np.random.seed(config.seed)
    logging.set_info_level(config.verbosity)
    try:
        return SUBCOMMANDS[config.command](config)
    except ValueError as e:
        for kind, code in _EXIT_CODES:
            if isinstance(e, kind):
                break
        logging.error('{} failed: {}'.format(config.command, e))
        doc = {
            'command': config.command,
            'error': type(e).__name__,
            'message': str(e),
        }
        for field in ('guard', 'law', 'condition'):
            if hasattr(e, field):
                doc[field] = getattr(e, field)
        return code, doc


def main(argv):
    if len(argv) < 2 or argv[1] not in COMMANDS:
        raise app.UsageError('Expected a command among {}, got {}'.format(
            ', '.join(COMMANDS), argv[1:]))
    if len(argv) > 2:
        raise app.UsageError('Unexpected arguments {}'.format(argv[2:]))
    try:
        config = config_from_flags(argv[1])
    except ValueError as e:
        logging.error(str(e))
        print(dumps({'command': argv[1], 'error': 'ValueError',
                     'message': str(e)}))
        return EXIT_PARSE
    code, doc = execute(config)
    print(render_text(doc) if config.output == 'text' else dumps(doc))
    return code


def run():
    app.run(main)
