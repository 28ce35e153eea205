""" Subcommands of the command line interface.

Every subcommand takes a RunConfig and returns the exit code together with
the JSON document to emit. Errors are left to propagate, `main` maps them to
exit codes.
"""
from __future__ import absolute_import

import numpy as np

from .. import logging
from ..cohomology import (cohomology, cohomology_order, ext_vs_h2_report,
                          verify_total_complex)
from ..common import DescriptorError, InvalidActionError
from ..extension import (ACTION_LAWS, check_central_cocycle, check_general,
                         check_trivial_ideal, classify_extensions,
                         extensions_equivalent, extract_data,
                         invariant_report)
from ..lcs import lcs_from_table
from ..storage import (decode_data, decode_extract_request, decode_lcs_table,
                       decode_request, encode_data, encode_report, load_json)

__all__ = [
    'EXIT_OK', 'EXIT_FAILED', 'EXIT_PARSE', 'EXIT_GUARD', 'EXIT_ACTION',
    'EXIT_HYPOTHESIS', 'cmd_validate', 'cmd_check', 'cmd_classify',
    'cmd_cohomology', 'cmd_complex_check', 'cmd_extract', 'cmd_equivalent',
    'SUBCOMMANDS'
]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_ACTION = 4
EXIT_HYPOTHESIS = 5

_CHECKERS = {
    'general': check_general,
    'central': check_central_cocycle,
    'socle': check_trivial_ideal,
}


def _input(path, flag='--input'):
    if not path:
        raise DescriptorError('{} is required'.format(flag))
    return load_json(path)


def _verdict(report):
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_validate(config):
    """ Checks the axioms of the linear cycle set in `--input`. """
    group, table = decode_lcs_table(_input(config.input))
    L, report = lcs_from_table(group, table)
    doc = {
        'command': 'validate',
        'valid': L is not None,
        'order': group.order,
        'report': encode_report(report),
    }
    return _verdict(report), doc


def cmd_check(config):
    """ Runs the checker of `--mode` on the ExtensionData in `--input`.

    The standing assumptions are checked first: a failing action law exits
    with `EXIT_ACTION`, any other failing assumption is reported as a
    failed check.
    """
    data = decode_data(_input(config.input), validate=False)
    standing = invariant_report(data)
    for result in standing.failures():
        if result.name in ACTION_LAWS:
            raise InvalidActionError(result.formula, result.witness)
    report = standing if not standing.passed else \
        _CHECKERS[config.mode](data)
    doc = {
        'command': 'check',
        'mode': config.mode,
        'report': encode_report(report),
    }
    return _verdict(report), doc


def cmd_classify(config):
    """ Lists the extensions of `H` by the trivial `I` with the actions of
    the request, and compares their number with `|H^2|`.
    """
    request = decode_request(_input(config.input))
    I, H = request['I'], request['H']
    diamond, yleft = request['diamond'], request['yleft']
    representatives = classify_extensions(I, H, diamond, yleft,
                                          limits=config.limits)
    order = cohomology_order(H, I, diamond, yleft, 2, limits=config.limits)
    report = ext_vs_h2_report(H, I, diamond, yleft, limits=config.limits)
    doc = {
        'command': 'classify',
        'class_count': len(representatives),
        'h2_order': order,
        'agree': report.passed,
        'classes': [encode_data(E.data, compact=True)
                    for E in representatives],
        'report': encode_report(report),
    }
    return _verdict(report), doc


def cmd_cohomology(config):
    """ Invariant factors of `H^n` after checking that `(∂ + D)^2 = 0` up to
    degree `n + 1`.
    """
    doc = _input(config.input)
    request = decode_request(doc)
    n = config.degree if config.degree is not None else doc.get('degree', 2)
    if not isinstance(n, int) or n < 1:
        raise DescriptorError('degree must be a positive integer, got '
                              '{!r}'.format(n))
    I, H = request['I'], request['H']
    diamond, yleft = request['diamond'], request['yleft']
    preflight = verify_total_complex(H, I, diamond, yleft, n + 1,
                                     limits=config.limits)
    failure = preflight.first_failure()
    if failure is not None:
        raise InvalidActionError(failure.formula, failure.witness)
    factors = cohomology(H, I, diamond, yleft, n, limits=config.limits)
    result = {
        'command': 'cohomology',
        'degree': n,
        'invariant_factors': factors,
        'order': int(np.prod(factors, dtype=object)),
    }
    return EXIT_OK, result


def cmd_complex_check(config):
    request = decode_request(_input(config.input))
    report = verify_total_complex(request['H'], request['I'],
                                  request['diamond'], request['yleft'],
                                  config.maxdeg, limits=config.limits)
    doc = {
        'command': 'complex-check',
        'maxdeg': config.maxdeg,
        'report': encode_report(report),
    }
    return _verdict(report), doc


def cmd_extract(config):
    """ Reads the data of the extension in `--input` through its section. """
    request = decode_extract_request(_input(config.input))
    data = extract_data(**request)
    doc = encode_data(data, compact=True)
    doc['command'] = 'extract'
    return EXIT_OK, doc


def cmd_equivalent(config):
    d1 = decode_data(_input(config.input))
    d2 = decode_data(_input(config.input2, '--input2'))
    witness = extensions_equivalent(d1, d2, limits=config.limits)
    logging.verbose('Extensions are {}equivalent'.format(
        '' if witness is not None else 'not '), 1)
    doc = {'command': 'equivalent', 'equivalent': witness is not None}
    if witness is None:
        return EXIT_FAILED, doc
    doc['witness'] = witness.to_dict()
    return EXIT_OK, doc


SUBCOMMANDS = {
    'validate': cmd_validate,
    'check': cmd_check,
    'classify': cmd_classify,
    'cohomology': cmd_cohomology,
    'complex-check': cmd_complex_check,
    'extract': cmd_extract,
    'equivalent': cmd_equivalent,
}
