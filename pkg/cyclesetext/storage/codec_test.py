from __future__ import absolute_import, division

import json
from pathlib import Path

import numpy as np
import pytest

from ..abelian import group_from_orders
from ..common import DescriptorError, InvalidActionError
from ..extension.data_test import NILPOTENT_YLEFT, make_data, z3_negation
from ..extension.data_test import lcs as trivial
from ..lcs.cycle_set_test import z4_nontrivial
from ..report import CheckReport
from .codec import (decode_actions, decode_data, decode_element,
                    decode_extract_request, decode_group, decode_lcs,
                    decode_lcs_table, decode_request, decode_structure, dumps,
                    encode_data, encode_element, encode_group, encode_lcs,
                    encode_report, load_json, save_json)

TEST_DATA = Path(__file__).parent.parent.joinpath('test_data')


def fixture(name):
    return str(TEST_DATA.joinpath(name))


class TestFiles:

    def test_load(self):
        doc = load_json(fixture('z4_trivial_lcs.json'))
        assert doc['group'] == {'cyclic_orders': [4]}

    def test_truncated(self):
        with pytest.raises(DescriptorError) as excinfo:
            load_json(fixture('truncated.json'))
        assert 'Cannot parse' in str(excinfo.value)

    def test_missing(self, tmp_path):
        with pytest.raises(DescriptorError):
            load_json(str(tmp_path / 'missing.json'))

    def test_save(self, tmp_path):
        path = str(tmp_path / 'out.json')
        save_json({'b': [1, 2], 'a': '◆'}, path)
        assert load_json(path) == {'b': [1, 2], 'a': '◆'}

    def test_dumps_is_deterministic(self):
        assert dumps({'b': 1, 'a': 2}) == dumps({'a': 2, 'b': 1})
        assert dumps({'b': 1, 'a': 2}).index('"a"') < \
            dumps({'b': 1, 'a': 2}).index('"b"')


class TestGroups:

    def test_roundtrip(self):
        G = group_from_orders([2, 6])
        assert decode_group(encode_group(G)) == G

    @pytest.mark.parametrize('doc', [
        {}, [], {'cyclic_orders': 4}, {'cyclic_orders': [0]},
        {'cyclic_orders': ['2']}
    ])
    def test_malformed(self, doc):
        with pytest.raises(DescriptorError):
            decode_group(doc)

    def test_elements(self):
        G = group_from_orders([2, 3])
        assert encode_element(G, 5) == [1, 2]
        assert decode_element(G, [1, 2]) == 5
        with pytest.raises(DescriptorError):
            decode_element(G, [1])


class TestLinearCycleSets:

    def test_fixture(self):
        L = decode_lcs(load_json(fixture('z4_nontrivial_lcs.json')))
        assert L == z4_nontrivial()
        assert encode_lcs(L) == load_json(fixture('z4_nontrivial_lcs.json'))

    def test_table_is_not_validated(self):
        group, table = decode_lcs_table(load_json(fixture('broken_lcs.json')))
        assert group.order == 2
        assert table.tolist() == [[1, 0], [0, 1]]
        with pytest.raises(ValueError):
            decode_lcs(load_json(fixture('broken_lcs.json')))

    @pytest.mark.parametrize('table', [[[0, 1]], [[0, 2], [0, 1]],
                                       [[0, 1], [0]]])
    def test_malformed_table(self, table):
        with pytest.raises(DescriptorError):
            decode_lcs_table({'group': {'cyclic_orders': [2]},
                              'dot_table': table})

    def test_bare_group_is_trivial(self):
        L = decode_structure({'cyclic_orders': [3]})
        assert L.is_trivial() and L.order == 3
        assert decode_structure(encode_lcs(z4_nontrivial())) == \
            z4_nontrivial()


class TestExtensionData:

    def test_shorthands(self):
        diamond, yleft = decode_actions({}, trivial([3]), trivial([2]))
        assert diamond.tolist() == [[0, 1, 2], [0, 1, 2]]
        assert yleft.tolist() == [[0, 0], [0, 0], [0, 0]]
        with pytest.raises(DescriptorError):
            decode_actions({'yleft': 'trivial'}, trivial([3]), trivial([2]))
        with pytest.raises(DescriptorError):
            decode_actions({'diamond': [[0, 1, 2]]}, trivial([3]),
                           trivial([2]))

    @pytest.mark.parametrize('data', [
        z3_negation(1, 2),
        make_data(trivial([2, 2]), trivial([2]), yleft=NILPOTENT_YLEFT),
        make_data(z4_nontrivial(), trivial([2]), f=[[0, 0], [0, 2]]),
    ])
    @pytest.mark.parametrize('compact', [False, True])
    def test_roundtrip(self, data, compact):
        doc = json.loads(dumps(encode_data(data, compact=compact)))
        assert decode_data(doc) == data

    def test_compact(self):
        doc = encode_data(z3_negation(1, 2), compact=True)
        assert doc['yleft'] == 'zero'
        assert doc['diamond'] == [[0, 1, 2], [0, 2, 1]]

    def test_fixture(self):
        data = decode_data(load_json(fixture('z4_central_data.json')))
        assert data.beta.tolist() == [[0, 0], [0, 1]]
        assert not data.f.any()

    def test_validation(self):
        doc = load_json(fixture('broken_action_data.json'))
        with pytest.raises(InvalidActionError):
            decode_data(doc)
        assert decode_data(doc, validate=False).diamond[1].tolist() == \
            [0, 1, 1]

    def test_missing_table(self):
        doc = load_json(fixture('zero_data.json'))
        del doc['f']
        with pytest.raises(DescriptorError) as excinfo:
            decode_data(doc)
        assert '"f"' in str(excinfo.value)


class TestRequests:

    def test_request(self):
        request = decode_request(load_json(fixture('z2_by_z2_request.json')))
        assert request['I'].is_trivial() and request['I'].order == 2
        assert not request['yleft'].any()

    def test_explicit_yleft(self):
        request = decode_request(
            load_json(fixture('non_nilpotent_request.json')))
        assert request['yleft'].tolist() == [[0, 0], [0, 1]]

    def test_extract_request(self):
        request = decode_extract_request(
            load_json(fixture('extract_request.json')))
        assert request['B'].order == 4
        assert request['iota'].tolist() == [0, 2]
        assert sorted(request) == ['B', 'H', 'I', 'iota', 'pi', 'section']

    def test_extract_request_shapes(self):
        doc = load_json(fixture('extract_request.json'))
        doc['pi'] = [0, 1]
        with pytest.raises(DescriptorError):
            decode_extract_request(doc)


def test_encode_report():
    report = CheckReport('demo')
    report.add('(1)', 'a = a', None)
    report.add('(2)', 'a = b', (np.int64(1), 2))
    doc = encode_report(report)
    assert doc['title'] == 'demo'
    assert doc['passed'] is False
    assert doc['identities'][1] == {
        'identity': '(2)', 'formula': 'a = b', 'status': 'fail',
        'witness': [1, 2]
    }
    json.loads(dumps(doc))
