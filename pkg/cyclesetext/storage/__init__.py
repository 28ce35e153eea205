from __future__ import absolute_import

from .codec import (decode_actions, decode_data, decode_element,
                    decode_extract_request, decode_group, decode_lcs,
                    decode_lcs_table, decode_request, decode_structure, dumps,
                    encode_data, encode_element, encode_group, encode_lcs,
                    encode_report, load_json, save_json)
