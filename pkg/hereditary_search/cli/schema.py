# -*- coding: utf-8 -*-

"""
Schemas JSON dos payloads da CLI.

Todo payload é validado antes de ser escrito; uma falha aqui indica bug
no comando, não erro do usuário.
"""

from typing import Any, Dict

import jsonschema

from ..exceptions import InternalError

_INT = {'type': 'integer'}
_NAT = {'type': 'integer', 'minimum': 0}
_NULLABLE_NAT = {'type': ['integer', 'null'], 'minimum': 0}
_VERTEX_LIST = {'type': 'array', 'items': _NAT}

BRANCHES = [
    'ThmAS_SA_cutoff', 'ThmAS_SA_search', 'ThmBoth_cutoff', 'ThmBoth_search',
    'ThmSS_search', 'PiAA_cutoff', 'PiAA_search', 'PiSS_cutoff', 'PiSS_search',
    'GenericSearch',
]

_DESCRIPTOR = {
    'type': 'object',
    'required': ['name', 'class', 'i_pi', 'c_pi', 'chi_pi', 'has_recognizer'],
    'properties': {
        'name': {'type': 'string'},
        'class': {'enum': ['AA', 'AS', 'SA', 'SS']},
        'i_pi': _NULLABLE_NAT,
        'c_pi': _NULLABLE_NAT,
        'chi_pi': _NULLABLE_NAT,
        'closed_under_strong_clique_product': {'type': 'boolean'},
        'closed_under_join_with_cliques': {'type': 'boolean'},
        'contains_all_disjoint_unions_of_K_chi': {'type': 'boolean'},
        'contains_IS_join_cliques': {'type': 'boolean'},
        'has_recognizer': {'type': 'boolean'},
        'generator_only': {'type': 'boolean'},
        'description': {'type': 'string'},
    },
}

_PAIR = {
    'type': 'object',
    'required': ['rule', 'regime', 'cutoff', 'cutoff_params'],
    'properties': {
        'rule': {'enum': ['PiAA', 'PiSS', 'ThmSS', 'ThmAS_SA', 'ThmBoth', 'GenericSearch']},
        'regime': {'enum': ['fpt', 'polynomial', 'finite', 'open']},
        'cutoff': {'type': ['string', 'null']},
        'cutoff_params': {'type': 'object', 'additionalProperties': _NAT},
        'threshold': _NULLABLE_NAT,
    },
}

_SIDECAR = {
    'type': 'object',
    'required': ['kind', 'chi', 'r', 'c', 'k', 'k_prime', 'n', 'n_prime', 'map'],
    'properties': {
        'kind': {'enum': ['strong', 'join']},
        'chi': _NAT,
        'r': _NULLABLE_NAT,
        'c': _NULLABLE_NAT,
        'k': _NAT,
        'k_prime': _NAT,
        'n': _NAT,
        'n_prime': _NAT,
        'map': {
            'type': 'object',
            'required': ['origin', 'clique_blocks'],
            'properties': {
                'origin': {'type': 'array', 'items': _NULLABLE_NAT},
                'clique_blocks': {'type': 'array', 'items': _VERTEX_LIST},
            },
        },
    },
}

PAYLOAD_SCHEMAS: Dict[str, Dict[str, Any]] = {
    'solve': {
        'type': 'object',
        'required': ['answer', 'witness', 'branch', 'membership_tests'],
        'additionalProperties': False,
        'properties': {
            'answer': {'enum': ['Yes', 'No']},
            'witness': {'anyOf': [_VERTEX_LIST, {'type': 'null'}]},
            'branch': {'enum': BRANCHES},
            'membership_tests': _NAT,
        },
    },
    'classify': {
        'allOf': [_DESCRIPTOR],
        'properties': {'pi_g': _DESCRIPTOR, 'pair': _PAIR},
    },
    'bound': {
        'type': 'object',
        'required': ['r', 's', 'ramsey_upper_bound', 'fpt_size_cutoff'],
        'properties': {
            'r': _NAT,
            's': _NAT,
            'ramsey_upper_bound': _NAT,
            'fpt_size_cutoff': _NAT,
            'verify': {
                'type': 'object',
                'required': ['n', 'all_forced', 'graphs_checked', 'counterexample'],
                'properties': {
                    'n': _NAT,
                    'all_forced': {'type': 'boolean'},
                    'graphs_checked': _NAT,
                    'counterexample': {'type': ['string', 'null']},
                },
            },
        },
    },
    'props': {
        'type': 'object',
        'required': ['properties'],
        'properties': {'properties': {'type': 'array', 'items': {'type': 'string'}}},
    },
    'reduce': {
        'type': 'object',
        'required': ['graph6', 'sidecar', 'out'],
        'properties': {
            'graph6': {'type': 'string'},
            'sidecar': _SIDECAR,
            'out': {'type': ['string', 'null']},
        },
    },
    'verify-reduction': {
        'type': 'object',
        'required': ['kind', 'pi', 'ks', 'instances', 'failed', 'all_passed', 'records'],
        'properties': {
            'kind': {'enum': ['strong', 'join']},
            'pi': {'type': 'string'},
            'ks': {'type': 'array', 'items': _INT},
            'instances': _NAT,
            'failed': _NAT,
            'all_passed': {'type': 'boolean'},
            'csv': {'type': ['string', 'null']},
            'records': {
                'type': 'array',
                'items': {
                    'type': 'object',
                    'required': ['graph6', 'k', 'alpha', 'target_answer', 'equivalent', 'roundtrip_ok', 'passed'],
                    'properties': {
                        'graph6': {'type': 'string'},
                        'k': _INT,
                        'alpha': _NAT,
                        'target_answer': {'enum': ['Yes', 'No']},
                        'equivalent': {'type': 'boolean'},
                        'roundtrip_ok': {'type': ['boolean', 'null']},
                        'passed': {'type': 'boolean'},
                    },
                },
            },
        },
    },
    'gen': {
        'type': 'object',
        'required': ['class', 'n', 'seed', 'graph6', 'points'],
        'properties': {
            'class': {'type': 'string'},
            'n': _NAT,
            'seed': _NAT,
            'density': {'type': ['number', 'null']},
            'radius': {'type': ['number', 'null']},
            'graph6': {'type': 'string'},
            'points': {
                'anyOf': [
                    {'type': 'array', 'items': {'type': 'array', 'items': _NAT, 'minItems': 2, 'maxItems': 2}},
                    {'type': 'null'},
                ],
            },
            'points_out': {'type': ['string', 'null']},
        },
    },
}

ENVELOPE_SCHEMA: Dict[str, Any] = {
    'type': 'object',
    'required': ['status', 'elapsed_ms'],
    'properties': {
        'status': {'enum': ['ok', 'error']},
        'command': {'type': ['string', 'null']},
        'payload': {'type': ['object', 'null']},
        'elapsed_ms': {'type': 'number', 'minimum': 0},
        'error': {
            'type': 'object',
            'required': ['kind', 'message'],
            'properties': {'kind': {'type': 'string'}, 'message': {'type': 'string'}},
        },
    },
}


def validate_payload(command: str, payload: Dict[str, Any]) -> None:
    """
    Raises:
        InternalError: payload fora do schema do comando.
    """
    schema = PAYLOAD_SCHEMAS.get(command)
    if schema is None:
        raise InternalError(f"sem schema para o comando {command!r}")
    try:
        jsonschema.validate(instance=payload, schema=schema)
    except jsonschema.ValidationError as exc:
        raise InternalError(f"payload de {command} fora do schema: {exc.message}")


def validate_envelope(envelope: Dict[str, Any]) -> None:
    try:
        jsonschema.validate(instance=envelope, schema=ENVELOPE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InternalError(f"envelope fora do schema: {exc.message}")
