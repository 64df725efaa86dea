from typing import Any
import json
import logging
from ncbgg.Errors import ParseError
from ncbgg.algebra.Presentations import (QuadraticPresentation, exterior, free_algebra, polynomial, quantum_plane,
    relation_rows, skew_polynomial, sklyanin)
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Fields import Field, field_from_json
from ncbgg.module.GradedModule import (GradedModule, module_from_maps, quotient_by_generators, regular_dual,
    regular_module, trivial_module)

FAMILIES = {
    'polynomial': lambda field, data: polynomial(field, _int(data, 'g')),
    'exterior': lambda field, data: exterior(field, _int(data, 'g')),
    'free': lambda field, data: free_algebra(field, _int(data, 'g')),
    'sklyanin': lambda field, data: sklyanin(field, *_params(data, 3)),
    'quantum-plane': lambda field, data: quantum_plane(field, *_params(data, 1)),
    'skew-polynomial': lambda field, data: skew_polynomial(field, *_params(data, 3)),
}

MODULES = ('k', 'regular', 'regular-dual', 'quotient-by-generators')


def _int(data: dict[str, Any], key: str) -> int:
    value = data.get(key, None)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ParseError(f'"{key}" must be a positive integer, got {value!r}')
    return value


def _params(data: dict[str, Any], count: int) -> list[Any]:
    params = data.get('params', None)
    if not isinstance(params, list) or len(params) != count:
        raise ParseError(f'"params" must be a list of {count} field elements, got {params!r}')
    return params


def _vector_terms(field: Field, relation: list[Any], g: int, r: int) -> dict[tuple[int, int], Any]:
    if len(relation) != g * g:
        raise ParseError(f'Relation {r} needs {g * g} coefficients for {g} generators, got {len(relation)}')
    return {(k // g, k % g): field.parse(c) for k, c in enumerate(relation) if field.parse(c) != 0}


def read_json(path: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise ParseError(f'No such file: {path}')
    except json.JSONDecodeError as err:
        raise ParseError(f'{path}, line {err.lineno}, column {err.colno}: {err.msg}')


def dumps(obj: Any) -> str:
    """
    Deterministic JSON: sorted keys, fixed indentation.
    """
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def write_text(path: str, text: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logging.info('Wrote %s', path)


def presentation_from_json(data: Any) -> QuadraticPresentation:
    """
    A presentation is either a named family,
    {"field": {"prime": 13}, "family": "sklyanin", "params": [1, 2, 3]},
    or explicit relations. A relation is a coefficient list of length g^2,
    the coefficient of e_a e_b at position a*g + b,
    {"field": {"prime": 7}, "generators": ["x", "y"], "relations": [[0, 1, 6, 0]]},
    or a map from words "a*b" to coefficients, [{"x*y": 1, "y*x": -1}].
    """
    if not isinstance(data, dict):
        raise ParseError('A presentation must be a JSON object')
    field = field_from_json(data.get('field', None))
    if 'family' in data:
        family = data['family']
        if not family in FAMILIES:
            raise ParseError(f'Unknown family "{family}", expected one of {", ".join(sorted(FAMILIES))}')
        return FAMILIES[family](field, data)
    generators = data.get('generators', None)
    if not isinstance(generators, list) or not all(isinstance(n, str) for n in generators):
        raise ParseError('"generators" must be a list of names')
    g = len(generators)
    index = {n: i for i, n in enumerate(generators)}
    rows = []
    for r, relation in enumerate(data.get('relations', [])):
        if isinstance(relation, list):
            rows.append(_vector_terms(field, relation, g, r))
            continue
        if not isinstance(relation, dict):
            raise ParseError(f'Relation {r} must be a list of {g * g} coefficients or map words "a*b" to coefficients')
        terms = {}
        for word, coeff in relation.items():
            letters = word.split('*')
            if len(letters) != 2 or any(not l in index for l in letters):
                raise ParseError(f'Relation {r}: "{word}" is not a product of two generators')
            key = (index[letters[0]], index[letters[1]])
            terms[key] = field.parse(terms.get(key, 0)) + field.parse(coeff)
        rows.append(terms)
    return QuadraticPresentation(field, generators, relation_rows(field, len(generators), rows))


def presentation_to_json(pres: QuadraticPresentation) -> dict[str, Any]:
    relations = pres.relations.tolist()
    return {'field': pres.field.to_json(), 'generators': list(pres.generators), 'relations': relations}


def read_presentation(path: str) -> QuadraticPresentation:
    return presentation_from_json(read_json(path))


def _window_and_dims(data: dict[str, Any]) -> tuple[int, list[int]]:
    try:
        dims = [int(d) for d in data['piece_dims' if 'piece_dims' in data else 'dims']]
        if 'window' in data:
            lo, hi = (int(t) for t in data['window'])
            if hi - lo + 1 != len(dims):
                raise ParseError(f'The window [{lo}, {hi}] holds {hi - lo + 1} pieces, got {len(dims)} dimensions')
        else:
            lo = int(data['lo'])
    except (KeyError, TypeError, ValueError):
        raise ParseError('An explicit module needs "window" (or "lo"), "piece_dims" (or "dims") and "actions"')
    if any(d < 0 for d in dims):
        raise ParseError(f'Piece dimensions must be nonnegative, got {dims}')
    return lo, dims


def module_from_json(data: Any, alg: TruncatedAlgebra) -> GradedModule:
    """
    Either a builtin ({"builtin": "k", "degree": 0}, "regular",
    "regular-dual", {"builtin": "quotient-by-generators", "generators": [0]})
    or explicit data {"window": [lo, hi], "piece_dims": [...], "actions": [...]},
    where actions[a][k] is the matrix of generator a from degree lo + k.
    {"lo": lo, "dims": [...]} is read the same way.
    """
    if not isinstance(data, dict):
        raise ParseError('A module must be a JSON object')
    if 'builtin' in data:
        kind = data['builtin']
        if kind == 'k':
            return trivial_module(alg, int(data.get('degree', 0)))
        if kind == 'regular':
            return regular_module(alg)
        if kind == 'regular-dual':
            return regular_dual(alg)
        if kind == 'quotient-by-generators':
            indices = data.get('generators', [])
            if any(not isinstance(i, int) or i < 0 or i >= alg.g for i in indices):
                raise ParseError(f'Generator indices must lie in 0..{alg.g - 1}, got {indices!r}')
            return quotient_by_generators(alg, indices)
        raise ParseError(f'Unknown builtin module "{kind}", expected one of {", ".join(MODULES)}')
    lo, dims = _window_and_dims(data)
    actions = data.get('actions', [])
    if not isinstance(actions, list):
        raise ParseError('"actions" must hold one list of matrices per generator')
    if len(actions) != alg.g:
        raise ParseError(f'Expected actions for {alg.g} generators, got {len(actions)}')
    module = module_from_maps(alg, lo, dims, {a: per for a, per in enumerate(actions)}, name=data.get('name', None))
    shift = data.get('shift', 0)
    return module.shift(shift) if shift != 0 else module


def read_module(path: str, alg: TruncatedAlgebra) -> GradedModule:
    return module_from_json(read_json(path), alg)
