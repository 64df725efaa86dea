from typing import Any, Sequence, Union
import logging
import numpy as np
from scipy.special import comb



def finite_differences(values: Sequence[int]) -> list[list[int]]:
    """
    The rows values, Delta values, Delta^2 values, ... down to length 1.
    """
    rows = [list(int(v) for v in values)]
    while len(rows[-1]) > 1:
        rows.append(np.diff(np.array(rows[-1], dtype=object)).tolist())
    return rows


def extrapolate(values: Sequence[int], degree: int) -> int:
    """
    Next value of the polynomial of the given degree through the trailing
    values, in Newton form sum_k C(n, k) Delta^k[0].
    """
    tail = list(values)[-(degree + 1):]
    rows = finite_differences(tail)
    n = len(tail)
    return int(sum(comb(n, k, exact=True) * rows[k][0] for k in range(len(rows))))


def trailing_run(row: Sequence[int]) -> int:
    """
    Number of trailing entries equal to the last one.
    """
    run = 0
    for v in reversed(row):
        if v != row[-1]:
            break
        run += 1
    return run


def support_dimension(dims: Sequence[int], skip: int=0, stable: int=2) -> dict[str, Any]:
    """
    Eventual growth degree of a dimension sequence: the least m whose m-th
    finite differences end in at least `stable` equal nonzero entries.
    A sequence ending in `stable` zeros has empty support. Only the stable
    tail is used, so start-up values before it do not matter; 'from' is
    the index (after skip) where that tail begins.
    """
    values = list(dims)[skip:]
    result: dict[str, Any] = {'values': values, 'dimension': None, 'verdict': None, 'next': None, 'from': None}
    if len(values) == 0 or all(v == 0 for v in values[-stable:]):
        result['verdict'] = 'empty'
        result['next'] = 0
        result['from'] = len(values) - trailing_run(values) if len(values) > 0 else 0
        return result
    dimension: Union[int, None] = None
    for m, row in enumerate(finite_differences(values)):
        if len(row) < stable:
            break
        run = trailing_run(row)
        if run >= stable and row[-1] != 0:
            dimension = m
            result['from'] = len(values) - run - m
            break
    if dimension is None:
        logging.info('Finite differences of %s do not stabilize', values)
        result['verdict'] = 'inconclusive'
        return result
    result['dimension'] = dimension
    result['verdict'] = 'ok'
    result['next'] = extrapolate(values, dimension)
    return result
