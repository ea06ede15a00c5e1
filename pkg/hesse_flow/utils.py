import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas

from hesse_flow.errors import SizeLimit


_logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def fmt_num(value: float) -> float:
    """rounds a float to 12 significant digits so emitted numbers are stable across runs"""
    if value == 0 or not math.isfinite(value):
        return value
    return float(f'{value:.{SIGNIFICANT_DIGITS}g}')


def fmt_complex(value) -> object:
    """infinity is emitted as the string "inf", finite values as [re, im]"""
    if value is None:
        return 'inf'
    return [fmt_num(value.real) + 0.0, fmt_num(value.imag) + 0.0]


def num2str(value: float) -> str:
    return f'{value:.{SIGNIFICANT_DIGITS}g}'


def paramval2str(name, value):
    if value is None:
        return 'None'
    elif isinstance(value, str):
        return value
    elif isinstance(value, bool):
        return 'yes' if value else 'no'
    elif isinstance(value, int):
        return str(value)
    elif isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    elif isinstance(value, type):
        return value.__name__
    elif name.endswith('tol'):
        return f'{value:.1e}'
    else:
        return num2str(value)


def partition2str(partition: Sequence[int]) -> str:
    return '{' + ','.join(str(p) for p in partition) + '}'


def passport2str(passport: Tuple[Sequence[int], Sequence[int], Sequence[int]]) -> str:
    return '(' + ', '.join(partition2str(p) for p in passport) + ')'


def nanfilt(x: List) -> List:
    """filters all NaN and infinite values from a list"""
    return [value for value in x if math.isfinite(value)]


def check_size(what: str, n: int, limit: int):
    if n < 0:
        raise SizeLimit(f'{what}: level must be non-negative, got {n}')
    if n > limit:
        raise SizeLimit(f'{what}: level {n} exceeds the limit {limit}')


def check_fiber_size(what: str, n: int, max_points: int = 10 ** 5):
    if 3 ** n > max_points:
        raise SizeLimit(f'{what}: 3^{n} = {3 ** n} points exceed the limit {max_points}')


def records_to_pandas(records: Iterable[Dict[str, object]], columns: Optional[List[str]] = None) -> pandas.DataFrame:
    df = pandas.DataFrame(list(records), columns=columns)
    _logger.debug(f'Built table with {len(df)} rows and columns {list(df.columns)}')
    return df


def data_range(values: List[float], pad: float = 0.05) -> Tuple[float, float]:
    finite = nanfilt(values)
    if not finite:
        return -1.0, 1.0
    lo, hi = min(finite), max(finite)
    diff = ((hi - lo) or abs(lo) or 1.0) * pad
    return lo - diff, hi + diff
