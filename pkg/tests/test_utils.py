import pytest

from hesse_flow.errors import SizeLimit
from hesse_flow.utils import (check_fiber_size, check_size, data_range, fmt_complex, fmt_num, nanfilt,
                              paramval2str, partition2str, passport2str, records_to_pandas)


def test_fmt_num():
    assert fmt_num(0.1 + 0.2) == 0.3
    assert fmt_num(1 / 3) == 0.333333333333
    assert fmt_num(0.0) == 0.0


def test_fmt_complex():
    assert fmt_complex(None) == 'inf'
    assert fmt_complex(complex(2, -0.0)) == [2.0, 0.0]


def test_paramval2str():
    assert paramval2str('extended', True) == 'yes'
    assert paramval2str('level', 3) == '3'
    assert paramval2str('dedup_tol', 1e-8) == '1.0e-08'
    assert paramval2str('continuation_factor', 8.0) == '8'
    assert paramval2str('output', None) == 'None'


def test_passport2str():
    assert partition2str((2, 1)) == '{2,1}'
    assert passport2str(((3,), (2, 1), (2, 1))) == '({3}, {2,1}, {2,1})'


def test_nanfilt():
    assert nanfilt([1.0, float('nan'), float('inf'), 2.0]) == [1.0, 2.0]


def test_data_range():
    assert data_range([0.0, 10.0], pad=0.1) == (-1.0, 11.0)
    assert data_range([]) == (-1.0, 1.0)
    lo, hi = data_range([2.0])
    assert lo < 2.0 < hi


def test_check_size():
    check_size('x', 4, 4)
    with pytest.raises(SizeLimit):
        check_size('x', 5, 4)
    with pytest.raises(SizeLimit):
        check_size('x', -1, 4)
    with pytest.raises(SizeLimit):
        check_fiber_size('x', 11)


def test_records_to_pandas():
    df = records_to_pandas([{'h': 1, 'degree': 3}], ['h', 'degree'])
    assert list(df.columns) == ['h', 'degree']
    assert len(df) == 1
