import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import pandas

from hesse_flow.errors import IdentityFailed
from hesse_flow.utils import num2str


_logger = logging.getLogger(__name__)

PASS = 'PASS'
FAIL = 'FAIL'


@dataclass
class ProofReport:
    check_id: str
    anchor: str
    status: str = PASS
    witness: Dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, with_time: bool = False) -> Dict[str, object]:
        d = {
            'check': self.check_id,
            'anchor': self.anchor,
            'status': self.status,
            'witness': {k: str(v) for k, v in self.witness.items()},
        }
        if with_time:
            d['wall_time'] = float(num2str(self.wall_time))
        return d


def run_check(check_id: str, anchor: str, fn: Callable[[], ProofReport]) -> ProofReport:
    """runs one check, turning an IdentityFailed into a FAIL row that carries the counterexample"""
    start = time.perf_counter()
    try:
        report = fn()
    except IdentityFailed as e:
        _logger.info(f'Check {check_id} failed: {e}')
        report = ProofReport(check_id, anchor, FAIL, {'counterexample': str(e.difference)})
    report.wall_time = time.perf_counter() - start
    _logger.info(f'{report.check_id}: {report.status} ({report.wall_time:.3f}s)')
    return report


class VerificationReport:
    def __init__(self, checks: List[ProofReport] = None):
        self.checks: List[ProofReport] = list(checks or [])

    def add(self, report: ProofReport):
        self.checks.append(report)

    @property
    def status(self) -> str:
        return PASS if self.checks and all(c.passed for c in self.checks) else FAIL

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, check_id: str) -> ProofReport:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self, with_time: bool = False) -> Dict[str, object]:
        return {'status': self.status, 'checks': [c.to_dict(with_time) for c in self.checks]}

    def to_pandas(self, with_time: bool = False) -> pandas.DataFrame:
        columns = ['check', 'status', 'anchor'] + (['wall_time'] if with_time else [])
        rows = []
        for c in self.checks:
            row = {'check': c.check_id, 'status': c.status, 'anchor': c.anchor}
            if with_time:
                row['wall_time'] = num2str(c.wall_time)
            rows.append(row)
        return pandas.DataFrame(rows, columns=columns)

    def to_text(self) -> str:
        lines = [self.to_pandas().to_string(index=False), '']
        for c in self.checks:
            for k, v in c.witness.items():
                lines.append(f'{c.check_id}.{k}: {v}')
        lines.append(f'overall: {self.status}')
        return '\n'.join(lines) + '\n'
