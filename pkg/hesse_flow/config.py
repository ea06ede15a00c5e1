import logging
import os
from typing import Dict, Tuple

from hesse_flow.errors import SizeLimit, UsageError
from hesse_flow.schemes import SCHEMES


_logger = logging.getLogger(__name__)

THREADS_ENV = 'HESSE_FLOW_THREADS'

COMMANDS = ('verify', 'preimages', 'dessin', 'triangulation', 'trace', 'passport')
VALUES = ('0', '1', 'inf')
MODELS = ('combinatorial', 'euclidean', 'analytic')

FORMATS: Dict[str, Tuple[str, ...]] = {
    'verify': ('text', 'json'),
    'preimages': ('text', 'json'),
    'dessin': ('text', 'json', 'dot', 'svg', 'html'),
    'triangulation': ('text', 'json', 'svg', 'html'),
    'trace': ('text', 'json', 'svg', 'html'),
    'passport': ('text', 'json'),
}

# (lowest level, highest level) per command
LEVELS: Dict[str, Tuple[int, int]] = {
    'verify': (1, 6),
    'preimages': (1, 10),
    'dessin': (1, 12),
    'triangulation': (0, 12),
    'trace': (0, 4),
    'passport': (1, 10),
}

# pictures stop earlier than the structures themselves
DRAWING_LEVEL_LIMIT = 8
EUCLIDEAN_LEVEL_LIMIT = 9


def threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise UsageError(f'{THREADS_ENV}={raw!r} is not an integer')
    if threads < 1:
        raise UsageError(f'{THREADS_ENV} must be positive, got {threads}')
    return threads


class RunConfig:
    def __init__(self, command: str = 'verify', **kwargs):
        self.command = command
        self.level = 1
        self.value = '0'
        self.model = 'combinatorial'
        self.format = 'text'
        self.output = None  # stdout

        self.dedup_tol = 1e-8
        self.continuation_factor = 8.0
        self.samples_per_edge = 24
        self.threads = None  # resolved from the environment

        self.scheme = 'scheme'
        self.extended = False
        self.with_time = False
        # property tests draw from random.Random(seed); no command draws random numbers
        self.seed = 0
        # mutation hook for the commutation checks
        self.inject_gamma = None

        for name, value in kwargs.items():
            if not hasattr(self, name):
                raise UsageError(f'Unknown configuration option "{name}"')
            if value is not None:
                setattr(self, name, value)
        if self.threads is None:
            self.threads = threads_from_env()

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        options = {k: v for k, v in vars(args).items() if k not in ('command', 'verbose', 'func')}
        return cls(args.command, **options)

    def validate(self) -> 'RunConfig':
        if self.command not in COMMANDS:
            raise UsageError(f'Unknown command "{self.command}"')
        if self.format not in FORMATS[self.command]:
            raise UsageError(f'Format "{self.format}" is not supported by {self.command}, '
                             f'use one of {", ".join(FORMATS[self.command])}')
        if self.value not in VALUES:
            raise UsageError(f'Value must be one of {", ".join(VALUES)}, got "{self.value}"')
        if self.model not in MODELS:
            raise UsageError(f'Model must be one of {", ".join(MODELS)}, got "{self.model}"')
        if self.command == 'triangulation' and self.model == 'analytic':
            raise UsageError('Triangulations are built by the combinatorial or the euclidean model')
        if self.dedup_tol <= 0 or self.continuation_factor <= 0:
            raise UsageError('Tolerances must be positive')
        if self.samples_per_edge < 8:
            raise UsageError(f'At least 8 samples per edge are needed, got {self.samples_per_edge}')
        if self.scheme not in SCHEMES:
            raise UsageError(f'Unknown scheme "{self.scheme}", use one of {", ".join(sorted(SCHEMES))}')
        if self.threads < 1:
            raise UsageError(f'Thread count must be positive, got {self.threads}')

        lowest, highest = LEVELS[self.command]
        if self.level < lowest:
            raise UsageError(f'{self.command} needs a level of at least {lowest}, got {self.level}')
        if self.command == 'triangulation' and self.model == 'euclidean':
            highest = EUCLIDEAN_LEVEL_LIMIT
        if self.format in ('svg', 'html') and self.command in ('dessin', 'triangulation'):
            highest = min(highest, DRAWING_LEVEL_LIMIT)
        if self.level > highest:
            raise SizeLimit(f'{self.command} is limited to level {highest} in format {self.format}, got {self.level}')
        return self

    def params(self) -> Dict[str, object]:
        """the options shown in reports and figure metadata"""
        return {k: v for k, v in vars(self).items() if k not in ('output', 'inject_gamma', 'with_time', 'seed')}

    def __repr__(self):
        return f'RunConfig({self.params()})'
