"""Checks comparing the analytic, combinatorial and euclidean engines with each other."""
import logging

from hesse_flow.dessins import SubstitutionPattern, build_Tn, combinatorial_passport, dessin, ribbon_isomorphic, t1_pattern
from hesse_flow.errors import IdentityFailed
from hesse_flow.lattes import build_geometric_Tn
from hesse_flow.report import ProofReport
from hesse_flow.sphere import analytic_passport, trace_preimage_curves
from hesse_flow.utils import passport2str


_logger = logging.getLogger(__name__)

ANCHORS = {
    'passport-agreement': 'dessin passport = local degrees of H^(n) over 0, 1, inf',
    'euclidean-isomorphism': 'rep-3 subdivision of the 30-60-90 triangle = combinatorial T_n',
    'pattern-derivation': 'T_1 pattern = level-1 fibers on the real circle plus the two upper arcs',
}


def passport_agreement_check(max_level: int) -> ProofReport:
    check_id = 'passport-agreement'
    witness = {}
    for n in range(1, max_level + 1):
        analytic = analytic_passport(n).partitions()
        combinatorial = combinatorial_passport(dessin(n)).partitions()
        if analytic != combinatorial:
            raise IdentityFailed(check_id, f'level {n}: {passport2str(analytic)} != {passport2str(combinatorial)}')
        witness[f'level_{n}'] = passport2str(analytic)
    return ProofReport(check_id, ANCHORS[check_id], witness=witness)


def euclidean_isomorphism_check(max_level: int) -> ProofReport:
    check_id = 'euclidean-isomorphism'
    witness = {}
    for n in range(0, max_level + 1):
        result = ribbon_isomorphic(build_Tn(n), build_geometric_Tn(n).complex)
        if not result:
            raise IdentityFailed(check_id, f'level {n}: no decoration preserving isomorphism')
        witness[f'level_{n}'] = f'{len(result.witness)} half-edges matched'
    return ProofReport(check_id, ANCHORS[check_id], witness=witness)


def pattern_derivation_check(samples_per_edge: int = 24, threads: int = 1) -> ProofReport:
    check_id = 'pattern-derivation'
    trace = trace_preimage_curves(1, samples_per_edge, threads=threads)
    derived = SubstitutionPattern.from_level_one_curves(trace)
    if derived != t1_pattern():
        raise IdentityFailed(check_id, f'{derived} != {t1_pattern()}')
    return ProofReport(check_id, ANCHORS[check_id], witness={
        'interior_edges': ','.join('-'.join(e) for e in derived.interior_edges),
        'snap_distance': f'{trace.max_snap_distance:.3g}',
    })
