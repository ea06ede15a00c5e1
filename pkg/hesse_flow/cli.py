import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple

from hesse_flow import crosscheck
from hesse_flow.bokeh.document import FigureDocument
from hesse_flow.config import COMMANDS, FORMATS, MODELS, VALUES, RunConfig
from hesse_flow.dessins import build_Tn, combinatorial_passport, dessin, double, ribbon_isomorphic
from hesse_flow.emit import (drawing_of_complex, drawing_of_dessin, drawing_of_geometric, drawing_of_trace, dumps,
                             render_dot, render_svg)
from hesse_flow.errors import (ContinuationJump, DedupAmbiguity, HesseFlowError, RootFindingDiverged, SizeLimit,
                               UsageError)
from hesse_flow.lattes import build_geometric_Tn, lattice_consistency_check, svg_layout
from hesse_flow.lattes.geometry import LATTICE_ANCHOR
from hesse_flow.pencil import (commutation_check, derive_structure_constants, endpoint_invariant_check,
                               h_coordinate_suite, pencil_hessian_identity, verify_Hj_structure)
from hesse_flow.pencil.identities import ANCHORS
from hesse_flow.report import VerificationReport, run_check
from hesse_flow.schemes import SCHEMES
from hesse_flow.sphere import SpherePoint, analytic_passport, iterated_preimages, sorted_leaves, trace_preimage_curves
from hesse_flow.sphere import quartic
from hesse_flow.sphere.dynamics import CONTAINMENT_ANCHOR, critical_containment_suite
from hesse_flow.utils import fmt_complex, num2str, passport2str, records_to_pandas


_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

# isomorphism between the two triangulation models is checked up to this level
CROSS_MODEL_LEVEL = 6

Output = Tuple[str, int]


def _scheme(cfg: RunConfig):
    return SCHEMES[cfg.scheme]()


def _html(title: str, cfg: RunConfig, drawings, facts: Dict[str, object]) -> str:
    doc = FigureDocument(title, _scheme(cfg))
    doc.params = cfg.params()
    doc.facts = facts
    for drawing in drawings:
        doc.add_drawing(drawing)
    return doc.to_html()


def cmd_verify(cfg: RunConfig) -> VerificationReport:
    gamma = -27 if cfg.inject_gamma is None else cfg.inject_gamma
    checks: List[Tuple[str, str, Callable]] = [
        ('pencil-hessian', ANCHORS['pencil-hessian'], pencil_hessian_identity),
        ('commutation', ANCHORS['commutation'], lambda: commutation_check(gamma)),
        ('hj-structure', ANCHORS['hj-structure'], lambda: verify_Hj_structure(gamma)),
        ('h-coordinate', ANCHORS['h-coordinate'], h_coordinate_suite),
        ('quartic', quartic.ANCHOR, quartic.quartic_identity_check),
        ('critical-containment', CONTAINMENT_ANCHOR, lambda: critical_containment_suite(cfg.level, cfg.dedup_tol)),
        ('lattice', LATTICE_ANCHOR, lattice_consistency_check),
    ]
    if cfg.extended:
        cross_level = min(cfg.level, CROSS_MODEL_LEVEL)
        checks += [
            ('endpoints', ANCHORS['endpoints'], endpoint_invariant_check),
            ('structure-constants', ANCHORS['structure-constants'], derive_structure_constants),
            ('passport-agreement', crosscheck.ANCHORS['passport-agreement'],
             lambda: crosscheck.passport_agreement_check(cross_level)),
            ('euclidean-isomorphism', crosscheck.ANCHORS['euclidean-isomorphism'],
             lambda: crosscheck.euclidean_isomorphism_check(cross_level)),
            ('pattern-derivation', crosscheck.ANCHORS['pattern-derivation'],
             lambda: crosscheck.pattern_derivation_check(cfg.samples_per_edge, cfg.threads)),
        ]

    report = VerificationReport()
    for check_id, anchor, fn in checks:
        report.add(run_check(check_id, anchor, fn))
    return report


def _verify(cfg: RunConfig) -> Output:
    report = cmd_verify(cfg)
    code = EXIT_OK if report.passed else EXIT_FAIL
    if cfg.format == 'json':
        return dumps(report.to_dict(cfg.with_time)), code
    return report.to_text(), code


def cmd_preimages(cfg: RunConfig) -> Dict[str, object]:
    c = SpherePoint.from_value(None if cfg.value == 'inf' else complex(cfg.value))
    leaves = sorted_leaves(iterated_preimages(c, cfg.level, cfg.dedup_tol))
    passport = analytic_passport(cfg.level, cfg.dedup_tol)
    return {
        'level': cfg.level,
        'value': cfg.value,
        'fiber': [{'h': fmt_complex(leaf.point.value), 'degree': leaf.local_degree} for leaf in leaves],
        'passport': passport2str(passport.partitions()),
    }


def _preimages(cfg: RunConfig) -> Output:
    result = cmd_preimages(cfg)
    if cfg.format == 'json':
        return dumps(result), EXIT_OK
    rows = [{'h': 'inf' if f['h'] == 'inf' else f'{num2str(f["h"][0])}{f["h"][1]:+.12g}j', 'degree': f['degree']}
            for f in result['fiber']]
    table = records_to_pandas(rows, ['h', 'degree']).to_string(index=False)
    return f'{table}\npassport: {result["passport"]}\n', EXIT_OK


def cmd_dessin(cfg: RunConfig) -> str:
    d = dessin(cfg.level).validate()
    passport = combinatorial_passport(d)
    if cfg.format == 'json':
        return dumps(d.to_dict())
    elif cfg.format == 'dot':
        return render_dot(d, _scheme(cfg))
    elif cfg.format in ('svg', 'html'):
        drawing = drawing_of_dessin(d, svg_layout(d))
        if cfg.format == 'svg':
            return render_svg(drawing, _scheme(cfg))
        return _html(f'Dessin Gamma_{cfg.level}', cfg, [drawing], {
            'edges': len(d.edges), 'passport': passport2str(passport.partitions())})
    lines = [f'level: {d.level}', f'black: {len(d.black)}', f'white: {len(d.white)}', f'edges: {len(d.edges)}',
             f'faces: {len(d.faces())}', f'passport: {passport2str(passport.partitions())}']
    lines += [f'rotation {v}: {",".join(d.rotation[v])}' for v in d.black + d.white]
    return '\n'.join(lines) + '\n'


def cmd_triangulation(cfg: RunConfig) -> str:
    n = cfg.level
    geometric = None
    if cfg.model == 'euclidean':
        geometric = build_geometric_Tn(n)
        c = geometric.complex
    else:
        c = build_Tn(n).validate()

    facts = {'model': cfg.model, 'faces': len(c.faces), 'euler': c.euler, 'euler_doubled': double(c).euler}
    if n <= CROSS_MODEL_LEVEL:
        other = build_Tn(n) if geometric is not None else build_geometric_Tn(n).complex
        facts['isomorphic_to_other_model'] = ribbon_isomorphic(c, other).isomorphic

    if cfg.format == 'json':
        result = dict(c.to_dict(), **facts)
        if geometric is not None:
            result['triangles'] = [{'id': t.id, 'corners': [[str(p.x), str(p.y)] for p in t.corners],
                                    'orientation': '+' if t.orientation > 0 else '-'} for t in geometric.triangles]
        return dumps(result)
    elif cfg.format in ('svg', 'html'):
        drawing = drawing_of_geometric(geometric) if geometric is not None else drawing_of_complex(c, svg_layout(c))
        if cfg.format == 'svg':
            return render_svg(drawing, _scheme(cfg))
        return _html(f'Triangulation T_{n}', cfg, [drawing], facts)
    return '\n'.join(f'{k}: {v}' for k, v in facts.items()) + '\n'


def cmd_trace(cfg: RunConfig) -> str:
    trace = trace_preimage_curves(cfg.level, cfg.samples_per_edge, cfg.continuation_factor, cfg.dedup_tol,
                                  cfg.threads)
    if cfg.format == 'json':
        return dumps(trace.to_dict())
    elif cfg.format in ('svg', 'html'):
        scheme = _scheme(cfg)
        drawing = drawing_of_trace(trace, scheme.trace_x_range, scheme.trace_y_range, scheme.trace_clip)
        if cfg.format == 'svg':
            return render_svg(drawing, scheme)
        return _html(f'Preimage of the real line, level {cfg.level}', cfg, [drawing], trace.census())
    rows = [{'decoration': p.decoration, 'from': p.start_type, 'to': p.end_type, 'half': p.half,
             'start': str(fmt_complex(p.start.value)), 'end': str(fmt_complex(p.end.value))}
            for p in trace.polylines]
    table = records_to_pandas(rows, ['decoration', 'from', 'to', 'half', 'start', 'end']).to_string(index=False)
    census = ', '.join(f'{k}: {v}' for k, v in trace.census().items())
    return f'{table}\n{census}\n'


def cmd_passport(cfg: RunConfig) -> Dict[str, object]:
    analytic = analytic_passport(cfg.level, cfg.dedup_tol)
    combinatorial = combinatorial_passport(dessin(cfg.level))
    return {
        'level': cfg.level,
        'analytic': passport2str(analytic.partitions()),
        'combinatorial': passport2str(combinatorial.partitions()),
        'euler': analytic.euler_count,
        'agree': analytic.partitions() == combinatorial.partitions(),
    }


def _passport(cfg: RunConfig) -> Output:
    result = cmd_passport(cfg)
    code = EXIT_OK if result['agree'] else EXIT_FAIL
    if cfg.format == 'json':
        return dumps(result), code
    return '\n'.join(f'{k}: {v}' for k, v in result.items()) + '\n', code


_HANDLERS: Dict[str, Callable[[RunConfig], Output]] = {
    'verify': _verify,
    'preimages': _preimages,
    'dessin': lambda cfg: (cmd_dessin(cfg), EXIT_OK),
    'triangulation': lambda cfg: (cmd_triangulation(cfg), EXIT_OK),
    'trace': lambda cfg: (cmd_trace(cfg), EXIT_OK),
    'passport': _passport,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='hesse-flow',
                                     description='The hessian map on elliptic curve moduli: identities, '
                                                 'preimages, dessins and triangulations')
    sub = parser.add_subparsers(dest='command', required=True)
    for command in COMMANDS:
        p = sub.add_parser(command)
        p.add_argument('-n', '--level', type=int, default=None, help='iterate level (default 1)')
        p.add_argument('-f', '--format', choices=FORMATS[command], default=None, help='output format (default text)')
        p.add_argument('-o', '--output', default=None, help='output file (default stdout)')
        p.add_argument('--threads', type=int, default=None, help='worker threads (default $HESSE_FLOW_THREADS or 1)')
        p.add_argument('--scheme', choices=sorted(SCHEMES), default=None, help='drawing scheme')
        p.add_argument('--dedup-tol', dest='dedup_tol', type=float, default=None,
                       help='chordal tolerance for root deduplication (default 1e-8)')
        p.add_argument('-v', '--verbose', action='count', default=0)
        if command == 'preimages':
            p.add_argument('--value', choices=VALUES, default=None, help='critical value to pull back (default 0)')
        if command in ('trace', 'verify'):
            p.add_argument('--samples-per-edge', dest='samples_per_edge', type=int, default=None)
        if command == 'trace':
            p.add_argument('--continuation-factor', dest='continuation_factor', type=float, default=None,
                           help='jump threshold as a multiple of the median step (default 8)')
        if command == 'triangulation':
            p.add_argument('--model', choices=MODELS, default=None, help='combinatorial or euclidean')
        if command == 'verify':
            p.add_argument('--extended', action='store_true', default=None,
                           help='add the endpoint, structure constant and cross-engine checks')
            p.add_argument('--with-time', dest='with_time', action='store_true', default=None,
                           help='include wall times (output is then not reproducible)')
            p.add_argument('--inject-gamma', dest='inject_gamma', type=int, default=None, help=argparse.SUPPRESS)
    return parser


def _write(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, 'w') as f:
            f.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')

    try:
        cfg = RunConfig.from_args(args).validate()
        text, code = _HANDLERS[cfg.command](cfg)
    except UsageError as e:
        _logger.error(str(e))
        return EXIT_USAGE
    except (SizeLimit, DedupAmbiguity, ContinuationJump, RootFindingDiverged) as e:
        _logger.error(str(e))
        return EXIT_LIMIT
    except HesseFlowError as e:
        _logger.error(f'{type(e).__name__}: {e}')
        return EXIT_FAIL

    _write(text, cfg.output)
    return code


if __name__ == '__main__':
    sys.exit(main())
