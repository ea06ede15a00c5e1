import json

import pytest

from hesse_flow.cli import EXIT_FAIL, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, cmd_preimages, cmd_verify, main
from hesse_flow.config import THREADS_ENV, RunConfig
from hesse_flow.errors import SizeLimit, UsageError

from tests.asserts.asserts import assert_all_pass

DEFAULT_CHECKS = ['pencil-hessian', 'commutation', 'hj-structure', 'h-coordinate', 'quartic',
                  'critical-containment', 'lattice']


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verify_default(capsys):
    code, out = run(capsys, 'verify')
    assert code == EXIT_OK
    assert out.rstrip().endswith('overall: PASS')
    for check_id in DEFAULT_CHECKS:
        assert check_id in out


def test_verify_json_is_reproducible(capsys):
    code, out = run(capsys, 'verify', '-f', 'json')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['status'] == 'PASS'
    assert [c['check'] for c in report['checks']] == DEFAULT_CHECKS
    assert all('wall_time' not in c for c in report['checks'])
    _, again = run(capsys, 'verify', '-f', 'json')
    assert again == out


def test_verify_with_time(capsys):
    _, out = run(capsys, 'verify', '-f', 'json', '--with-time')
    assert all('wall_time' in c for c in json.loads(out)['checks'])


def test_verify_detects_wrong_gamma(capsys):
    code, out = run(capsys, 'verify', '--inject-gamma', '-28', '-f', 'json')
    assert code == EXIT_FAIL
    checks = {c['check']: c for c in json.loads(out)['checks']}
    assert checks['commutation']['status'] == 'FAIL'
    assert checks['commutation']['witness']['counterexample']
    assert checks['hj-structure']['status'] == 'FAIL'
    assert checks['quartic']['status'] == 'PASS'


def test_verify_extended():
    report = cmd_verify(RunConfig('verify', level=2, extended=True))
    assert len(report) == 12
    assert_all_pass(report, 'endpoints', 'structure-constants', 'passport-agreement', 'euclidean-isomorphism',
                    'pattern-derivation')


def test_preimages_of_zero(capsys):
    code, out = run(capsys, 'preimages', '-n', '1', '--value', '0', '-f', 'json')
    assert code == EXIT_OK
    result = json.loads(out)
    assert result['fiber'] == [{'h': [4.0, 0.0], 'degree': 3}]
    assert result['passport'] == '({3}, {2,1}, {2,1})'


def test_preimages_of_infinity():
    result = cmd_preimages(RunConfig('preimages', level=1, value='inf'))
    assert result['fiber'] == [{'h': [0.0, 0.0], 'degree': 2}, {'h': 'inf', 'degree': 1}]


def test_preimages_level_two_text(capsys):
    code, out = run(capsys, 'preimages', '-n', '2', '--value', '1')
    assert code == EXIT_OK
    assert 'passport: ({3,3,3}, {2,2,2,2,1}, {6,2,1})' in out
    # header plus five fiber points
    assert len(out.splitlines()) == 1 + 5 + 1


def test_dessin_json(capsys):
    code, out = run(capsys, 'dessin', '-n', '2', '-f', 'json')
    assert code == EXIT_OK
    d = json.loads(out)
    assert len(d['edges']) == 9
    assert d['passport'] == {'level': 2, 'black': [3, 3, 3], 'white': [2, 2, 2, 2, 1], 'faces': [6, 2, 1]}
    assert d['orientation_convention'] == 'upper-half-plane-positive'


def test_dessin_text(capsys):
    code, out = run(capsys, 'dessin')
    assert code == EXIT_OK
    assert 'edges: 3' in out
    assert 'passport: ({3}, {2,1}, {2,1})' in out


def test_dessin_dot_to_file(capsys, tmp_path):
    target = tmp_path / 'gamma1.dot'
    code, out = run(capsys, 'dessin', '-f', 'dot', '-o', str(target))
    assert code == EXIT_OK
    assert out == ''
    assert target.read_text().startswith('graph "Gamma_1"')


def test_dessin_svg(capsys):
    code, out = run(capsys, 'dessin', '-n', '4', '-f', 'svg')
    assert code == EXIT_OK
    assert out.count('class="int01"') == 81


def test_triangulation_text(capsys):
    code, out = run(capsys, 'triangulation', '-n', '2')
    assert code == EXIT_OK
    assert 'faces: 9' in out
    assert 'euler: 1' in out
    assert 'euler_doubled: 2' in out
    assert 'isomorphic_to_other_model: True' in out


def test_triangulation_euclidean_json(capsys):
    code, out = run(capsys, 'triangulation', '-n', '1', '--model', 'euclidean', '-f', 'json')
    assert code == EXIT_OK
    result = json.loads(out)
    assert len(result['triangles']) == 3
    assert result['triangles'][0]['corners'][0] == ['0', '1/3*sqrt3']
    assert result['isomorphic_to_other_model'] is True


def test_triangulation_html(capsys):
    code, out = run(capsys, 'triangulation', '-n', '1', '-f', 'html', '--scheme', 'blackboard')
    assert code == EXIT_OK
    assert 'Triangulation T_1' in out


def test_trace_json(capsys):
    code, out = run(capsys, 'trace', '-n', '1', '-f', 'json')
    assert code == EXIT_OK
    assert json.loads(out)['census'] == {'real': 5, 'upper': 2, 'lower': 2}


def test_passport(capsys):
    code, out = run(capsys, 'passport', '-n', '3', '-f', 'json')
    assert code == EXIT_OK
    result = json.loads(out)
    assert result['agree'] is True
    assert result['analytic'] == result['combinatorial']
    assert result['euler'] == 2


@pytest.mark.parametrize('argv,code', [
    (['frobnicate'], EXIT_USAGE),
    (['verify', '-f', 'dot'], EXIT_USAGE),
    (['dessin', '-n', '0'], EXIT_USAGE),
    (['triangulation', '--model', 'analytic'], EXIT_USAGE),
    (['trace', '--samples-per-edge', '4'], EXIT_USAGE),
    (['dessin', '-n', '13'], EXIT_LIMIT),
    (['dessin', '-n', '9', '-f', 'svg'], EXIT_LIMIT),
    (['triangulation', '-n', '10', '--model', 'euclidean'], EXIT_LIMIT),
    (['trace', '-n', '5'], EXIT_LIMIT),
    (['--help'], EXIT_OK),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, '3')
    assert RunConfig('trace').threads == 3
    monkeypatch.setenv(THREADS_ENV, 'many')
    with pytest.raises(UsageError):
        RunConfig('trace')
    assert main(['trace']) == EXIT_USAGE


def test_run_config():
    cfg = RunConfig('dessin', level=3, format='dot', threads=1).validate()
    assert cfg.params()['level'] == 3
    assert 'inject_gamma' not in cfg.params()
    assert 'seed' not in cfg.params()
    with pytest.raises(UsageError):
        RunConfig('dessin', colour='red')
    with pytest.raises(SizeLimit):
        RunConfig('preimages', level=11, threads=1).validate()
