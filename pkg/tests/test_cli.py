import io
import json

import pytest

from ftpolytope.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err

def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, '--json')
    return code, json.loads(out)

########################################################################################################################
# analyze

def test_analyze_counterexample(capsys):
    code, report = run_json(capsys, 'analyze', '3,3,4,2')
    assert code == 0
    assert report['census']['vertices'] == 23
    assert report['census']['degenerate'] == 1
    (v,) = report['degenerate']
    assert v['coords'] == ['1', '1', '0', '1/390']
    assert set(v['active']) == {'x_1<=1', 'x_2<=1', 'x_3>=0', 'K1', 'K2'}
    assert v['degree'] == 6
    assert report['degrees'] == {'4': 22, '6': 1}
    assert report['constants']['epsilon'] == '1/26'
    assert report['constants']['k1_rhs'] == '833/26'
    assert report['partition'] == {'exists': True, 'subset': [1, 2], 'sums': [6, 6]}
    simplicity = next(lemma for lemma in report['lemmas'] if lemma['lemma'] == 'Simplicity')
    assert simplicity['applicable'] is False
    assert all(lemma['holds'] for lemma in report['lemmas'])

def test_analyze_control(capsys):
    code, report = run_json(capsys, 'analyze', '2,2,3,1')
    assert code == 0
    assert report['census']['vertices'] == 24
    assert report['census']['degenerate'] == 0
    assert report['degrees'] == {'4': 24}

@pytest.mark.parametrize('flag, instance, added', [
    (['--preprocess'], [4, 4, 5, 3], 1),
    (['--preprocess', 'up'], [4, 4, 5, 3], 1),
    (['--preprocess', 'down'], [2, 2, 3, 1], -1),
])
def test_analyze_preprocess(capsys, flag, instance, added):
    code, report = run_json(capsys, 'analyze', '3,3,4,2', *flag)
    assert code == 0
    assert report['instance'] == instance
    assert report['input'] == [3, 3, 4, 2]
    assert report['transforms'] == {'shift': 0, 'added': added}
    assert report['census']['degenerate'] == 0

def test_analyze_translates(capsys, tmp_path):
    path = tmp_path / 'negative.txt'
    path.write_text('-1 -1 0 -2\n')
    code, report = run_json(capsys, 'analyze', str(path))
    assert code == 0
    assert report['instance'] == [2, 2, 3, 1]
    assert report['transforms']['shift'] == 3

def test_analyze_table(capsys):
    code, out, _ = run(capsys, 'analyze', '3,3,4,2')
    assert code == 0
    assert 'vertices      23' in out
    assert '(1, 1, 0, 1/390) degree 6' in out
    assert 'N/A   Simplicity' in out
    assert 'partition     YES {1, 2} sums 6|6' in out
    lines = out.splitlines()
    (ecc,) = [line for line in lines if line.startswith('eccentricity  ')]
    assert sum(int(cell.split(':')[1]) for cell in ecc.split()[1:]) == 23

def test_analyze_table_pentagon(capsys):
    code, out, _ = run(capsys, 'analyze', '1,1')
    assert code == 0
    assert 'diameter      2, monotone diameter 2' in out
    assert 'eccentricity  2:5' in out.splitlines()

def test_json_is_deterministic(capsys):
    assert run(capsys, 'analyze', '4,2,2,4', '--json') == run(capsys, 'analyze', '4,2,2,4', '--json')

def test_instance_from_file(capsys, tmp_path):
    path = tmp_path / 'instance.json'
    path.write_text('{"elements": [3, 3, 4, 2]}')
    code, report = run_json(capsys, 'analyze', str(path))
    assert code == 0 and report['census']['vertices'] == 23

def test_instance_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('2 2 3 1\n'))
    code, report = run_json(capsys, 'analyze', '-')
    assert code == 0 and report['census']['vertices'] == 24

def test_instance_from_ine(capsys, tmp_path):
    path = tmp_path / 'p.ine'
    assert run(capsys, 'export', '3,3,4,2', '--out', str(path))[0] == 0
    code, report = run_json(capsys, 'analyze', str(path))
    assert code == 0 and report['instance'] == [3, 3, 4, 2]

########################################################################################################################
# exit codes

@pytest.mark.parametrize('argv, code', [
    (['analyze', '3,x,4,2'], 2),
    (['analyze', '1,2,3'], 2),
    (['analyze', ''], 2),
    (['analyze', '3,3,4,2', '--max-dim', '2'], 3),
    (['solve', ','.join(['1'] * 26)], 3),
    (['analyze', '1,2', '--preprocess', 'down'], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code

def test_error_message(capsys):
    code, out, err = run(capsys, 'analyze', '1,2,3')
    assert code == 2
    assert err.startswith('error: OddCount')
    assert out == ''

def test_max_dim_environment(capsys, monkeypatch):
    monkeypatch.setenv('FT_MAX_DIM', '2')
    assert run(capsys, 'analyze', '3,3,4,2')[0] == 3
    assert run(capsys, 'analyze', '3,3,4,2', '--max-dim', '4')[0] == 0

@pytest.mark.parametrize('argv', [
    ['frobnicate'],
    ['analyze', '3,3,4,2', '--preprocess', 'sideways'],
    ['check-lemmas', '--sizes', '3'],
    ['check-lemmas', '--sizes', '2,4', '--planted'],
    ['check-lemmas', '--count', '-1'],
])
def test_argparse_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2

########################################################################################################################
# export

def test_export_ine(capsys, tmp_path):
    path = tmp_path / 'p.ine'
    code, out, _ = run(capsys, 'export', '3,3,4,2', '--format', 'ine', '--out', str(path))
    assert code == 0 and out == ''
    lines = path.read_text().splitlines()
    assert '10 5 rational' in lines
    assert '833/26 -16 -16 -17 -15' in lines

def test_export_ext(capsys):
    code, out, _ = run(capsys, 'export', '3,3,4,2', '--format', 'ext')
    assert code == 0
    lines = out.splitlines()
    assert '23 5 rational' in lines
    assert '1 1 1 0 1/390' in lines

def test_export_ext_pair(capsys):
    _, out, _ = run(capsys, 'export', '1,1', '--format', 'ext')
    assert '5 3 rational' in out.splitlines()

def test_export_json(capsys):
    code, out, _ = run(capsys, 'export', '3,3,4,2', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert len(data['vertices']) == 23
    assert len(data['edges']) == (22 * 4 + 6) // 2
    assert [v['degree'] for v in data['vertices'] if v['degenerate']] == [6]
    assert data['constraints'][8] == {'label': 'K1', 'coeffs': ['16', '16', '17', '15'], 'rhs': '833/26'}

def test_export_refuses_above_cap(capsys, tmp_path):
    path = tmp_path / 'p.ext'
    assert run(capsys, 'export', '3,3,4,2', '--format', 'ext', '--max-dim', '2', '--out', str(path))[0] == 3
    assert not path.exists()

########################################################################################################################
# solve

@pytest.mark.parametrize('instance, code, lines', [
    ('3,3,4,2', 0, ['YES: subset {1, 2} (sums 6 | 6)', 'ILP2 optimum 2 (m = 2), witness (1, 1, 0, 0)']),
    ('1,2', 4, ['NO: no exact partition', 'ILP2 optimum 0 (m = 1), witness (0, 0)']),
    ('1,1', 0, ['YES: subset {1} (sums 1 | 1)', 'ILP2 optimum 1 (m = 1), witness (1, 0)']),
])
def test_solve(capsys, instance, code, lines):
    result, out, _ = run(capsys, 'solve', instance)
    assert result == code
    assert out.splitlines() == lines

def test_solve_json(capsys):
    code, data = run_json(capsys, 'solve', '2,2,3,1')
    assert code == 0
    assert data['subset'] == [1, 2] and data['ilp2_optimum'] == 2

########################################################################################################################
# check-lemmas

def test_check_lemmas_empty(capsys):
    code, out, _ = run(capsys, 'check-lemmas', '--count', '0')
    assert code == 0
    assert out.splitlines() == ['0 instances, seed 7']

def test_check_lemmas_passes(capsys):
    code, out, _ = run(capsys, 'check-lemmas', '--count', '10', '--seed', '7', '--sizes', '4,6')
    assert code == 0
    assert '20 instances, seed 7' in out
    assert 'FAIL' not in out

def test_check_lemmas_planted(capsys):
    code, data = run_json(capsys, 'check-lemmas', '--count', '10', '--sizes', '4,6', '--planted')
    assert code == 0
    assert not data['failures']
    theorem = data['matrix']['Theorem']
    assert theorem['4'] == {'applicable': 10, 'passed': 10}
    assert data['matrix']['Simplicity']['6']['applicable'] == 0

def test_check_lemmas_independent_of_concurrency(capsys):
    argv = ['check-lemmas', '--count', '6', '--sizes', '4', '--json']
    assert run(capsys, *argv, '-c', '1') == run(capsys, *argv, '-c', '3')
