from __future__ import annotations

import json

import pytest

from fuscat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_labels_count(capsys):
    code, out, _ = run(capsys, 'labels', '--family', 'sp-even', '--n', '3', '--k', '2')
    assert code == 0
    data = json.loads(out)
    assert data['count'] == 10
    assert data['labels'][0] == []


def test_labels_csv(capsys):
    code, out, _ = run(capsys, 'labels', '--n', '1', '--k', '1', '--format', 'csv')
    assert code == 0
    assert out.splitlines() == ['index,label', '0,()', '1,(1)']


def test_odd_family_ell_is_derived(capsys):
    code, out, _ = run(capsys, 'labels', '--family', 'so-odd', '--n', '1', '--k', '2')
    assert code == 0
    assert json.loads(out)['spec'] == {'family': 'so-odd', 'rank': 2, 'ell': 7, 'a': 1}


def test_modular_data_json(capsys):
    code, out, _ = run(capsys, 'modular-data', '--n', '1', '--k', '1')
    data = json.loads(out)
    assert code == 0
    assert data['twists'][1] == {'re': 0.0, 'im': 1.0}
    assert data['h'][1] == {'num': 1, 'den': 4}


def test_fusion_csv(capsys):
    code, out, _ = run(capsys, 'fusion', '--n', '1', '--k', '2', '--format', 'csv')
    assert code == 0
    assert '(1),(1),(2),1' in out.splitlines()


def test_verify_duality_exit_zero(capsys):
    code, out, _ = run(capsys, 'verify', 'duality', '--n', '2', '--k', '3')
    assert code == 0
    assert json.loads(out)['passed'] is True


def test_verify_odd_case(capsys):
    code, out, _ = run(capsys, 'verify', 'duality', '--odd', '--case', '2', '--n', '1', '--k', '2')
    assert code == 0
    assert json.loads(out)['passed'] is True


def test_branch_row(capsys):
    code, out, _ = run(capsys, 'branch', '--n', '7', '--k', '6', '--sector', 'L+',
                       '--format', 'csv')
    assert code == 0
    assert 'L+,(6,6,5,5,5,5,2),(5,1,1,1)' in out.splitlines()


@pytest.mark.parametrize('argv', [
    ('labels', '--family', 'sp-odd'),
    ('verify', 'duality', '--n', '1'),
    ('verify', 'duality', '--n', '1', '--k', '1', '--case', '1'),
    ('labels', '--family', 'sp-even', '--n', '2', '--ell', '7'),
    ('frobnicate',),
    ('branch', '--n', '9', '--k', '9'),
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_output_is_deterministic(capsys):
    argv = ('modular-data', '--n', '2', '--k', '2')
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_tolerance_from_environment(capsys, monkeypatch):
    monkeypatch.setenv('FUSCAT_TOL', '1e-30')
    code, out, _ = run(capsys, 'verify', 'etale', '--n', '2', '--k', '2')
    assert code == 1
    assert json.loads(out)['passed'] is False
    monkeypatch.setenv('FUSCAT_TOL', 'abc')
    assert run(capsys, 'verify', 'etale', '--n', '2', '--k', '2')[0] == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / 'labels.json'
    code, out, _ = run(capsys, 'labels', '--n', '1', '--k', '2', '--out', str(target))
    assert code == 0 and out == ''
    assert json.loads(target.read_text())['count'] == 3


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, 'verify', 'all', '--max-sum', '3')
    data = json.loads(out)
    assert code == 0 and data['passed'] is True
    assert [c['number'] for c in data['criteria']] == list(range(1, 9))
