"""Command-line interface: ``fuscat {labels,modular-data,fusion,branch,verify} ...``.

Exit status is 0 on success, 1 when a verification fails (the JSON report is still
written to stdout) and 2 on usage errors.  Floats are printed with 12 significant
digits, so output is byte-identical across runs.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

import numpy as np

from . import acceptance
from .branching import SECTORS, branching_table, verify_branching, verify_etale_dims
from .duality import verify_sp_so_odd, verify_sp_sp
from .fusionring import fusion_table, verify_modularity
from .modular import DEFAULT_TOL, modular_data, so_level1_data
from .rootdata import CategorySpec, Family, label_set

FAMILIES = [f.value for f in Family]
VERIFY_TARGETS = ('duality', 'duality-odd', 'branching', 'etale', 'modularity', 'all')


class UsageError(Exception):
    pass


def _clean(obj):
    """JSON-ready copy with floats at 12 significant digits."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {'re': _clean(obj.real), 'im': _clean(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return str(x)
        x = float(f'{x:.12g}')
        return 0.0 if x == 0 else x
    return obj if obj is None or isinstance(obj, str) else str(obj)


def _default_tol() -> float:
    env = os.environ.get('FUSCAT_TOL')
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise UsageError(f'FUSCAT_TOL must be a number, got {env!r}') from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog='fuscat', description='Modular data and level-rank duality '
                                'checks for type B / C fusion categories.')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--family', choices=FAMILIES, default='sp-even')
    common.add_argument('--n', type=int, help='rank of sp(2n); partner rank for so-odd')
    common.add_argument('--k', type=int, help='level for sp-even; rank of so(2k+1)')
    common.add_argument('--ell', type=int, help='order parameter of q = exp(i pi a / ell)')
    common.add_argument('--a', type=int, default=1, help='root of unity selector')
    common.add_argument('--format', choices=('json', 'csv'), default='json')
    common.add_argument('--tol', type=float, default=None,
                        help='pass threshold (default 1e-9, or FUSCAT_TOL)')
    common.add_argument('--out', help='write output to this file instead of stdout')
    sub = p.add_subparsers(dest='verb', required=True)
    sub.add_parser('labels', parents=[common], help='simple objects in order')
    sub.add_parser('modular-data', parents=[common], help='dims, twists, S-matrix, gradings')
    sub.add_parser('fusion', parents=[common], help='fusion table')
    br = sub.add_parser('branch', parents=[common], help='branching table for sp + sp in so')
    br.add_argument('--sector', choices=SECTORS)
    ver = sub.add_parser('verify', parents=[common], help='run a verification')
    ver.add_argument('target', choices=VERIFY_TARGETS)
    ver.add_argument('--odd', action='store_true', help='odd ell (sp / so duality)')
    ver.add_argument('--case', type=int, choices=(1, 2))
    ver.add_argument('--max-sum', type=int, default=8, help='bound on n + k for verify all')
    return p


def spec_from_args(args) -> CategorySpec:
    fam = Family(args.family)
    n, k, ell, a = args.n, args.k, args.ell, args.a
    if fam is Family.SO_LEVEL1:
        _need(args, 'n', 'k')
        return CategorySpec(fam, 4 * n * k, 1)
    if fam is Family.SP_EVEN:
        _need(args, 'n')
        if ell is None:
            _need(args, 'k')
            ell = 2 * n + 2 * k + 2
        return CategorySpec(fam, n, ell, a)
    rank, other = (n, k) if fam is Family.SP_ODD else (k, n)
    if rank is None:
        raise UsageError(f'{fam.value} needs --{"n" if fam is Family.SP_ODD else "k"}')
    if ell is None:
        if other is None:
            raise UsageError(f'{fam.value} needs --ell or both --n and --k')
        ell = 2 * n + 2 * k + 1
    return CategorySpec(fam, rank, ell, a)


def _need(args, *names):
    missing = [f'--{x}' for x in names if getattr(args, x) is None]
    if missing:
        raise UsageError(f'missing {", ".join(missing)}')


def _csv(rows, header) -> str:
    def cell(x):
        return str(_clean(x)) if isinstance(x, (float, np.floating)) else str(x)

    lines = [','.join(header)] + [','.join(cell(x) for x in row) for row in rows]
    return '\n'.join(lines) + '\n'


def _json(obj) -> str:
    return json.dumps(_clean(obj), indent=2) + '\n'


def _labels(args):
    spec = spec_from_args(args)
    if spec.family is Family.SO_LEVEL1:
        labels = list(so_level1_data(args.n, args.k).labels)
        shown = labels
    else:
        labels = label_set(spec)
        shown = [x.to_json(spec.rank) for x in labels]
    if args.format == 'csv':
        return _csv([(i, str(x)) for i, x in enumerate(labels)], ('index', 'label')), 0
    return _json({'spec': spec.to_json(), 'count': len(labels), 'labels': shown}), 0


def _modular(args):
    spec = spec_from_args(args)
    md = so_level1_data(args.n, args.k) if spec.family is Family.SO_LEVEL1 else modular_data(spec)
    if args.format == 'csv':
        return _csv(md.table_rows(), ('label', 'dim', 'twist_re', 'twist_im', 'h')), 0
    return _json(md.to_json()), 0


def _fusion(args):
    spec = spec_from_args(args)
    if spec.family is Family.SO_LEVEL1:
        raise UsageError('so-level1 fusion is the group Z/2 x Z/2; use modular-data')
    table = fusion_table(spec)
    if args.format == 'csv':
        return _csv(table.csv_rows(), ('a', 'b', 'c', 'N')), 0
    return _json({'spec': spec.to_json(), **table.to_json(spec.rank)}), 0


def _branch(args):
    _need(args, 'n', 'k')
    table = branching_table(args.n, args.k)
    if args.format == 'csv':
        rows = [(name, a, b) for name, a, b in table.rows(args.sector)]
        return _csv(rows, ('sector', 'lambda', 'partner')), 0
    return _json(table.to_json(args.sector)), 0


def _verify(args):
    tol = args.tol if args.tol is not None else _default_tol()
    target = args.target
    if target == 'all':
        results = acceptance.run_all(args.max_sum)
        payload = {'max_sum': args.max_sum, 'passed': all(r.passed for _, _, r in results),
                   'criteria': [{'number': num, 'title': title, **rep.to_json()}
                                for num, title, rep in results]}
        return _json(payload), 0 if payload['passed'] else 1
    if target == 'modularity':
        rep = verify_modularity(spec_from_args(args), tol)
        return _json(rep.to_json()), 0 if rep.passed else 1
    _need(args, 'n', 'k')
    if target in ('duality', 'duality-odd'):
        if target == 'duality-odd' or args.odd:
            cases = (args.case,) if args.case else (1, 2)
            reps = [verify_sp_so_odd(args.n, args.k, c, tol) for c in cases]
            ok = all(r.passed for r in reps)
            body = reps[0].to_json() if len(reps) == 1 else \
                {'passed': ok, 'cases': [dict(case=c, **r.to_json()) for c, r in zip(cases, reps)]}
            return _json(body), 0 if ok else 1
        if args.case:
            raise UsageError('--case needs --odd')
        rep = verify_sp_sp(args.n, args.k, tol)
    elif target == 'branching':
        rep = verify_branching(args.n, args.k)
    else:
        rep = verify_etale_dims(args.n, args.k, tol)
    return _json(rep.to_json()), 0 if rep.passed else 1


HANDLERS = {'labels': _labels, 'modular-data': _modular, 'fusion': _fusion, 'branch': _branch,
            'verify': _verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = HANDLERS[args.verb](args)
    except (UsageError, ValueError) as exc:
        print(f'fuscat: error: {exc}', file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == '__main__':
    sys.exit(main())
