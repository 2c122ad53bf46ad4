#! python3.11

#    This module is a part of the ftpolytope package.
#
#    This program is libre software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
#    See the LICENSE file for more details.

'''
Enumerate and analyze the Frieze-Teng polytope P_R of an Exact Partition instance.

    analyze       vertex census, degeneracy, degrees, diameter, and every structural check
    export        write the cdd H- or V-representation, or the full vertex/edge list as JSON
    solve         decide Exact Partition by brute force, cross-checked against the ILP2 optimum
    check-lemmas  run every structural check over random instances

An instance is a file path, an inline list like "3,3,4,2", or - for stdin. Instances with negative elements are
translated first; pass those in a file or on stdin, where they can't be mistaken for flags.

Exit codes: 0 success, 1 a check failed, 2 unparsable input, 3 too large, 4 no exact partition (solve).
'''

import argparse
from collections import Counter
from functools import partial
import json
import logging
from pathlib import Path
import random
import sys

from .core import (ExactPartitionInstance, FTError, FTStatus, build_constraints, constraint_label, oddify,
                   parse_instance_text, translate_positive)
from .cdd import format_ext, format_ine, format_rational
from .library import (FTArgs, Lemma, LemmaReport, PolytopeReport, VertexClass, analyze, check_instance,
                      enumerate_all, exact_partition_oracle, ilp2_bruteforce, planted_instance, random_instance,
                      run_batch)

__all__ = ['read_instance', 'report_dict', 'format_report', 'export_json', 'cmd_analyze', 'cmd_export', 'cmd_solve',
           'cmd_checklemmas', 'exit_code', 'main']

_log = logging.getLogger(__name__)

_EXIT_CODES = {
    FTStatus.Empty:         2,
    FTStatus.OddCount:      2,
    FTStatus.NotAnInteger:  2,
    FTStatus.NotPositive:   2,
    FTStatus.ParseError:    2,
    FTStatus.NotFriezeTeng: 2,
    FTStatus.DimensionCap:  3,
    FTStatus.ScaleCap:      3,
}
NoPartitionExit = 4

def exit_code(status:FTStatus) -> int:
    return _EXIT_CODES.get(status, 1)

########################################################################################################################
# Input

def read_instance(source:str) -> ExactPartitionInstance:
    '''A file path, an inline list, or - for stdin.'''
    if source == '-':
        text = sys.stdin.read()
    elif Path(source).is_file():
        text = Path(source).read_text()
    else:
        text = source
    return parse_instance_text(text)

def _prepared(args) -> ExactPartitionInstance:
    '''The instance after translation and any requested preprocessing, for the commands which skip `analyze`.'''
    inst, _ = translate_positive(read_instance(args.instance))
    if args.preprocess:
        inst, _ = oddify(inst, step=1 if args.preprocess == 'up' else -1)
    return inst

########################################################################################################################
# Rendering. Rationals are always "p/q" strings, never floats.

def _coords(coords) -> list[str]:
    return [format_rational(x) for x in coords]

def _tuple(coords) -> str:
    return f"({', '.join(_coords(coords))})"

def _vertex_dict(report:PolytopeReport, k:int) -> dict:
    v = report.vertices[k]
    return {'vertex': k + 1,
            'coords': _coords(v.coords),
            'class': v.vclass.name,
            'active': [constraint_label(report.constraints, j) for j in sorted(v.active)],
            'degree': report.graph.degrees[k]}

def _lemma_dict(lemma:LemmaReport) -> dict:
    return {'lemma': lemma.lemma.name,
            'statement': lemma.lemma.value,
            'applicable': lemma.applicable,
            'holds': lemma.holds,
            'witnesses': [_coords(v.coords) for v in lemma.witnesses],
            'detail': lemma.detail}

def _census(vertices) -> dict:
    counts = Counter(v.vclass for v in vertices)
    return {'vertices': len(vertices), **{c.name: counts[c] for c in VertexClass},
            'degenerate': sum(v.degenerate for v in vertices)}

def _partition_dict(report:PolytopeReport) -> dict:
    cert = report.certificate
    if cert is None:
        return {'exists': False}
    return {'exists': True, 'subset': [i + 1 for i in cert.subset], 'sums': [cert.sum_left, cert.sum_right]}

def report_dict(report:PolytopeReport) -> dict:
    c = report.constants
    degrees = Counter(report.graph.degrees)
    return {
        'input': list(report.raw.elements),
        'transforms': {'shift': report.shift, 'added': report.added},
        'instance': list(report.instance.elements),
        'constants': {'S': c.S, 's_max': c.s_max, 'M': c.M, 'epsilon': format_rational(c.epsilon), 'd': list(c.d),
                      'k1_rhs': format_rational(c.k1_rhs), 'k2_rhs': format_rational(c.k2_rhs)},
        'census': _census(report.vertices),
        'degenerate': [_vertex_dict(report, k) for k, v in enumerate(report.vertices) if v.degenerate],
        'degrees': {str(d): degrees[d] for d in sorted(degrees)},
        'diameter': report.diameter,
        'eccentricities': list(report.eccentricities),
        'monotone_diameter': report.monotone_diameter,
        'monotone_distances': list(report.monotone_distances),
        'lemmas': [_lemma_dict(lemma) for lemma in report.lemmas],
        'partition': _partition_dict(report),
    }

def _verdict(lemma:LemmaReport) -> str:
    if not lemma.applicable:
        return 'N/A '
    return 'PASS' if lemma.holds else 'FAIL'

def format_report(report:PolytopeReport) -> str:
    '''The human-readable table.'''
    d = report_dict(report)
    c, census = d['constants'], d['census']
    lines = [f"instance      {' '.join(map(str, report.instance.elements))}"
             + (f"  (from {' '.join(map(str, report.raw.elements))}, shift {report.shift}, added {report.added})"
                if report.shift or report.added else ''),
             f"constants     S={c['S']} s_max={c['s_max']} M={c['M']} eps={c['epsilon']} "
             f"K1 rhs={c['k1_rhs']} K2 rhs={c['k2_rhs']}",
             f"vertices      {census['vertices']} (V0 {census['V0']}, V1 {census['V1']}, V2 {census['V2']}), "
             f"{census['degenerate']} degenerate",
             f"degrees       {' '.join(f'{deg}:{n}' for deg, n in d['degrees'].items())}",
             f"diameter      {report.diameter}, monotone diameter {report.monotone_diameter}",
             f"eccentricity  {' '.join(f'{ecc}:{n}' for ecc, n in sorted(Counter(report.eccentricities).items()))}"]
    for entry in d['degenerate']:
        lines.append(f"  degenerate v{entry['vertex']} ({', '.join(entry['coords'])}) degree {entry['degree']}, "
                     f"active on {' '.join(entry['active'])}")
    lines.append('checks')
    for lemma in report.lemmas:
        lines.append(f"  {_verdict(lemma)}  {lemma.lemma.name:<17} {lemma.lemma.value}"
                     + (f" [{lemma.detail}]" if lemma.detail else ''))
        for w in lemma.witnesses:
            lines.append(f"        witness {_tuple(w.coords)}")
    part = d['partition']
    lines.append(f"partition     YES {{{', '.join(map(str, part['subset']))}}} sums {'|'.join(map(str, part['sums']))}"
                 if part['exists'] else "partition     NO")
    return '\n'.join(lines)

def export_json(report:PolytopeReport) -> dict:
    '''Every vertex with its class, active constraints and degree, plus the edges (1-based vertex numbers).'''
    return {'instance': list(report.instance.elements),
            'transforms': {'shift': report.shift, 'added': report.added},
            'constraints': [{'label': h.label(), 'coeffs': _coords(h.coeffs), 'rhs': format_rational(h.rhs)}
                            for h in report.constraints.halfspaces],
            'vertices': [_vertex_dict(report, k) | {'degenerate': v.degenerate}
                         for k, v in enumerate(report.vertices)],
            'edges': sorted([u + 1, w + 1] for u, w in report.graph.edges)}

def _write(args, text:str):
    if args.out:
        Path(args.out).write_text(text)
        _log.info(f"wrote {args.out}")
    else:
        sys.stdout.write(text)

########################################################################################################################
# Subcommands. Each returns the exit code.

def cmd_analyze(args) -> int:
    report = analyze(read_instance(args.instance), args.preprocess, args.max_dim)
    if args.json:
        print(json.dumps(report_dict(report), indent=2))
    else:
        print(format_report(report))
    return 0 if report.passed else 1

def cmd_export(args) -> int:
    if args.format == 'json':
        report = analyze(read_instance(args.instance), args.preprocess, args.max_dim)
        _write(args, json.dumps(export_json(report), indent=2) + '\n')
        return 0
    inst = _prepared(args)
    cs = build_constraints(inst)
    comment = f"P_R for {' '.join(map(str, inst.elements))}"
    if args.format == 'ine':
        text = format_ine(cs, comment)
    else:
        text = format_ext(enumerate_all(cs, args.max_dim), comment)
    _write(args, text)
    return 0

def cmd_solve(args) -> int:
    raw = read_instance(args.instance)
    cert = exact_partition_oracle(raw)
    optimum, witness = ilp2_bruteforce(translate_positive(raw)[0])
    if (optimum == raw.m) != (cert is not None):
        raise FTError(FTStatus.InternalError, f"ILP2 optimum {optimum} disagrees with partition oracle {cert}")
    if args.json:
        print(json.dumps({'instance': list(raw.elements), 'exists': cert is not None,
                          'subset': [i + 1 for i in cert.subset] if cert else None,
                          'sums': [cert.sum_left, cert.sum_right] if cert else None,
                          'ilp2_optimum': optimum, 'ilp2_witness': _coords(witness.coords)}, indent=2))
    else:
        if cert:
            print(f"YES: subset {{{', '.join(str(i + 1) for i in cert.subset)}}} "
                  f"(sums {cert.sum_left} | {cert.sum_right})")
        else:
            print("NO: no exact partition")
        print(f"ILP2 optimum {optimum} (m = {raw.m}), witness {_tuple(witness.coords)}")
    return 0 if cert else NoPartitionExit

def _instances(args) -> list[tuple[int, ExactPartitionInstance]]:
    rng = random.Random(args.seed)
    make = planted_instance if args.planted else partial(random_instance, low=1)
    return [(size, make(rng, size, high=args.max_value)) for size in args.sizes for _ in range(args.count)]

def cmd_checklemmas(args) -> int:
    instances = _instances(args)
    results = run_batch([inst for _, inst in instances], partial(check_instance, max_dim=args.max_dim),
                        args.concurrency)

    # (lemma, size) -> [applicable, passed]
    matrix = {(lemma, size): [0, 0] for lemma in Lemma for size in args.sizes}
    failures = []
    for (size, inst), reports in zip(instances, results):
        for report in reports:
            if not report.applicable:
                continue
            cell = matrix[report.lemma, size]
            cell[0] += 1
            cell[1] += report.holds
            if not report.holds:
                failures.append(report)

    if args.json:
        print(json.dumps({'seed': args.seed, 'count': args.count, 'sizes': args.sizes, 'planted': args.planted,
                          'matrix': {lemma.name: {str(size): {'applicable': matrix[lemma, size][0],
                                                              'passed': matrix[lemma, size][1]}
                                                  for size in args.sizes} for lemma in Lemma},
                          'failures': [{'instance': list(f.elements)} | _lemma_dict(f) for f in failures]},
                         indent=2))
    else:
        print(f"{len(instances)} instances, seed {args.seed}{', planted' if args.planted else ''}")
        if instances:
            print(f"{'check':<17} " + ' '.join(f"{'2m=' + str(size):>9}" for size in args.sizes))
            for lemma in Lemma:
                print(f"{lemma.name:<17} "
                      + ' '.join(f"{matrix[lemma, size][1]:>4}/{matrix[lemma, size][0]:<4}" for size in args.sizes))
        for f in failures:
            print(f"FAIL {f.lemma.name} on {','.join(map(str, f.elements))}: "
                  + ' '.join(_tuple(w.coords) for w in f.witnesses))
    return 1 if failures else 0

########################################################################################################################

parser = argparse.ArgumentParser(prog='ftpolytope', description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
_subparsers = parser.add_subparsers(dest='command', required=True)

_analyze = _subparsers.add_parser('analyze', help="analyze one instance")
FTArgs.add_args_to_parser(_analyze, FTArgs.Instance, FTArgs.Json, FTArgs.Preprocess, FTArgs.MaxDim, FTArgs.Verbose)
_analyze.set_defaults(func=cmd_analyze)

_export = _subparsers.add_parser('export', help="write an interchange file")
FTArgs.add_args_to_parser(_export, FTArgs.Instance, FTArgs.Format, FTArgs.Out, FTArgs.Preprocess, FTArgs.MaxDim,
                                   FTArgs.Verbose)
_export.set_defaults(func=cmd_export)

_solve = _subparsers.add_parser('solve', help="decide Exact Partition by brute force")
FTArgs.add_args_to_parser(_solve, FTArgs.Instance, FTArgs.Json, FTArgs.Verbose)
_solve.set_defaults(func=cmd_solve)

_check = _subparsers.add_parser('check-lemmas', help="run every check over random instances")
FTArgs.add_args_to_parser(_check, FTArgs.Count, FTArgs.Seed, FTArgs.Sizes, FTArgs.MaxValue, FTArgs.Planted,
                                  FTArgs.Json, FTArgs.MaxDim, FTArgs.Concurrency, FTArgs.Verbose)
_check.set_defaults(func=cmd_checklemmas)

def main(argv=None) -> int:
    args = parser.parse_args(argv)
    if args.command == 'check-lemmas':
        if args.count < 0 or args.concurrency < 1:
            parser.error("--count must be non-negative and --concurrency positive")
        if args.planted and min(args.sizes) < 4:
            parser.error("--planted needs every size to be at least 4")
    logging.basicConfig(format="%(levelname)s [%(asctime)s] %(name)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S",
                        level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except FTError as err:
        print(f"error: {err}", file=sys.stderr)
        return exit_code(err.status)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
