# -*- coding: utf-8 -*-
"""
Report files of a pipeline run, one directory per run:
ledger.json, Q.json, R.json, recurrence.json, binet.json, resistance.csv
and report.txt. JSON is written with sorted keys and carries no
timestamps, so equal runs give byte-identical files.
"""
import csv
import io
import json
import logging
import os

import mpmath
from django.conf import settings
from django.core.serializers.json import DjangoJSONEncoder

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

FILES = ('ledger.json', 'Q.json', 'R.json', 'recurrence.json', 'binet.json',
         'resistance.csv', 'report.txt')


def schema_version():
    return getattr(settings, 'RESISTANCE', {}).get('SCHEMA_VERSION', SCHEMA_VERSION)


def dumps(data):
    return json.dumps(data, cls=DjangoJSONEncoder, sort_keys=True, indent=2) + '\n'


def _envelope(result, payload):
    return {
        'schema_version': schema_version(),
        'family': result.spec.name,
        'config': result.config.to_dict(),
        'parts': payload,
    }


def _num(value, digits):
    return mpmath.nstr(mpmath.re(value), digits)


def ledger_data(result):
    data = {}
    for name, part in sorted(result.parts.items()):
        if part.expansion is None:
            continue
        data[name] = {
            'root': part.handle.describe(),
            'probe_size': part.expansion.probe_size,
            'policy': part.expansion.policy,
            'deduplicated': part.expansion.deduplicated,
            'equal_pairs': None if part.equal_pairs is None else [list(p) for p in part.equal_pairs],
            'expansions': part.expansion.expansions,
            'families': [h.describe() for h in part.expansion.families],
            'degenerate': part.expansion.degenerate,
            'ledger': [row.to_dict() for row in part.expansion.ledger],
            'soundness_failures': [list(map(str, f)) for f in part.soundness_failures],
        }
    return _envelope(result, data)


def q_data(result):
    return _envelope(result, dict((name, part.expansion.Q.to_dict())
                                  for name, part in sorted(result.parts.items())
                                  if part.expansion is not None))


def r_data(result):
    return _envelope(result, dict((name, part.reduced.to_dict())
                                  for name, part in sorted(result.parts.items())
                                  if part.reduced is not None))


def recurrence_data(result):
    data = {}
    for name, part in sorted(result.parts.items()):
        if part.annihilator is None:
            continue
        entry = {
            'annihilator_Y': str(part.annihilator),
            'annihilator_X': str(part.annihilator.to_char()),
            'source': part.annihilator_source,
        }
        if part.recurrence is not None:
            entry['minimal'] = part.recurrence.to_dict()
            entry['subsequences'] = [rec.to_dict() for rec in part.subsequences]
        data[name] = entry
    return _envelope(result, data)


def binet_data(result):
    digits = result.config.precision
    data = {}
    for name, part in sorted(result.parts.items()):
        if part.binet is None:
            continue
        data[name] = {
            'binet': part.binet.to_dict(),
            'asymptotic': part.asymptotic.to_dict() if part.asymptotic is not None else None,
            'ratios': [{'n': n, 'ratio': _num(r, digits)} for n, r in part.ratios],
            'dominance_tie': [mpmath.nstr(r, digits) for r in part.tie] if part.tie else None,
        }
    return _envelope(result, data)


def resistance_csv(report, digits=20):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['n', 'resistance', 'decimal'])
    for n, value in report.exact:
        writer.writerow([n, str(value), mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)])
    return stream.getvalue()


def format_ledger(ledger):
    """
    The seven-column ledger as an aligned table.
    """
    header = ('id', 'pending', 'mode', 'parent', 'row', 'col', 'coeff')
    rows = [header] + [(str(r.id), str(r.pending), r.mode, str(r.parent), str(r.del_row),
                        str(r.del_col), str(r.coeff)) for r in ledger]
    widths = [max(len(row[k]) for row in rows) for k in range(len(header))]
    return '\n'.join('  '.join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows)


def format_system(system):
    cells = [[str(p) for p in row] for row in system.entries]
    if not cells:
        return ''
    width = max(len(c) for row in cells for c in row)
    return '\n'.join(' '.join(c.rjust(width) for c in row) for row in cells)


def summary_text(result, fixtures=None):
    digits = 12
    lines = ["family %s (%s)" % (result.spec.name, result.spec.description),
             "stages: %s" % ', '.join(result.completed)]
    for name, part in sorted(result.parts.items(), reverse=True):
        lines.append('')
        lines.append("[%s] %s" % (name, part.handle.describe()))
        if part.expansion is not None:
            lines.append("  %d expansions, %d families" % (
                part.expansion.expansions, len(part.expansion.families)))
            if not part.expansion.deduplicated:
                lines.append("  %s policy: equal families are not merged across positions" % part.expansion.policy)
        if part.reduced is not None:
            lines.append("  reduced support: %s" % ', '.join(map(str, part.reduced.support)))
        if part.annihilator is not None:
            lines.append("  annihilator (%s): %s" % (part.annihilator_source, part.annihilator))
        if part.recurrence is not None:
            lines.append("  minimal: %s, valid from %d" % (
                part.recurrence.annihilator, part.recurrence.validity_index))
        for rec in part.subsequences:
            lines.append("  %s: %s, valid from %d" % (rec.family, rec.annihilator, rec.validity_index))
        if part.asymptotic is not None:
            form = part.asymptotic
            lines.append("  dominant root %s (multiplicity %d), C' = %s" % (
                _num(form.root, digits), form.multiplicity,
                ', '.join(_num(c, digits) for c in form.shifted_coefficients())))
        elif part.tie:
            lines.append("  no dominant root: %s" % ', '.join(mpmath.nstr(r, digits) for r in part.tie))

    report = result.resistance
    if report is not None:
        lines.append('')
        lines.append("resistance r(1,n):")
        for n, value in report.exact[:10]:
            lines.append("  %3d  %s" % (n, value))
        if report.limit_estimate is not None:
            lines.append("difference limit estimate: %s" % _num(report.limit_estimate, digits))

    if result.notes:
        lines.append('')
        lines.extend("note: %s" % note for note in result.notes)
    if fixtures:
        lines.append('')
        for item in fixtures:
            lines.append("%-4s %s%s" % (item.status, item.name, (' (%s)' % item.note) if item.note else ''))
    return '\n'.join(lines) + '\n'


def report_text(result, fixtures=None):
    parts = [summary_text(result, fixtures)]
    for name, part in sorted(result.parts.items(), reverse=True):
        if part.expansion is not None:
            parts.append("P (%s)\n%s\n" % (name, format_ledger(part.expansion.ledger)))
            parts.append("Q (%s)\n%s\n" % (name, format_system(part.expansion.Q)))
        if part.reduced is not None:
            parts.append("R (%s)\n%s\n" % (name, format_system(part.reduced.R)))
    return '\n'.join(parts)


def write_reports(result, output_dir, fixtures=None):
    """
    Writes every file the run has data for and returns their paths.
    """
    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    contents = {
        'ledger.json': dumps(ledger_data(result)),
        'Q.json': dumps(q_data(result)),
        'R.json': dumps(r_data(result)),
        'recurrence.json': dumps(recurrence_data(result)),
        'binet.json': dumps(binet_data(result)),
        'report.txt': report_text(result, fixtures),
    }
    if result.resistance is not None:
        contents['resistance.csv'] = resistance_csv(result.resistance)
    paths = []
    for name in FILES:
        if name not in contents:
            continue
        path = os.path.join(output_dir, name)
        with io.open(path, 'w', encoding='utf-8') as handle:
            handle.write(contents[name])
        paths.append(path)
    logger.info("wrote %d report files to %s", len(paths), output_dir)
    return paths


def result_summary(result, fixtures=None):
    """
    Compact JSON-able digest, stored on PipelineRun and printed by `run --format json`.
    """
    data = {
        'family': result.spec.name,
        'stages': list(result.completed),
        'notes': list(result.notes),
        'parts': {},
    }
    for name, part in sorted(result.parts.items()):
        entry = {}
        if part.expansion is not None:
            entry['expansions'] = part.expansion.expansions
            entry['families'] = len(part.expansion.families)
            entry['deduplicated'] = part.expansion.deduplicated
        if part.reduced is not None:
            entry['support'] = part.reduced.support
        if part.annihilator is not None:
            entry['annihilator'] = str(part.annihilator)
        if part.recurrence is not None:
            entry['minimal'] = str(part.recurrence.annihilator)
            entry['validity_index'] = part.recurrence.validity_index
        data['parts'][name] = entry
    if result.resistance is not None:
        limit = result.resistance.limit_estimate
        data['limit_estimate'] = None if limit is None else _num(limit, 20)
    if fixtures is not None:
        data['fixtures'] = [item.to_dict() for item in fixtures]
    return data
