# -*- coding: utf-8 -*-
import logging
import os

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.db import DatabaseError

from resistance import reports
from resistance.errors import ResistanceError
from resistance.expansion import POLICIES
from resistance.expectations import FIXTURES, check_fixtures, overall_status
from resistance.models import PipelineRun
from resistance.pipeline import RunConfig, run

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Run the resistance pipeline on one family and write its reports."

    def add_arguments(self, parser):
        parser.add_argument('--family', help='Built-in or stored family name')
        parser.add_argument('--config', dest='config_path', help='JSON family definition file')
        parser.add_argument('--denominator', default='auto', choices=('first', 'last', 'auto'))
        parser.add_argument('--min-size', type=int, help='Probe size of the expansion')
        parser.add_argument('--family-cap', type=int)
        parser.add_argument('--precision', type=int, help='Working precision in decimal digits')
        parser.add_argument('--format', dest='output_format', default='text', choices=('json', 'text'))
        parser.add_argument('--stages', default='all',
                            help='Comma separated prefix of expand,reduce,annihilate,minimal,binet,resistance')
        parser.add_argument('--output', help='Report directory (default: RESISTANCE_OUTPUT_DIR/<family>)')
        parser.add_argument('--check', action='store_true', help='Compare against the bundled fixtures')
        parser.add_argument('--policy', choices=POLICIES)
        parser.add_argument('--max-support', type=int)
        parser.add_argument('--verify', action='store_true', help='Check every ledger identity numerically')
        parser.add_argument('--stretch', action='store_true', help='Allow stretch families')

    def handle(self, *args, **options):
        try:
            config = RunConfig(
                family=options['family'], config_path=options['config_path'],
                denominator=options['denominator'], min_size=options['min_size'],
                family_cap=options['family_cap'], precision=options['precision'],
                output_format=options['output_format'], stages=options['stages'],
                output_dir=options['output'], check=options['check'], policy=options['policy'],
                max_support=options['max_support'], verify=options['verify'],
                stretch=options['stretch'])
            result = run(config)
        except ResistanceError as exc:
            self._record(options['family'] or options['config_path'], {}, 'failed', {'error': str(exc)}, '')
            raise CommandError(str(exc))

        family = result.spec.name
        fixtures = None
        if config.check:
            if family not in FIXTURES:
                raise CommandError("no bundled fixtures for %s" % family)
            try:
                fixtures = check_fixtures(family, result)
            except ResistanceError as exc:
                raise CommandError(str(exc))

        output_dir = config.output_dir or os.path.join(settings.RESISTANCE['OUTPUT_DIR'], family)
        reports.write_reports(result, output_dir, fixtures)

        if fixtures is not None:
            status = overall_status(fixtures)
        else:
            status = 'warned' if result.notes else 'ok'
        summary = reports.result_summary(result, fixtures)
        self._record(family, config.to_dict(), status, summary, output_dir)

        if config.output_format == 'json':
            self.stdout.write(reports.dumps(summary), ending='')
        else:
            self.stdout.write(reports.summary_text(result, fixtures), ending='')

        if status == 'failed':
            failed = [item.name for item in fixtures if not item.ok]
            raise CommandError("%d fixture(s) failed for %s: %s" % (len(failed), family, ', '.join(failed)))

    def _record(self, family, config, status, summary, output_dir):
        try:
            PipelineRun.objects.create(family=family or '', config=config, status=status,
                                       summary=summary, output_dir=output_dir)
        except DatabaseError as exc:
            logger.warning("run not recorded (%s); run manage.py migrate first", exc)
