# -*- coding: utf-8 -*-
import io

from django.core.management.base import BaseCommand, CommandError

from resistance import families, oracle, recurrence
from resistance.errors import ResistanceError
from resistance.pipeline import PARTS


class Command(BaseCommand):
    help = "Write exact determinant values of a family minor as CSV (n, value)."

    def add_arguments(self, parser):
        parser.add_argument('--family', required=True)
        parser.add_argument('--part', default='numerator', choices=PARTS)
        parser.add_argument('--denominator', default='auto', choices=('first', 'last', 'auto'))
        parser.add_argument('--start', type=int, help='First index (default: smallest defined)')
        parser.add_argument('--stop', type=int, default=30)
        parser.add_argument('--by-size', action='store_true',
                            help='Index by graph size instead of matrix dimension')
        parser.add_argument('--output', help='CSV file (default: stdout)')

    def handle(self, *args, **options):
        try:
            spec = families.get_family(options['family'])
            if options['by_size']:
                handles = families.bapat_handles(spec, options['denominator'])
            else:
                handles = families.dimension_handles(spec, options['denominator'])
            handle = handles[PARTS.index(options['part'])]
            start = handle.min_size if options['start'] is None else options['start']
            seq = recurrence.oracle_sequence(handle, start, options['stop'])
        except ResistanceError as exc:
            raise CommandError(str(exc))

        if options['output']:
            with io.open(options['output'], 'w', encoding='utf-8', newline='') as stream:
                oracle.write_sequence_csv(seq, stream)
        else:
            stream = io.StringIO()
            oracle.write_sequence_csv(seq, stream)
            self.stdout.write(stream.getvalue(), ending='')
