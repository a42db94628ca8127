# -*- coding: utf-8 -*-
from django.core.management.base import BaseCommand, CommandError

from resistance.errors import ResistanceError
from resistance.expectations import FIXTURES, check_fixtures, overall_status
from resistance.families import STRETCH_FAMILIES


class Command(BaseCommand):
    help = "Compare the bundled fixtures with fresh pipeline runs."

    def add_arguments(self, parser):
        parser.add_argument('families', nargs='*', help='Families to check (default: all built-ins)')
        parser.add_argument('--precision', type=int)
        parser.add_argument('--stretch', action='store_true', help='Include stretch families')

    def handle(self, *args, **options):
        families = options['families'] or sorted(
            name for name in FIXTURES if options['stretch'] or name not in STRETCH_FAMILIES)
        failed = []
        for family in families:
            if family not in FIXTURES:
                raise CommandError("no bundled fixtures for %s" % family)
            try:
                results = check_fixtures(family, precision=options['precision'])
            except ResistanceError as exc:
                raise CommandError("%s: %s" % (family, exc))
            self.stdout.write("%s: %s" % (family, overall_status(results)))
            for item in results:
                line = "  %-4s %s" % (item.status, item.name)
                if not item.ok or item.note:
                    line += " (expected %s, got %s%s)" % (
                        item.expected, item.actual, '; %s' % item.note if item.note else '')
                self.stdout.write(line)
            failed.extend("%s: %s" % (family, item.name) for item in results if not item.ok)
        if failed:
            raise CommandError("%d fixture(s) failed: %s" % (len(failed), ', '.join(failed)))
