# -*- coding: utf-8 -*-
"""
End-to-end pipeline: expansion, reduction, annihilator extraction,
minimization, Binet forms and resistance tables for one family.
"""
import logging

from django.conf import settings
from django.db import DatabaseError, transaction

from resistance import binet, expansion, families, oracle, recurrence, reduction
from resistance.errors import DominanceTie, ResistanceError, StageDependencyMissing, UnknownFamily

logger = logging.getLogger(__name__)

STAGES = ('expand', 'reduce', 'annihilate', 'minimal', 'binet', 'resistance')
PARTS = ('numerator', 'denominator')

RESISTANCE_SIZES = 20
ORACLE_LIMIT = 30
DIFFERENCE_RANGE = range(40, 61)
RATIO_SPAN = 8

FIXTURE_ANNIHILATORS = {
    'wheel': reduction.wheel_denominator_fixture,
}


def parse_stages(stages):
    """
    'all', a comma separated string or an iterable of stage names. The
    result must be a prefix of the pipeline order.
    """
    if isinstance(stages, str):
        stages = [s.strip() for s in stages.split(',') if s.strip()]
    stages = list(stages)
    if 'all' in stages:
        return STAGES
    unknown = [s for s in stages if s not in STAGES]
    if unknown:
        raise StageDependencyMissing("unknown stage(s): %s" % ', '.join(unknown))
    if not stages:
        raise StageDependencyMissing("no stage requested")
    last = max(STAGES.index(s) for s in stages)
    missing = [s for s in STAGES[:last] if s not in stages]
    if missing:
        raise StageDependencyMissing("stage %r needs %r" % (STAGES[last], missing[0]))
    return STAGES[:last + 1]


class RunConfig(object):

    def __init__(self, family=None, config_path=None, denominator='auto', min_size=None,
                 family_cap=None, precision=None, output_format='text', stages='all',
                 output_dir=None, check=False, policy=None, max_support=None, verify=False,
                 stretch=False):
        if not family and not config_path:
            raise UnknownFamily(family)
        conf = getattr(settings, 'RESISTANCE', {})
        self.family = family
        self.config_path = config_path
        self.denominator = denominator
        self.min_size = min_size
        self.family_cap = family_cap or conf.get('FAMILY_CAP', expansion.DEFAULT_FAMILY_CAP)
        self.precision = precision or conf.get('PRECISION', binet.DEFAULT_PRECISION)
        self.output_format = output_format
        self.stages = parse_stages(stages)
        self.output_dir = output_dir
        self.check = check
        self.policy = policy or conf.get('DEDUP_POLICY', expansion.PUBLISHED)
        self.max_support = max_support or conf.get('MAX_SUPPORT', reduction.DEFAULT_MAX_SUPPORT)
        self.verify = verify
        self.stretch = stretch
        if self.output_format not in ('json', 'text'):
            raise ResistanceError("output format must be json or text")

    def to_dict(self):
        return {
            'family': self.family,
            'config_path': self.config_path,
            'denominator': self.denominator,
            'min_size': self.min_size,
            'family_cap': self.family_cap,
            'precision': self.precision,
            'output_format': self.output_format,
            'stages': list(self.stages),
            'policy': self.policy,
            'max_support': self.max_support,
        }


def resolve_family(config):
    """
    A definition file first, then the built-ins, then stored definitions.
    """
    if config.config_path:
        specs = families.load_family_file(config.config_path)
        if config.family:
            specs = [s for s in specs if s.name == config.family]
        if not specs:
            raise UnknownFamily(config.family)
        return specs[0]
    if config.family in families.BUILTIN_FAMILIES:
        if config.family in families.STRETCH_FAMILIES and not config.stretch:
            raise ResistanceError("%s is a stretch family; pass --stretch to run it" % config.family)
        return families.get_family(config.family)

    from resistance.models import FamilyDefinition
    try:
        with transaction.atomic():
            return FamilyDefinition.objects.get(name=config.family).spec()
    except FamilyDefinition.DoesNotExist:
        raise UnknownFamily(config.family)
    except DatabaseError as exc:
        logger.warning("stored families unavailable (%s); run manage.py migrate first", exc)
        raise UnknownFamily(config.family)


class Part(object):
    """
    Everything computed for one side (numerator or denominator) of the
    resistance ratio.
    """

    def __init__(self, name, handle):
        self.name = name
        self.handle = handle
        self.expansion = None
        self.reduced = None
        self.annihilator = None
        self.annihilator_source = None
        self.recurrence = None
        self.sequence = None
        self.subsequences = []
        self.binet = None
        self.asymptotic = None
        self.ratios = []
        self.tie = None
        self.soundness_failures = []
        self.equal_pairs = None


class PipelineResult(object):

    def __init__(self, config, spec, parts):
        self.config = config
        self.spec = spec
        self.parts = parts
        self.resistance = None
        self.notes = []
        self.completed = []

    @property
    def numerator(self):
        return self.parts['numerator']

    @property
    def denominator(self):
        return self.parts['denominator']

    def note(self, message):
        logger.warning(message)
        self.notes.append(message)


class Pipeline(object):

    def __init__(self, config):
        self.config = config
        self.spec = resolve_family(config)
        self.probe = config.min_size or self.spec.min_size

    def run(self):
        numerator, denominator = families.dimension_handles(self.spec, self.config.denominator)
        result = PipelineResult(self.config, self.spec, {
            'numerator': Part('numerator', numerator),
            'denominator': Part('denominator', denominator),
        })
        for stage in self.config.stages:
            logger.info("%s: stage %s", self.spec.name, stage)
            getattr(self, 'stage_%s' % stage)(result)
            result.completed.append(stage)
        return result

    def _strategy(self, part):
        if part.name == 'numerator':
            return 'expand'
        return self.spec.denominator_strategy

    def stage_expand(self, result):
        for part in result.parts.values():
            if self._strategy(part) != 'expand':
                continue
            part.expansion = expansion.laplace_expand(
                part.handle, self.probe, family_cap=self.config.family_cap, policy=self.config.policy)
            if self.config.verify:
                part.soundness_failures = expansion.verify_identities(
                    part.expansion.Q, part.expansion.families, range(self.probe + 1, self.probe + 7))
                if part.soundness_failures:
                    result.note("%s ledger fails the oracle at %d points"
                                % (part.name, len(part.soundness_failures)))
                part.equal_pairs = expansion.equal_family_pairs(part.expansion.families, self.probe)
                if part.equal_pairs:
                    result.note("%s ledger keeps %d pairs of equal families (%s policy)"
                                % (part.name, len(part.equal_pairs), part.expansion.policy))

    def stage_reduce(self, result):
        for part in result.parts.values():
            if part.expansion is not None:
                part.reduced = reduction.system_reduce(part.expansion.Q)

    def stage_annihilate(self, result):
        numerator = result.numerator
        numerator.annihilator = reduction.solve_identity_system(numerator.reduced, self.config.max_support)
        numerator.annihilator_source = 'elimination'

        denominator = result.denominator
        strategy = self._strategy(denominator)
        if strategy == 'shared':
            denominator.annihilator = numerator.annihilator
            denominator.annihilator_source = 'shared'
        elif strategy == 'expand':
            denominator.annihilator = reduction.solve_identity_system(
                denominator.reduced, self.config.max_support)
            denominator.annihilator_source = 'elimination'
        else:
            if self.config.denominator not in ('auto', None, self.spec.denominator):
                raise ResistanceError("the %s fixture is for L(%s|%s) only" % (
                    self.spec.name, self.spec.denominator, self.spec.denominator))
            try:
                fixture = FIXTURE_ANNIHILATORS[self.spec.name]()
            except KeyError:
                raise ResistanceError("no denominator fixture for %s" % self.spec.name)
            denominator.annihilator = fixture.annihilator
            denominator.annihilator_source = 'fixture'
            result.notes.append(fixture.provenance)

    def stage_minimal(self, result):
        modulus, residue = self.spec.graph_step
        for part in result.parts.values():
            part.recurrence, part.sequence = recurrence.find_minimal_recurrence(part.handle, part.annihilator)
            if modulus < 2:
                continue
            terms = modulus * (3 * part.recurrence.annihilator.degree + 10)
            longer = recurrence.oracle_sequence(
                part.handle, part.handle.min_size, part.handle.min_size + terms - 1)
            stride_residue = (residue - part.handle.offset) % modulus
            part.subsequences.append(recurrence.subsequence_annihilator(
                part.recurrence.annihilator, modulus, longer, stride_residue,
                "%s stride %d residue %d" % (part.handle.describe(), modulus, stride_residue)))

    def stage_binet(self, result):
        for part in result.parts.values():
            shift = self.spec.asymptotic_shifts.get(part.name, 0)
            part.binet = binet.binet_fit(part.recurrence, part.sequence, self.config.precision, shift)
            try:
                part.asymptotic = binet.asymptotic_form(part.binet)
            except DominanceTie as tie:
                part.tie = tie.roots
                result.note("%s: %d roots share the maximal modulus, no single dominant term"
                            % (part.name, len(tie.roots)))
                continue
            first = shift or part.recurrence.validity_index
            indices = [n for n in range(first, first + RATIO_SPAN) if n <= part.sequence.stop]
            part.ratios = part.asymptotic.ratios(part.sequence, indices)

    def graph_sizes(self):
        modulus = self.spec.graph_step[0]
        first = next(n for n in range(self.spec.min_size, self.spec.min_size + modulus + 1)
                     if self.spec.is_graph_size(n))
        return [first + modulus * k for k in range(RESISTANCE_SIZES)]

    def stage_resistance(self, result):
        sizes = self.graph_sizes()
        choice = self.config.denominator
        exact = [(n, binet.resistance_exact(self.spec, n, choice)) for n in sizes]
        for n, value in exact:
            if n <= ORACLE_LIMIT and oracle.resistance_solve(self.spec, n, 1, n) != value:
                raise ResistanceError("%s: determinant ratio and linear solve disagree at n=%d"
                                      % (self.spec.name, n))

        modulus = self.spec.graph_step[0]
        exact_diffs = [(n, exact[k + 1][1] - value) for k, (n, value) in enumerate(exact[:-1])]
        differences = []
        numerator, denominator = result.numerator, result.denominator
        if numerator.asymptotic is not None and denominator.asymptotic is not None and modulus == 1:
            differences = binet.resistance_asymptotic_difference(
                numerator.asymptotic, denominator.asymptotic, DIFFERENCE_RANGE,
                num_shift=numerator.handle.offset, den_shift=denominator.handle.offset)
        result.resistance = binet.ResistanceReport(
            self.spec.name, exact,
            asymptotic=dict((p.name, p.asymptotic) for p in (numerator, denominator) if p.asymptotic),
            differences=differences, exact_differences=exact_diffs)


def run(config):
    return Pipeline(config).run()
