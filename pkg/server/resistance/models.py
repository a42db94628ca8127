# -*- coding: utf-8 -*-
from django.db import models
from jsonfield import JSONField

from resistance.families import FamilySpec


class FamilyDefinition(models.Model):
    name = models.CharField(max_length=128, unique=True, help_text='Name used with --family. Ex: "ladder3"')
    definition = JSONField(help_text='Family definition: diag, offdiags, border, entries, min_size...')
    created_at = models.DateTimeField(null=True, auto_now_add=True, db_column='created_at', blank=True)
    updated_at = models.DateTimeField(null=True, auto_now=True, db_column='updated_at', blank=True)

    def spec(self):
        data = dict(self.definition)
        data.setdefault('name', self.name)
        return FamilySpec.from_dict(data)

    def __str__(self):
        return self.name


class PipelineRun(models.Model):
    RUN_STATES = (
        (u'ok', u"ok"),
        (u'warned', u"warned"),
        (u'failed', u"failed"),
    )
    family = models.CharField(max_length=128)
    config = JSONField(default=dict, blank=True)
    status = models.CharField(max_length=8, choices=RUN_STATES)
    summary = JSONField(default=dict, blank=True)
    output_dir = models.CharField(max_length=512, blank=True)
    created_at = models.DateTimeField(null=True, auto_now_add=True, db_column='created_at', blank=True)

    class Meta:
        ordering = ('-created_at',)

    def __str__(self):
        return "%s (%s)" % (self.family, self.status)
