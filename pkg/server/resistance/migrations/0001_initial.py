# -*- coding: utf-8 -*-
from django.db import migrations, models
import jsonfield.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='FamilyDefinition',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(help_text='Name used with --family. Ex: "ladder3"', max_length=128, unique=True)),
                ('definition', jsonfield.fields.JSONField(help_text='Family definition: diag, offdiags, border, entries, min_size...')),
                ('created_at', models.DateTimeField(auto_now_add=True, blank=True, db_column='created_at', null=True)),
                ('updated_at', models.DateTimeField(auto_now=True, blank=True, db_column='updated_at', null=True)),
            ],
        ),
        migrations.CreateModel(
            name='PipelineRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('family', models.CharField(max_length=128)),
                ('config', jsonfield.fields.JSONField(blank=True, default=dict)),
                ('status', models.CharField(choices=[('ok', 'ok'), ('warned', 'warned'), ('failed', 'failed')], max_length=8)),
                ('summary', jsonfield.fields.JSONField(blank=True, default=dict)),
                ('output_dir', models.CharField(blank=True, max_length=512)),
                ('created_at', models.DateTimeField(auto_now_add=True, blank=True, db_column='created_at', null=True)),
            ],
            options={
                'ordering': ('-created_at',),
            },
        ),
    ]
