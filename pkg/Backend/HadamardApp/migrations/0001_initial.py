# Generated by Django 6.0a1 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('size', models.PositiveSmallIntegerField()),
                ('field', models.CharField(max_length=24)),
                ('method', models.CharField(default='cayley', max_length=24)),
                ('trials', models.PositiveIntegerField()),
                ('seed', models.BigIntegerField()),
                ('relative_tol', models.FloatField(default=1e-08)),
                ('rank3_count', models.PositiveIntegerField(default=0)),
                ('rank1_count', models.PositiveIntegerField(default=0)),
                ('violation', models.BooleanField(default=False)),
                ('digest', models.CharField(max_length=64)),
                ('report', models.JSONField()),
                ('created', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created', '-id'],
                'indexes': [models.Index(fields=['size', 'field'], name='run_size_field_idx')],
            },
        ),
    ]
