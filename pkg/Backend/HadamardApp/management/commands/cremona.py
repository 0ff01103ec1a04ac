# HadamardApp/management/commands/cremona.py
from __future__ import annotations

from django.core.management.base import CommandError

from HadamardApp.Algebra.codec import decode_config
from HadamardApp.Algebra.runs import run_cremona

from ._base import HadamardCommand, integer_point


class Command(HadamardCommand):
    help = "Apply the standard Cremona transformation [x⁰:…:xⁿ] ↦ [1/x⁰:…:1/xⁿ] to points."
    statement = "the standard Cremona transformation is an involution off the coordinate hyperplanes"

    def add_arguments(self, parser):
        parser.add_argument("--point", type=integer_point, action="append", default=None,
                            help="a point as comma separated rationals, e.g. 1,2,4 (repeatable)")
        self.add_common_arguments(parser)

    def run(self, **options):
        if options["input_path"]:
            cfg = self.load_config(options["input_path"])
        elif options["point"]:
            cfg = decode_config(options["point"])
        else:
            raise CommandError("give --point or --in", returncode=2)
        return run_cremona(cfg, options["tolerance"])
