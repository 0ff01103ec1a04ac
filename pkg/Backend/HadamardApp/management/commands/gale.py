# HadamardApp/management/commands/gale.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.runs import generate_split, run_gale

from ._base import HadamardCommand, bounded_int


class Command(HadamardCommand):
    help = ("Gale transform of a split configuration (simplex first), with the association check "
            "and the comparison of Cremona and association.")
    statement = "a split configuration is associated to its Gale transform, and association commutes with Cremona"

    def add_arguments(self, parser):
        parser.add_argument("--r", type=bounded_int(1), default=2, help="ambient dimension of a generated Γ (default 2)")
        parser.add_argument("--s", type=bounded_int(0), default=2, help="Γ has r+s+2 points (default s = 2)")
        self.add_common_arguments(parser)

    def run(self, **options):
        if options["input_path"]:
            cfg = self.load_split(options["input_path"])
        else:
            cfg = generate_split(options["r"], options["s"], options["field"], options["seed"],
                                 conf.sampler_bounds(), options["tolerance"])
        return run_gale(cfg, options["tolerance"])

    def failure_message(self, payload):
        return "Γ and its Gale transform failed the association or Cremona check"
