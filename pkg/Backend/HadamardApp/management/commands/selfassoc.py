# HadamardApp/management/commands/selfassoc.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.runs import generate_double_apolar, run_selfassoc

from ._base import HadamardCommand, bounded_int


class Command(HadamardCommand):
    help = "Decide whether 2n+2 points of Pⁿ split into two simplices apolar to one quadric."
    statement = "self-associated sets are apolar with respect to some quadric Q"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=bounded_int(1), default=2, help="ambient dimension of a generated pair (default 2)")
        self.add_common_arguments(parser)

    def run(self, **options):
        if options["input_path"]:
            cfg = self.load_split(options["input_path"])
        else:
            cfg = generate_double_apolar(options["n"], options["field"], options["seed"],
                                         conf.sampler_bounds(), options["tolerance"])
        return run_selfassoc(cfg, options["tolerance"])

    def failure_message(self, payload):
        return "the configuration is not self-associated"
