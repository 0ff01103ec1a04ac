# HadamardApp/management/commands/quadrics.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.runs import generate_double_apolar, run_quadrics

from ._base import HadamardCommand, bounded_int


class Command(HadamardCommand):
    help = ("Dimension of the linear system of quadrics through a configuration; for a generated pair of "
            "apolar simplices it is compared with binom(n, 2) − 1.")
    statement = "quadrics through 2n+2 doubly apolar points form a system of dimension binom(n, 2) − 1"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=bounded_int(1), default=3, help="ambient dimension of a generated pair (default 3)")
        self.add_common_arguments(parser)

    def run(self, **options):
        if options["input_path"]:
            return run_quadrics(self.load_config(options["input_path"]), options["tolerance"])
        cfg = generate_double_apolar(options["n"], options["field"], options["seed"],
                                     conf.sampler_bounds(), options["tolerance"])
        return run_quadrics(cfg, options["tolerance"], double_apolar=True)

    def failure_message(self, payload):
        return f"dimension {payload['dimension']} differs from the expected {payload.get('expected')}"
