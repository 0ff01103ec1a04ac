# HadamardApp/management/commands/conic.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.projective import PointConfig
from HadamardApp.Algebra.runs import generate_orthogonal, run_conic

from ._base import HadamardCommand


class Command(HadamardCommand):
    help = ("The conic through the coordinate triangle of P² and three points apolar to Σ(xⁱ)², "
            "with its value at all six points.")
    statement = "a triangle and an apolar triple lie on one conic"

    def add_arguments(self, parser):
        self.add_common_arguments(parser)

    def run(self, **options):
        if options["input_path"]:
            cfg = self.load_config(options["input_path"])
        else:
            A = generate_orthogonal(3, options["field"], options["seed"], conf.sampler_bounds(), options["tolerance"])
            cfg = PointConfig.from_matrix_columns(A)
        return run_conic(cfg, options["tolerance"])

    def failure_message(self, payload):
        return "the six points do not lie on the conic"
