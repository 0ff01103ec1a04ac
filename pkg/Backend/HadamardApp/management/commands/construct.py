# HadamardApp/management/commands/construct.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.runs import run_construct

from ._base import HadamardCommand, bounded_int, scalar_list


class Command(HadamardCommand):
    help = ("Build an (n+1)×(n+1) orthogonal matrix whose Hadamard inverse has rank 2 from a rational "
            "normal curve through the coordinate simplex, and print its certificate.")
    statement = "orthogonal matrices with rank two Hadamard inverses form a (2m−3)-dimensional family"

    def add_arguments(self, parser):
        parser.add_argument("--n", type=bounded_int(1), required=True, help="ambient dimension; the matrix is (n+1)×(n+1)")
        parser.add_argument("--p0", type=scalar_list, default=None, help="point at t = ∞, e.g. 1,1,1 (random if omitted)")
        parser.add_argument("--nodes", type=scalar_list, default=None, help="node values a_0..a_n, e.g. 0,1,2")
        parser.add_argument("--local-dimension", action="store_true",
                            help="also compute the numerical dimension of the family at the result")
        self.add_common_arguments(parser, field_choices=("real", "complex"), field_default="real", with_input=False)

    def run(self, **options):
        return run_construct(
            options["n"],
            options["field"],
            options["seed"],
            p0=options["p0"],
            nodes=options["nodes"],
            tol=options["tolerance"],
            with_local_dimension=options["local_dimension"],
            step=conf.fd_step(),
            jacobian_tol=conf.jacobian_tolerance(),
        )

    def failure_message(self, payload):
        return "certificate residuals exceed the acceptance tolerances"
