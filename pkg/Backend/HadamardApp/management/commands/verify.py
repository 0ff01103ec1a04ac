# HadamardApp/management/commands/verify.py
from __future__ import annotations

from HadamardApp import conf
from HadamardApp.Algebra.kontsevich import Method, histogram_frame
from HadamardApp.Algebra.runs import run_verify
from HadamardApp.models import VerificationRun

from ._base import HadamardCommand, bounded_int


class Command(HadamardCommand):
    help = ("Sample random orthogonal matrices with no zero entry and tabulate the rank of their "
            "Hadamard inverses; rank 3 (m ≥ 3) or rank 1 on an exact backend is a violation.")
    statement = "the Hadamard inverse of an orthogonal matrix never has rank three"

    def add_arguments(self, parser):
        parser.add_argument("--m", type=bounded_int(2), required=True, help="matrix size (m ≥ 2)")
        parser.add_argument("--trials", type=bounded_int(1), default=1000, help="number of samples (default 1000)")
        parser.add_argument("--sampler", choices=[m.value for m in Method], default=None,
                            help="cayley (exact backends), gram-schmidt or rnc-family (float backends)")
        parser.add_argument("--workers", type=bounded_int(1), default=None,
                            help="worker threads (default settings.HADAMARD['WORKERS'])")
        parser.add_argument("--save", action="store_true", help="store the report as a VerificationRun")
        parser.add_argument("--csv", action="store_true", help="also write the rank histogram to RESULTS_DIR as CSV")
        self.add_common_arguments(parser, with_input=False)

    def run(self, **options):
        payload, ok = run_verify(
            options["m"],
            options["trials"],
            options["field"],
            options["seed"],
            options["tolerance"],
            method=Method(options["sampler"]) if options["sampler"] else None,
            bounds=conf.sampler_bounds(),
            workers=options["workers"] or conf.workers(),
        )
        if payload["suspicious"]:
            self.note(f"{len(payload['suspicious'])} float trial(s) look like rank 3 or rank 1; "
                      "re-check their seeds with --field rational or gaussian-rational")
        if options["save"]:
            run = VerificationRun.from_report(payload)
            self.note(f"saved run {run.pk}")
        if options["csv"]:
            path = conf.results_dir() / f"verify_m{payload['size']}_{payload['field']}_seed{payload['seed']}.csv"
            histogram_frame(payload["histogram"]).to_csv(path, index=False, encoding="utf-8")
            self.note(f"wrote {path}")
        return payload, ok

    def failure_message(self, payload):
        return f"{payload['violation_count']} violation(s) found for m = {payload['size']}"
