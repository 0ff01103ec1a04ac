# HadamardApp/management/commands/bound.py
from __future__ import annotations

from django.core.management.base import CommandError

from HadamardApp.Algebra.runs import run_bound

from ._base import HadamardCommand, bounded_int


class Command(HadamardCommand):
    help = ("Smallest Hadamard-inverse rank a naive dimension count allows for m×m orthogonal matrices, "
            "next to the count itself.")
    statement = "the naive dimension count and the rank bound it implies"

    def add_arguments(self, parser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--m", type=bounded_int(2), help="matrix size (m ≥ 2)")
        group.add_argument("--range", nargs=2, type=bounded_int(2), metavar=("LO", "HI"), help="every m in LO..HI")
        parser.add_argument("--out", dest="output_path", default=None,
                            help="write the JSON result to this file instead of stdout")

    def run(self, **options):
        if options["m"] is not None:
            ms = [options["m"]]
        else:
            lo, hi = options["range"]
            if lo > hi:
                raise CommandError(f"empty range {lo}..{hi}", returncode=2)
            ms = range(lo, hi + 1)
        payload, ok = run_bound(ms)
        if payload["tension"]:
            self.note(payload["note"])
        return payload, ok
