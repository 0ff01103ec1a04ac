# HadamardApp/management/commands/_base.py
"""Shared plumbing for the hadamard management commands.

Exit codes: 0 success, 1 property or conjecture violation, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Optional, Tuple

from django.core.management.base import BaseCommand, CommandError

from HadamardApp import conf
from HadamardApp.Algebra.codec import decode_config, decode_split_config
from HadamardApp.Algebra.exceptions import AlgebraError
from HadamardApp.Algebra.gale import SplitConfig
from HadamardApp.Algebra.kontsevich import FIELD_LABELS
from HadamardApp.Algebra.projective import PointConfig

logger = logging.getLogger(__name__)


def bounded_int(minimum: int):
    """argparse type: an integer ≥ ``minimum``."""

    def parse(raw: str) -> int:
        try:
            value = int(raw)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{raw!r} is not an integer") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}, got {value}")
        return value

    return parse


def scalar_list(raw: str) -> list:
    """argparse type: comma separated numbers; complex values use Python syntax (1+2j)."""
    try:
        values = [complex(item.strip()) for item in raw.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{raw!r} is not a comma separated list of numbers") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def integer_point(raw: str) -> list:
    """argparse type: comma separated integers or fractions, e.g. 1,2,4 or 1/2,3."""
    items = [item.strip() for item in raw.split(",") if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty point")
    return items


class HadamardCommand(BaseCommand):
    """Base class: common flags, JSON in/out and the exit-code contract."""

    #: the statement the command exercises, appended to ``help``
    statement = ""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        if self.statement:
            parser.epilog = f"Exercises: {self.statement}"
        return parser

    def add_common_arguments(self, parser, *, field_choices=FIELD_LABELS, field_default="rational",
                             with_input=True):
        parser.add_argument("--seed", type=int, default=0, help="base seed for every random choice (default 0)")
        parser.add_argument("--field", choices=field_choices, default=field_default,
                            help=f"scalar backend (default {field_default})")
        parser.add_argument("--tol", type=float, default=None,
                            help="relative tolerance of the float backend (default from settings.HADAMARD)")
        if with_input:
            parser.add_argument("--in", dest="input_path", default=None,
                                help="read the configuration from this JSON file instead of generating one")
        parser.add_argument("--out", dest="output_path", default=None,
                            help="write the JSON result to this file instead of stdout")

    # ----------------------------
    # input / output
    # ----------------------------
    def load_json(self, path: str) -> Any:
        try:
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise CommandError(f"cannot read {path}: {exc}", returncode=2) from exc
        except json.JSONDecodeError as exc:
            raise CommandError(f"{path} is not valid JSON: {exc}", returncode=2) from exc

    def load_config(self, path: str) -> PointConfig:
        data = self.load_json(path)
        if isinstance(data, dict):
            data = data.get("points", data)
        return decode_config(data)

    def load_split(self, path: str) -> SplitConfig:
        data = self.load_json(path)
        if isinstance(data, list):
            data = {"points": data}
        return decode_split_config(data)

    def emit(self, payload: Any, output_path: Optional[str]) -> None:
        text = json.dumps(payload, indent=2, sort_keys=True)
        if output_path:
            Path(output_path).write_text(text + "\n", encoding="utf-8")
            self.stderr.write(f"wrote {output_path}")
        else:
            self.stdout.write(text)

    def note(self, message: str) -> None:
        self.stderr.write(message)

    # ----------------------------
    # dispatch
    # ----------------------------
    def run(self, **options) -> Tuple[Any, bool]:
        raise NotImplementedError

    def failure_message(self, payload: Any) -> str:
        return f"{self.__module__.rsplit('.', 1)[-1]}: property check failed"

    def handle(self, *args, **options):
        try:
            options["tolerance"] = conf.tolerance(options.get("tol"))
        except ValueError as exc:
            raise CommandError(str(exc), returncode=2) from exc
        try:
            payload, ok = self.run(**options)
        except AlgebraError as exc:
            logger.debug("input error in %s: %s", self.__module__, exc)
            raise CommandError(f"{type(exc).__name__}: {exc}", returncode=2) from exc
        self.emit(payload, options.get("output_path"))
        if not ok:
            raise CommandError(self.failure_message(payload), returncode=1)
