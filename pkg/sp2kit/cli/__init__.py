"""Command-line interface: ``sp2kit decompose | power | chain | sweep | oscillator``."""

from sp2kit.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
