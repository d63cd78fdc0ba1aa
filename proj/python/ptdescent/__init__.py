"""Descent, action extension and centralization checks on finite algebras."""

from ._core import ParseError, Report, Verdict, Witness, roundtrip, run, small_groups

__all__ = ["ParseError", "Report", "Verdict", "Witness", "roundtrip", "run", "small_groups"]
