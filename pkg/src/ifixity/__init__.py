"""Involution fixity of almost simple primitive groups with alternating or
sporadic socle: closed forms, brute force, class-fusion data and certified
inequalities."""

from ifixity.report import FixityReport

__version__ = "0.1.0"

__all__ = ["FixityReport", "__version__"]
