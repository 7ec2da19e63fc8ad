"""Exact Farey tessellations, the Ptolemy-Thompson and Kashaev groups, and their zeta-charges."""

from tqc.kernel import BACKEND
from tqc.exactnum import ExtendedRational, PPSL2ZMap, SL2ZMatrix, parse_rational

__all__ = ["BACKEND", "ExtendedRational", "PPSL2ZMap", "SL2ZMatrix", "parse_rational"]
__version__ = "0.1.0"
