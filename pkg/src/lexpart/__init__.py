"""Partition relations for lexicographically ordered binary sequences."""

from .ordinal import Ordinal, parse_ordinal, format_ordinal, natural_sum
from .ordertype import parse_type, format_type, normalize, same_order_type, FiniteSumForm
from .classifier import TrichotomyReport, classify, beta, xi
from .cantorlex import Alpha, Point, delta, lex_cmp
from .families import Chain, ZetaClass, RepFamily, Tower, LevelSchedule, cc_enumerate
from .canonise import SymbolicOrdinalSet, canonise_family, n_map, n_prime
from .colourings import COLOURINGS, ORACLES, DyadicCopy, FLIP_BOUND
from .famfile import parse_family, format_family, load_family, save_family

__version__ = "0.1.0"
