"""Exact Belnap-Dunn probability: entailment, models, updates and aggregation.

All arithmetic is over :class:`fractions.Fraction`; floats are refused.
"""

from . import aggregate, assignment, dynamics, errors, formula, model, semantics, serialize
from .aggregate import *  # noqa: F401,F403
from .assignment import *  # noqa: F401,F403
from .dynamics import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .formula import *  # noqa: F401,F403
from .model import *  # noqa: F401,F403
from .rational import as_fraction, format_rational, parse_rationals
from .semantics import *  # noqa: F401,F403
from .serialize import *  # noqa: F401,F403

__version__ = "0.1.0"
