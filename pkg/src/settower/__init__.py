"""settower: hereditarily finite sets, finite relation algebra, and the
exact number tower built on them (naturals, binary fractions, interval
reals), plus enumeration and finite choice utilities and a small CLI.

Submodules keep their own vocabularies (several deliberately reuse names
like ``pair`` and ``successor`` for their own domain), so the package
namespace re-exports only the headline types.
"""

from . import cli, countability, dyadic, errors, hfset, naturals, relations, reals
from .countability import Enumeration
from .dyadic import Dyadic
from .errors import SettowerError
from .hfset import HFSet
from .reals import Comparison, CutReal, Real
from .relations import Carrier, PropertyReport, Relation

__version__ = "0.1.0"

__all__ = [
    "Carrier",
    "Comparison",
    "CutReal",
    "Dyadic",
    "Enumeration",
    "HFSet",
    "PropertyReport",
    "Real",
    "Relation",
    "SettowerError",
    "__version__",
    "cli",
    "countability",
    "dyadic",
    "errors",
    "hfset",
    "naturals",
    "relations",
    "reals",
]
