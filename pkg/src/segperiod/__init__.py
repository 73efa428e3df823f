"""Segment calculus and symplectic-period classification for ``GL_n(D)``, ``n <= 4``."""

from __future__ import annotations

from .decomp import PairDecomposition, decompose_pair_L, decompose_pair_Z, normalize
from .distinction import Classifier, Status, TriBool, Verdict, classify, classify_induced, sp_hom
from .duality import mw_dual, z_parameter, l_parameter
from .errors import UnsupportedError
from .forms import Lform, Product, RepForm, Zform
from .jacquet import JacquetTerm, jacquet
from .order import enumerate_below, leq
from .segcore import CuspidalPoint, Multisegment, Segment, contragredient, linked, precedes, twist
from .support import ConfigError, CuspidalLabel, Registry, default_registry, load_registry
from .textio import ParseError, format_form, format_multisegment, parse_expr, parse_multisegment

__version__ = "0.1.0"

__all__ = [
    "Classifier",
    "ConfigError",
    "CuspidalLabel",
    "CuspidalPoint",
    "JacquetTerm",
    "Lform",
    "Multisegment",
    "PairDecomposition",
    "ParseError",
    "Product",
    "Registry",
    "RepForm",
    "Segment",
    "Status",
    "TriBool",
    "UnsupportedError",
    "Verdict",
    "Zform",
    "classify",
    "classify_induced",
    "contragredient",
    "decompose_pair_L",
    "decompose_pair_Z",
    "default_registry",
    "enumerate_below",
    "format_form",
    "format_multisegment",
    "jacquet",
    "l_parameter",
    "leq",
    "linked",
    "load_registry",
    "mw_dual",
    "normalize",
    "parse_expr",
    "parse_multisegment",
    "precedes",
    "sp_hom",
    "twist",
    "z_parameter",
]
