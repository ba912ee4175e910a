"""Exact unlinking numbers and BJ-unlinking gaps for rational and pretzel links."""

from .conway import (
    PretzelWord,
    RationalWord,
    format_pretzel,
    format_rational,
    parse_pretzel,
    parse_rational,
)
from .rational import (
    CanonicalKey,
    LinkFraction,
    canonical_key,
    canonical_word,
    cf_eval,
    component_count,
    crossing_number,
    equivalent,
    is_trivial,
    word_key,
)
from .search import ChangeVector, apply_changes, diagram_unlink_number, u_min_diagram
from .bj import BJEngine, GapReport, bj_children, default_engine, gap, u_bj

__version__ = "0.1.0"
