"""Mirror-invariant lower bounds for unlinking numbers.

Both bounds come from the standard diagram of the word: the linking number
from signed crossings between the two components, the signature from the
Goeritz form of a checkerboard surface with the Gordon-Litherland
correction.  Only absolute values are exposed.

For knots |sigma| is an invariant of the class.  For 2-component links the
signature depends on the relative orientation of the components; the value
reported is the one induced by the diagram traversal.  Either way
ceil(|sigma|/2) and |lk| bound every unlinking number from below, because a
crossing change moves the signature by at most 2 and the linking number by
at most 1, and both vanish on unlinks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conway import RationalWord
from .diagram import build_rational_diagram, components, signature, total_linking_bound
from .errors import TrivialLink
from .rational import CanonicalKey, canonical_word


@dataclass(frozen=True)
class BoundCertificate:
    key: CanonicalKey
    abs_linking: int | None      # absent for knots
    abs_signature: int
    lower_bound: int


def linking_number_abs(word: RationalWord) -> int | None:
    """|lk| of a 2-component word, or None for knots."""
    d = build_rational_diagram(word)
    if components(d) != 2:
        return None
    return total_linking_bound(d)


def signature_abs(word: RationalWord) -> int:
    """|sigma| of the word's standard diagram (see module docstring)."""
    return abs(signature(build_rational_diagram(word)))


def certify(key: CanonicalKey) -> BoundCertificate:
    """Bundle both bounds for the canonical word of a nontrivial class."""
    if key.p_abs <= 1:
        raise TrivialLink(f"no bounds for {key}")
    word = canonical_word(key)
    lk = linking_number_abs(word)
    sig = signature_abs(word)
    lower = max(lk or 0, (sig + 1) // 2)
    return BoundCertificate(key=key, abs_linking=lk, abs_signature=sig, lower_bound=lower)
