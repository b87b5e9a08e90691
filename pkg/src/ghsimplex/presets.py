"""Named inputs usable in place of a matrix file.

"circle-m2" is the two-block summary of the unit circle with the ambient
plane metric: diameter 2, both block-diameter extremes equal to 2 (any two
arcs that are not antipodal-point pairs still realize the full diameter, and
the best two-block split keeps it as well), and zero spacing extremes, since
connectedness lets blocks touch. This is a characteristics record, not a
finite space; finite circle samples behave differently (see the
circle-sample generator).

"simplex-N-S" builds the N-point space with all distances S, e.g.
"simplex-4-2.5".
"""

from __future__ import annotations

import re

from .errors import BadParamsError
from .metric import FiniteMetricSpace, simplex
from .simplex_distance import Characteristics

_SIMPLEX_RE = re.compile(r"^simplex-(\d+)-(\d+(?:\.\d+)?)$")

PRESET_NAMES = ("circle-m2", "simplex-N-S")


def get_preset(name: str) -> FiniteMetricSpace | Characteristics:
    if name == "circle-m2":
        return Characteristics(
            m=2,
            diam=2.0,
            alpha_minus=0.0,
            alpha_plus=0.0,
            d_minus=2.0,
            d_plus=2.0,
            eps=0.0,
        )
    match = _SIMPLEX_RE.match(name)
    if match:
        n = int(match.group(1))
        side = float(match.group(2))
        if n < 1:
            raise BadParamsError(f"simplex preset needs at least one point: {name!r}")
        if not side > 0:
            raise BadParamsError(f"simplex preset needs a positive side: {name!r}")
        return simplex(n, side)
    raise BadParamsError(
        f"unknown preset {name!r}; available: circle-m2, simplex-N-S (e.g. simplex-4-2.5)"
    )
