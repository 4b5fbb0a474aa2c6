"""Orbit sums of even Weyl groups (E-functions).

``xi`` is the normalised orbit sum over all elements of the selected
even group; it equals the stabiliser order times the plain orbit sum
``xi_orbit``.  ``xi_closed`` evaluates the closed form tabulated for
each supported group and kind, transcribed verbatim; two of those
closed forms (both for a1xg2) are known to be misprinted, and
``xi_closed`` intentionally reproduces the misprints so that the
verification suite can exhibit them.  ``xi_fast`` picks the closed form
when it is trusted and falls back to the generic sum otherwise.
"""

from __future__ import annotations

import cmath
import math

from .lie_data import SemisimpleSystem, TorusPoint, Weight, exp_phase
from .weyl import even_subgroup, check_kind, stab_order


class UnsupportedFormulaError(ValueError):
    """No closed form is available for the requested system and kind."""


def xi(system: SemisimpleSystem, kind: str, lam: Weight, x: TorusPoint) -> complex:
    """Sum of ``exp(2 pi i <w lam, x>)`` over the whole even group.

    Terms are accumulated in the canonical group-element order, so the
    result is bitwise reproducible.
    """
    lam = tuple(lam)
    group = even_subgroup(system, check_kind(kind))
    total = 0j
    for w in group:
        total += exp_phase(system, w.apply_weight(lam), x)
    return total


def xi_orbit(system: SemisimpleSystem, kind: str, lam: Weight, x: TorusPoint) -> complex:
    """Sum over the distinct orbit members only: ``xi / stab_order``."""
    from .weyl import orbit

    group = even_subgroup(system, check_kind(kind))
    total = 0j
    for mu in orbit(group, tuple(lam)):
        total += exp_phase(system, mu, x)
    return total


def xi_stabilizer_order(system: SemisimpleSystem, kind: str, lam: Weight) -> int:
    return stab_order(even_subgroup(system, check_kind(kind)), tuple(lam))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _e(t: float) -> complex:
    return cmath.exp(1j * t)


def _a1xa1_ee(a, b, x, y):
    return _e(math.pi * (a * x + b * y))


def _a1xa1_e(a, b, x, y):
    return 2 * math.cos(math.pi * (a * x + b * y))


def _a1xa2_ee(a, b, c, x, y, z):
    t = 2 * math.pi / 3
    inner = (
        _e(t * ((2 * b + c) * y + (b + 2 * c) * z))
        + _e(-t * ((y + 2 * z) * b + (z - y) * c))
        + _e(-t * ((y - z) * b + (2 * y + z) * c))
    )
    return _e(math.pi * a * x) * inner


def _a1xa2_e(a, b, c, x, y, z):
    t = 2 * math.pi / 3
    plus = (
        _e(t * ((2 * b + c) * y + (b + 2 * c) * z))
        + _e(-t * ((b - c) * y + (2 * b + c) * z))
        + _e(-t * ((b + 2 * c) * y + (c - b) * z))
    )
    minus = (
        _e(t * ((c - b) * y + (b + 2 * c) * z))
        + _e(t * ((2 * b + c) * y + (b - c) * z))
        + _e(-t * ((2 * c + b) * y + (c + 2 * b) * z))
    )
    return _e(math.pi * a * x) * plus + _e(-math.pi * a * x) * minus


def _a1xc2_ee(a, b, c, x, y, z):
    p = math.pi
    inner = math.cos(p * ((2 * b + 2 * c) * y + (b + 2 * c) * z)) + math.cos(
        p * (2 * c * y - b * z)
    )
    return 2 * _e(p * a * x) * inner


def _a1xc2_e(a, b, c, x, y, z):
    p = math.pi
    plus = math.cos(p * ((2 * b + 2 * c) * y + (b + 2 * c) * z)) + math.cos(
        p * (2 * c * y - b * z)
    )
    minus = math.cos(p * (2 * c * y + (b + 2 * c) * z)) + math.cos(
        p * (b * z + (2 * b + 2 * c) * y)
    )
    return 2 * _e(p * a * x) * plus + 2 * _e(-p * a * x) * minus


def _a1xg2_ee(a, b, c, x, y, z):
    # Transcribed as tabulated; deviates from the generic orbit sum
    # (misprinted inner factors of 2 and an x where a y belongs).
    p = math.pi
    inner = (
        math.cos(2 * p * ((2 * b + c) * y + (3 * b + 2 * c) * z))
        + 2 * math.cos(2 * p * (b * x + (3 * b + c) * z))
        + 2 * math.cos(2 * p * ((b + c) * y + c * z))
    )
    return 2 * _e(p * a * x) * inner


def _a1xg2_e(a, b, c, x, y, z):
    # Transcribed as tabulated; deviates from the generic orbit sum
    # (an a where a b belongs and a lone pi where siblings carry 2 pi).
    p = math.pi
    plus = (
        math.cos(2 * p * ((2 * b + c) * y + (3 * b + 2 * c) * z))
        + math.cos(2 * p * (a * y + (3 * b + c) * z))
        + math.cos(2 * p * ((b + c) * y + c * z))
    )
    minus = (
        math.cos(2 * p * ((2 * b + c) * y + (3 * b + c) * z))
        + math.cos(2 * p * (b * y - c * z))
        + math.cos(p * ((b + c) * y + (3 * b + 2 * c) * z))
    )
    return 2 * _e(p * a * x) * plus + 2 * _e(-p * a * x) * minus


def _a1xa1xa1_ee(a, b, c, x, y, z):
    return _e(math.pi * (a * x + b * y + c * z))


def _a1xa1xa1_e(a, b, c, x, y, z):
    p = math.pi
    return 2 * _e(p * a * x) * math.cos(p * (b * y + c * z)) + 2 * _e(
        -p * a * x
    ) * math.cos(p * (b * y - c * z))


_CLOSED_FORMS = {
    ("a1xa1", "ee"): _a1xa1_ee,
    ("a1xa1", "e"): _a1xa1_e,
    ("a1xa2", "ee"): _a1xa2_ee,
    ("a1xa2", "e"): _a1xa2_e,
    ("a1xc2", "ee"): _a1xc2_ee,
    ("a1xc2", "e"): _a1xc2_e,
    ("a1xg2", "ee"): _a1xg2_ee,
    ("a1xg2", "e"): _a1xg2_e,
    ("a1xa1xa1", "ee"): _a1xa1xa1_ee,
    ("a1xa1xa1", "e"): _a1xa1xa1_e,
}

#: closed forms that agree with the generic sum; the a1xg2 pair does not
TRUSTED_CLOSED_FORMS = frozenset(
    key for key in _CLOSED_FORMS if key[0] != "a1xg2"
)


def xi_closed(system: SemisimpleSystem, kind: str, lam: Weight, x: TorusPoint) -> complex:
    """Evaluate the tabulated closed form for this system and kind.

    Raises :class:`UnsupportedFormulaError` when no closed form is
    tabulated.  The two a1xg2 forms reproduce their misprints; use
    :func:`xi_fast` for a value that is always correct.
    """
    key = (system.selector, check_kind(kind))
    fn = _CLOSED_FORMS.get(key)
    if fn is None:
        raise UnsupportedFormulaError(
            f"no closed form for selector {system.selector!r}, kind {kind!r}"
        )
    args = [float(v) for v in lam] + [float(v) for v in x]
    return complex(fn(*args))


def xi_fast(system: SemisimpleSystem, kind: str, lam: Weight, x: TorusPoint) -> complex:
    """Closed form when trusted, generic orbit sum otherwise."""
    if (system.selector, kind) in TRUSTED_CLOSED_FORMS:
        return xi_closed(system, kind, lam, x)
    return xi(system, kind, lam, x)
