"""Regeneration of the tabulated normalisation coefficients and volumes.

The orthogonality relations of the orbit sums come with three families
of integer coefficients: exact stabiliser orders ``d`` (continuous
case), torus orbit sizes ``eps`` and congruence stabiliser orders ``h``
(discrete case).  Reference tables of these values exist for the five
supported groups, classified by which entries of the Kac-style label
vanish.  This module re-derives every row from the group action and
diffs it against the reference value.

A handful of reference entries are misprints; the group action is the
ground truth, so those rows are collected in :data:`KNOWN_ERRATA`
(together with the two defective a1xg2 closed forms) instead of being
silently accepted.  :func:`errata_report` produces the same information
as structured notes.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .lie_data import Q, SemisimpleSystem, domain_volume, system_from_selector
from .weyl import even_subgroup, check_kind, stab_order, torus_orbit_size, weight_stab_mod_mq
from . import efunc

TABLE_IDS = ("T1_A1A1", "T2_d_ee", "T3_d_e", "T4_disk_ee", "T5_disk_e", "T6_A1A1A1")

#: largest modulus tried when a row's zero pattern is unrealisable at the
#: requested one (divisibility constraints such as 2*s2 = M need even M)
_FALLBACK_SPAN = 8

RANK3_GROUPS = ("a1xa2", "a1xc2", "a1xg2", "a1xa1xa1")
TWO_FACTOR_GROUPS = ("a1xa2", "a1xc2", "a1xg2")


# ---------------------------------------------------------------------------
# reference data
# ---------------------------------------------------------------------------

# weight-coordinate zero patterns -> reference d values
_T1_D = [
    ((1, 1), 1),
    ((0, 1), 1),
    ((1, 0), 1),
    ((0, 0), 2),
]

# label zero patterns over [s0, s1, s0', s2] -> reference values
_T1_EPS = [
    ((1, 1, 1, 1), 2),
    ((1, 1, 1, 0), 2),
    ((1, 1, 0, 1), 2),
    ((1, 0, 1, 1), 2),
    ((1, 0, 1, 0), 1),
    ((1, 0, 0, 1), 1),
    ((0, 1, 1, 1), 2),
    ((0, 1, 1, 0), 1),
    ((0, 1, 0, 1), 1),
]

_T1_H = [
    ((1, 1, 1, 1), 1),
    ((1, 1, 1, 0), 1),
    ((1, 1, 0, 1), 1),
    ((1, 0, 1, 1), 1),
    ((1, 0, 1, 0), 2),
    ((1, 0, 0, 1), 2),
    ((0, 1, 1, 1), 1),
    ((0, 1, 1, 0), 2),
    ((0, 1, 0, 1), 2),
]

# rows over (a, b, c); columns a1xa2, a1xc2, a1xg2, a1xa1xa1
_T2_D = [
    ((1, 1, 1), (1, 1, 1, 1)),
    ((0, 1, 1), (1, 1, 1, 1)),
    ((1, 0, 1), (1, 1, 1, 1)),
    ((1, 1, 0), (1, 1, 1, 1)),
    ((0, 0, 1), (1, 1, 1, 1)),
    ((0, 1, 0), (1, 1, 1, 1)),
    ((1, 0, 0), (3, 4, 6, 1)),
    ((0, 0, 0), (3, 4, 6, 1)),
]

_T3_D = [
    ((1, 1, 1), (1, 1, 1, 1)),
    ((0, 1, 1), (1, 1, 1, 1)),
    ((1, 0, 1), (1, 1, 1, 1)),
    ((1, 1, 0), (1, 1, 1, 1)),
    ((0, 0, 1), (2, 2, 2, 2)),
    ((0, 1, 0), (2, 2, 2, 2)),
    ((1, 0, 0), (3, 4, 6, 2)),
    ((0, 0, 0), (6, 8, 12, 4)),
]

# rows over [s0, s1, s0', s2, s3]; columns a1xa2, a1xc2, a1xg2
_T4_EPS = [
    ((1, 1, 1, 1, 1), (3, 4, 6)),
    ((1, 1, 1, 1, 0), (3, 4, 6)),
    ((1, 1, 1, 0, 1), (3, 4, 6)),
    ((1, 1, 0, 1, 1), (3, 4, 6)),
    ((1, 1, 1, 0, 0), (1, 1, 1)),
    ((1, 1, 0, 1, 0), (1, 2, 2)),
    ((1, 1, 0, 0, 1), (1, 1, 3)),
    ((1, 0, 1, 1, 1), (3, 4, 6)),
    ((1, 0, 1, 1, 0), (3, 4, 6)),
    ((1, 0, 1, 0, 1), (3, 4, 6)),
    ((1, 0, 0, 1, 1), (3, 4, 6)),
    ((1, 0, 1, 0, 0), (1, 1, 1)),
    ((1, 0, 0, 1, 0), (1, 2, 2)),
    ((1, 0, 0, 0, 1), (1, 1, 3)),
    ((0, 1, 1, 1, 1), (3, 4, 6)),
    ((0, 1, 1, 1, 0), (3, 4, 6)),
    ((0, 1, 1, 0, 1), (3, 4, 6)),
    ((0, 1, 0, 1, 1), (3, 4, 6)),
    ((0, 1, 1, 0, 0), (1, 1, 1)),
    ((0, 1, 0, 1, 0), (1, 2, 2)),
    ((0, 1, 0, 0, 1), (1, 1, 3)),
]

_T4_H = [
    ((1, 1, 1, 1, 1), (1, 1, 1)),
    ((1, 1, 1, 1, 0), (1, 1, 1)),
    ((1, 1, 1, 0, 1), (1, 1, 1)),
    ((1, 1, 0, 1, 1), (1, 1, 1)),
    ((1, 1, 1, 0, 0), (3, 4, 6)),
    ((1, 1, 0, 1, 0), (3, 4, 3)),
    ((1, 1, 0, 0, 1), (3, 2, 2)),
    ((1, 0, 1, 1, 1), (1, 1, 1)),
    ((1, 0, 1, 1, 0), (1, 1, 1)),
    ((1, 0, 1, 0, 1), (1, 1, 1)),
    ((1, 0, 0, 1, 1), (1, 1, 1)),
    ((1, 0, 1, 0, 0), (3, 4, 6)),
    ((1, 0, 0, 1, 0), (3, 4, 3)),
    ((1, 0, 0, 0, 1), (3, 2, 2)),
    ((0, 1, 1, 1, 1), (1, 1, 1)),
    ((0, 1, 1, 1, 0), (1, 1, 1)),
    ((0, 1, 1, 0, 1), (1, 1, 1)),
    ((0, 1, 0, 1, 1), (1, 1, 1)),
    ((0, 1, 1, 0, 0), (3, 4, 6)),
    ((0, 1, 0, 1, 0), (3, 4, 3)),
    ((0, 1, 0, 0, 1), (3, 2, 2)),
]

_T5_EPS = [
    ((1, 1, 1, 1, 1), (6, 8, 12)),
    ((1, 1, 1, 1, 0), (6, 8, 12)),
    ((1, 1, 1, 0, 1), (6, 8, 12)),
    ((1, 1, 0, 1, 1), (6, 8, 12)),
    ((1, 1, 1, 0, 0), (2, 2, 2)),
    ((1, 1, 0, 1, 0), (2, 4, 4)),
    ((1, 1, 0, 0, 1), (2, 2, 6)),
    ((1, 0, 1, 1, 1), (6, 8, 12)),
    ((1, 0, 1, 1, 0), (3, 4, 6)),
    ((1, 0, 1, 0, 1), (3, 4, 6)),
    ((1, 0, 0, 1, 1), (3, 4, 6)),
    ((1, 0, 1, 0, 0), (1, 1, 1)),
    ((1, 0, 0, 1, 0), (1, 2, 2)),
    ((1, 0, 0, 0, 1), (1, 1, 3)),
    ((0, 1, 1, 1, 1), (6, 8, 12)),
    ((0, 1, 1, 1, 0), (3, 4, 6)),
    ((0, 1, 1, 0, 1), (3, 4, 6)),
    ((0, 1, 0, 1, 1), (3, 4, 6)),
    ((0, 1, 1, 0, 0), (1, 1, 1)),
    ((0, 1, 0, 1, 0), (1, 2, 2)),
    ((0, 1, 0, 0, 1), (1, 1, 3)),
]

_T5_H = [
    ((1, 1, 1, 1, 1), (1, 1, 1)),
    ((1, 1, 1, 1, 0), (1, 1, 1)),
    ((1, 1, 1, 0, 1), (1, 1, 1)),
    ((1, 1, 0, 1, 1), (1, 1, 1)),
    ((1, 1, 1, 0, 0), (3, 4, 6)),
    ((1, 1, 0, 1, 0), (3, 4, 3)),
    ((1, 1, 0, 0, 1), (3, 2, 2)),
    ((1, 0, 1, 1, 1), (1, 1, 1)),
    ((1, 0, 1, 1, 0), (2, 2, 2)),
    ((1, 0, 1, 0, 1), (2, 2, 2)),
    ((1, 0, 0, 1, 1), (2, 2, 2)),
    ((1, 0, 1, 0, 0), (6, 8, 12)),
    ((1, 0, 0, 1, 0), (6, 8, 6)),
    ((1, 0, 0, 0, 1), (6, 4, 4)),
    ((0, 1, 1, 1, 1), (1, 1, 1)),
    ((0, 1, 1, 1, 0), (2, 2, 2)),
    ((0, 1, 1, 0, 1), (2, 2, 2)),
    ((0, 1, 0, 1, 1), (2, 2, 2)),
    ((0, 1, 1, 0, 0), (6, 8, 12)),
    ((0, 1, 0, 1, 0), (6, 8, 6)),
    ((0, 1, 0, 0, 1), (6, 4, 4)),
]

# rows over [s0, s1, s0', s2, s0'', s3]
_T6_EPS = [
    ((1, 1, 1, 1, 1, 1), 4),
    ((1, 1, 1, 1, 1, 0), 4),
    ((1, 1, 1, 1, 0, 1), 4),
    ((1, 1, 1, 0, 1, 1), 4),
    ((1, 1, 1, 0, 1, 0), 2),
    ((1, 1, 1, 0, 0, 1), 2),
    ((1, 1, 0, 1, 1, 1), 2),
    ((1, 1, 0, 1, 1, 0), 2),
    ((1, 1, 0, 1, 0, 1), 2),
    ((1, 0, 1, 1, 1, 1), 4),
    ((1, 0, 1, 1, 1, 0), 2),
    ((1, 0, 1, 1, 0, 1), 2),
    ((1, 0, 1, 0, 1, 1), 2),
    ((1, 0, 1, 0, 1, 0), 1),
    ((1, 0, 1, 0, 0, 1), 1),
    ((1, 0, 0, 1, 1, 1), 2),
    ((1, 0, 0, 1, 1, 0), 1),
    ((1, 0, 0, 1, 0, 1), 1),
    ((0, 1, 1, 1, 1, 1), 4),
    ((0, 1, 1, 1, 1, 0), 2),
    ((0, 1, 1, 1, 0, 1), 2),
    ((0, 1, 1, 0, 1, 1), 2),
    ((0, 1, 1, 0, 1, 0), 1),
    ((0, 1, 1, 0, 0, 1), 1),
    ((0, 1, 0, 1, 1, 1), 2),
    ((0, 1, 0, 1, 1, 0), 1),
    ((0, 1, 0, 1, 0, 1), 1),
]

_T6_H = [
    ((1, 1, 1, 1, 1, 1), 1),
    ((1, 1, 1, 1, 1, 0), 1),
    ((1, 1, 1, 1, 0, 1), 1),
    ((1, 1, 1, 0, 1, 1), 1),
    ((1, 1, 1, 0, 1, 0), 2),
    ((1, 1, 1, 0, 0, 1), 2),
    ((1, 1, 0, 1, 1, 1), 2),
    ((1, 1, 0, 1, 1, 0), 2),
    ((1, 1, 0, 1, 0, 1), 2),
    ((1, 0, 1, 1, 1, 1), 1),
    ((1, 0, 1, 1, 1, 0), 2),
    ((1, 0, 1, 1, 0, 1), 2),
    ((1, 0, 1, 0, 1, 1), 2),
    ((1, 0, 1, 0, 1, 0), 4),
    ((1, 0, 1, 0, 0, 1), 4),
    ((1, 0, 0, 1, 1, 1), 2),
    ((1, 0, 0, 1, 1, 0), 4),
    ((1, 0, 0, 1, 0, 1), 4),
    ((0, 1, 1, 1, 1, 1), 1),
    ((0, 1, 1, 1, 1, 0), 2),
    ((0, 1, 1, 1, 0, 1), 2),
    ((0, 1, 1, 0, 1, 1), 2),
    ((0, 1, 1, 0, 1, 0), 4),
    ((0, 1, 1, 0, 0, 1), 4),
    ((0, 1, 0, 1, 1, 1), 2),
    ((0, 1, 0, 1, 1, 0), 4),
    ((0, 1, 0, 1, 0, 1), 4),
]

#: reference fundamental-domain volumes per (selector, kind)
REFERENCE_VOLUMES = {
    ("a1xa1", "e"): 1.0,
    ("a1xa1", "ee"): 2.0,
    ("a1xa2", "e"): 1.0 / math.sqrt(6.0),
    ("a1xa2", "ee"): 2.0 / math.sqrt(6.0),
    ("a1xc2", "e"): math.sqrt(2.0) / 4.0,
    ("a1xc2", "ee"): 1.0 / math.sqrt(2.0),
    ("a1xg2", "e"): math.sqrt(6.0) / 12.0,
    ("a1xg2", "ee"): math.sqrt(6.0) / 6.0,
    ("a1xa1xa1", "e"): 1.0 / math.sqrt(2.0),
    ("a1xa1xa1", "ee"): 2.0 * math.sqrt(2.0),
}

#: reference even-group orders per selector: (|full even|, |product even|)
REFERENCE_GROUP_ORDERS = {
    "a1xa1": (2, 1),
    "a1xa2": (6, 3),
    "a1xc2": (8, 4),
    "a1xg2": (12, 6),
    "a1xa1xa1": (4, 1),
}


# ---------------------------------------------------------------------------
# row instantiation
# ---------------------------------------------------------------------------

def _slot_names(system: SemisimpleSystem, prefix: str):
    names = []
    primes = ["", "'", "''", "'''"]
    counter = 0
    index = 1
    for f in system.factors:
        names.append(f"{prefix}0{primes[counter]}")
        counter += 1
        for _ in range(f.rank):
            names.append(f"{prefix}{index}")
            index += 1
    return names


def pattern_string(system: SemisimpleSystem, flags, prefix: str) -> str:
    names = _slot_names(system, prefix)
    return "[" + ",".join(n if f else "0" for n, f in zip(names, flags)) + "]"


def weight_pattern_string(flags) -> str:
    names = "abc"
    return "(" + ",".join(names[i] if f else "0" for i, f in enumerate(flags)) + ")"


def _factor_slot_flags(system: SemisimpleSystem, flags):
    """Split a label zero-pattern into per-factor (s0_flag, coord_flags)."""
    out = []
    pos = 0
    for f in system.factors:
        out.append((flags[pos], tuple(flags[pos + 1: pos + 1 + f.rank])))
        pos += 1 + f.rank
    return out


def _factor_assignments(factor, s0_flag, coord_flags, marks, modulus):
    """All per-factor label tuples realising the zero pattern at this modulus."""
    ranges = [
        range(1, modulus + 1) if flag else range(0, 1) for flag in coord_flags
    ]
    out = []
    for coords in itertools.product(*ranges):
        s0 = modulus - sum(m * s for m, s in zip(marks, coords))
        if s0 < 0:
            continue
        if (s0 != 0) != bool(s0_flag):
            continue
        out.append((s0,) + coords)
    return out


def _label_instances(system, flags, modulus, dual):
    """Full-label instances of a zero pattern, or [] when unrealisable."""
    per_factor = []
    for f, (s0_flag, coord_flags) in zip(system.factors, _factor_slot_flags(system, flags)):
        marks = f.dual_marks if dual else f.marks
        cells = _factor_assignments(f, s0_flag, coord_flags, marks, modulus)
        if not cells:
            return []
        per_factor.append(cells)
    return [
        tuple(v for piece in combo for v in piece)
        for combo in itertools.product(*per_factor)
    ]


def _label_coordinates(system, label):
    """Strip the derived s0 entries, keeping one coordinate per rank."""
    coords = []
    pos = 0
    for f in system.factors:
        coords.extend(label[pos + 1: pos + 1 + f.rank])
        pos += 1 + f.rank
    return tuple(coords)


def _compute_eps(system, kind, flags, modulus):
    """Generic torus-orbit size on a label stratum (max over instances)."""
    instances = _label_instances(system, flags, modulus, dual=False)
    if not instances:
        return None
    group = even_subgroup(system, kind)
    best = 0
    for label in instances:
        point = tuple(Q(s, modulus) for s in _label_coordinates(system, label))
        best = max(best, torus_orbit_size(group, point))
    return best


def _compute_h(system, kind, flags, modulus):
    """Generic congruence stabiliser order on a stratum (min over instances)."""
    instances = _label_instances(system, flags, modulus, dual=True)
    if not instances:
        return None
    group = even_subgroup(system, kind)
    ms = (modulus,) * len(system.factors)
    best = None
    for label in instances:
        weight = _label_coordinates(system, label)
        value = weight_stab_mod_mq(group, weight, ms)
        best = value if best is None else min(best, value)
    return best


def _compute_d(system, kind, flags):
    """Generic exact stabiliser order for a weight zero-pattern."""
    group = even_subgroup(system, kind)
    best = None
    for values in itertools.permutations((1, 2, 3), len(flags)):
        weight = tuple(v if f else 0 for v, f in zip(values, flags))
        value = stab_order(group, weight)
        best = value if best is None else min(best, value)
    return best


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    coefficient: str  # "d", "eps" or "h"
    pattern: str
    group: str
    reference: int
    computed: int | None
    modulus: int | None
    status: str  # "match", "mismatch" or "skipped"


@dataclass(frozen=True)
class TableReport:
    table_id: str
    modulus: int
    rows: tuple[TableRow, ...]

    @property
    def mismatches(self):
        return tuple(r for r in self.rows if r.status == "mismatch")

    @property
    def skipped(self):
        return tuple(r for r in self.rows if r.status == "skipped")


def _regenerate_rows(selector, kind, coefficient, rows, column, modulus):
    system = system_from_selector(selector)
    out = []
    for flags, values in rows:
        reference = values if isinstance(values, int) else values[column]
        if coefficient == "d":
            computed = _compute_d(system, kind, flags)
            used = None
            pattern = weight_pattern_string(flags)
        else:
            dual = coefficient == "h"
            computed = None
            used = None
            for m in range(modulus, modulus + _FALLBACK_SPAN + 1):
                fn = _compute_h if dual else _compute_eps
                computed = fn(system, kind, flags, m)
                if computed is not None:
                    used = m
                    break
            pattern = pattern_string(system, flags, "t" if dual else "s")
        if computed is None:
            status = "skipped"
        elif computed == reference:
            status = "match"
        else:
            status = "mismatch"
        out.append(TableRow(coefficient, pattern, selector, reference, computed, used, status))
    return out


def regenerate_table(table_id: str, m: int = 5) -> TableReport:
    """Recompute one reference table from the group action.

    ``m`` is the base modulus for the discrete tables; rows whose zero
    pattern is unrealisable at ``m`` (divisibility constraints) are
    retried at the next few moduli, recorded in the row.
    """
    if table_id not in TABLE_IDS:
        raise ValueError(f"unknown table id {table_id!r}; known: {TABLE_IDS}")
    if m < 5:
        raise ValueError("discrete tables need m >= 5 to realise all patterns")
    rows = []
    if table_id == "T1_A1A1":
        rows += _regenerate_rows("a1xa1", "e", "d", _T1_D, 0, m)
        rows += _regenerate_rows("a1xa1", "e", "eps", _T1_EPS, 0, m)
        rows += _regenerate_rows("a1xa1", "e", "h", _T1_H, 0, m)
    elif table_id == "T2_d_ee":
        for col, sel in enumerate(RANK3_GROUPS):
            rows += _regenerate_rows(sel, "ee", "d", _T2_D, col, m)
    elif table_id == "T3_d_e":
        for col, sel in enumerate(RANK3_GROUPS):
            rows += _regenerate_rows(sel, "e", "d", _T3_D, col, m)
    elif table_id == "T4_disk_ee":
        for col, sel in enumerate(TWO_FACTOR_GROUPS):
            rows += _regenerate_rows(sel, "ee", "eps", _T4_EPS, col, m)
            rows += _regenerate_rows(sel, "ee", "h", _T4_H, col, m)
    elif table_id == "T5_disk_e":
        for col, sel in enumerate(TWO_FACTOR_GROUPS):
            rows += _regenerate_rows(sel, "e", "eps", _T5_EPS, col, m)
            rows += _regenerate_rows(sel, "e", "h", _T5_H, col, m)
    else:
        rows += _regenerate_rows("a1xa1xa1", "e", "eps", _T6_EPS, 0, m)
        rows += _regenerate_rows("a1xa1xa1", "e", "h", _T6_H, 0, m)
    return TableReport(table_id, m, tuple(rows))


def volume(system: SemisimpleSystem, kind: str) -> float:
    """Volume of the even fundamental domain (2 copies of F per gluing)."""
    return domain_volume(system, check_kind(kind))


# ---------------------------------------------------------------------------
# errata
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ErrataNote:
    location: str
    reference: object
    computed: object
    deviation: float | None


#: reference-table rows whose tabulated value contradicts the group
#: action, keyed (table_id, coefficient, group, pattern); the value pair
#: is (tabulated, recomputed).  Populated from the regeneration run and
#: pinned by the test-suite.
KNOWN_ERRATA: dict[tuple[str, str, str, str], tuple[int, int]] = {
    ("T4_disk_ee", "eps", "a1xg2", "[s0,s1,0,s2,0]"): (2, 3),
    ("T4_disk_ee", "eps", "a1xg2", "[s0,s1,0,0,s3]"): (3, 2),
    ("T4_disk_ee", "eps", "a1xg2", "[s0,0,0,s2,0]"): (2, 3),
    ("T4_disk_ee", "eps", "a1xg2", "[s0,0,0,0,s3]"): (3, 2),
    ("T4_disk_ee", "eps", "a1xg2", "[0,s1,0,s2,0]"): (2, 3),
    ("T4_disk_ee", "eps", "a1xg2", "[0,s1,0,0,s3]"): (3, 2),
    ("T5_disk_e", "eps", "a1xg2", "[s0,s1,0,s2,0]"): (4, 6),
    ("T5_disk_e", "eps", "a1xg2", "[s0,s1,0,0,s3]"): (6, 4),
    ("T5_disk_e", "eps", "a1xg2", "[s0,0,0,s2,0]"): (2, 3),
    ("T5_disk_e", "eps", "a1xg2", "[s0,0,0,0,s3]"): (3, 2),
    ("T5_disk_e", "eps", "a1xg2", "[0,s1,0,s2,0]"): (2, 3),
    ("T5_disk_e", "eps", "a1xg2", "[0,s1,0,0,s3]"): (3, 2),
    ("T6_A1A1A1", "eps", "a1xa1xa1", "[s0,s1,0,s2,s0'',s3]"): (2, 4),
    ("T6_A1A1A1", "h", "a1xa1xa1", "[t0,t1,0,t2,t0'',t3]"): (2, 1),
}

#: (selector, kind) pairs whose tabulated closed form deviates from the
#: generic orbit sum
CLOSED_FORM_ERRATA = (("a1xg2", "ee"), ("a1xg2", "e"))

#: the published generic full-even a1xg2 orbit listing mixes coordinates
#: across the two factors in its sixth pair; the generated matrix group
#: is authoritative (see tests for the pinned orbit)
ORBIT_LISTING_ERRATA = (
    ErrataNote(
        location="orbit listing a1xg2:e",
        reference="(-a, +/-(2b+c), -/+(3a+2b))",
        computed="(-a, +/-(2b+c), -/+(3b+2c))",
        deviation=None,
    ),
)


def _random_rational(rng: random.Random) -> Fraction:
    den = rng.choice([2, 3, 4, 5, 6, 7, 8, 12])
    return Fraction(rng.randrange(-2 * den, 2 * den + 1), den)


def closed_form_deviation(selector: str, kind: str, trials: int = 40, seed: int = 7) -> float:
    """Max |closed form - generic orbit sum| over a deterministic sweep."""
    system = system_from_selector(selector)
    rng = random.Random((seed, selector, kind).__repr__())
    worst = 0.0
    for _ in range(trials):
        lam = tuple(rng.randrange(-3, 4) for _ in range(system.n))
        x = tuple(_random_rational(rng) for _ in range(system.n))
        dev = abs(efunc.xi_closed(system, kind, lam, x) - efunc.xi(system, kind, lam, x))
        worst = max(worst, dev)
    return worst


def errata_report(m: int = 5) -> list[ErrataNote]:
    """Structured notes for every reference entry the computation refutes."""
    notes = list(ORBIT_LISTING_ERRATA)
    for selector, kind in sorted(efunc._CLOSED_FORMS):
        dev = closed_form_deviation(selector, kind)
        if dev > 1e-10:
            notes.append(
                ErrataNote(
                    location=f"closed form {selector}:{kind}",
                    reference="tabulated closed form",
                    computed="generic orbit sum",
                    deviation=dev,
                )
            )
    for table_id in TABLE_IDS:
        report = regenerate_table(table_id, m)
        for row in report.mismatches:
            notes.append(
                ErrataNote(
                    location=f"{table_id} {row.coefficient} {row.group} {row.pattern}",
                    reference=row.reference,
                    computed=row.computed,
                    deviation=None,
                )
            )
    return notes
