"""Discrete point and weight grids on the even fundamental domains.

Every grid is a union of two branches.  The first branch is the closed
fundamental simplex product, enumerated by Kac-style labels: nonnegative
integers ``[s0, s1, ...]`` per factor with ``s0 + sum(m_i s_i) = M``
(marks ``m`` for point grids, dual marks for weight grids).  The second
branch is a reflected copy of the interior, whose members keep the
positive label of the unreflected parameters while the stored
coordinates carry the reflection.

Which reflection glues the second branch on is a fixed convention: the
first simple root of the first rank >= 2 factor, or the very first
coordinate when all factors are A1.  The product-even grids instead
reflect every factor separately, and an A1 factor's even domain is
parameterised directly as the half-open circle ``-M < s <= M``.

``oracle_point_grid`` ignores all of the closed-form bookkeeping and
intersects the finite torus group with the even fundamental domain by
brute force; it exists to cross-check the constructive grids.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .lie_data import (
    Q,
    SemisimpleSystem,
    SimpleFactor,
    TorusPoint,
    UsageError,
    Weight,
    assemble_system,
    mat_vec,
)
from .weyl import (
    FULL_EVEN,
    FULL_WEYL,
    GroupElement,
    canonical_torus_point,
    canonical_weight_mod_mq,
    check_kind,
    even_subgroup,
    orbit,
    simple_reflection,
    torus_orbit_size,
    weight_stab_mod_mq,
)


@dataclass(frozen=True)
class GridPoint:
    point: TorusPoint
    label: tuple[int, ...]
    epsilon: int


@dataclass(frozen=True)
class SpectralPoint:
    weight: Weight
    label: tuple[int, ...]
    h: int


# ---------------------------------------------------------------------------
# label enumeration per factor
# ---------------------------------------------------------------------------

def _kac_labels(factor: SimpleFactor, marks, modulus: int, strict: bool):
    """Labels ``(s0, s1, ..)`` with ``s0 + sum(m_i s_i) = modulus``.

    ``strict`` restricts to the interior: every entry >= 1.
    """
    lo = 1 if strict else 0
    out = []
    if factor.rank == 1:
        for s in range(lo, modulus - lo + 1):
            out.append((modulus - s, s))
    else:
        m1, m2 = marks
        for s1 in range(lo, modulus // m1 + 1):
            for s2 in range(lo, (modulus - m1 * s1) // m2 + 1):
                s0 = modulus - m1 * s1 - m2 * s2
                if s0 >= lo:
                    out.append((s0, s1, s2))
    return out


def _circle_labels(modulus: int):
    """Signed labels of the A1 even circle ``-M < s <= M``."""
    return [(modulus - s, s) for s in range(-modulus + 1, modulus + 1)]


def label_parameters(label):
    """Drop the derived ``s0`` entry of a per-factor label."""
    return label[1:]


@lru_cache(maxsize=None)
def _local_reflection(factor: SimpleFactor) -> GroupElement:
    return simple_reflection(assemble_system((factor.kind,)), 0)


def reflection_coordinate(system: SemisimpleSystem) -> int:
    """Coordinate of the reflection gluing the second branch on."""
    for off, f in zip(system.offsets, system.factors):
        if f.rank >= 2:
            return off
    return 0


@lru_cache(maxsize=None)
def domain_reflection(system: SemisimpleSystem) -> GroupElement:
    return simple_reflection(system, reflection_coordinate(system))


def _expand_ms(system: SemisimpleSystem, kind: str, ms) -> tuple[int, ...]:
    """Normalise the modulus argument and expand it to one entry per factor."""
    check_kind(kind)
    if kind == FULL_WEYL:
        raise UsageError("grids are defined for the even kinds 'e' and 'ee' only")
    if isinstance(ms, int):
        ms = (ms,)
    ms = tuple(int(m) for m in ms)
    if any(m < 1 for m in ms):
        raise UsageError("moduli must be >= 1")
    k = len(system.factors)
    if kind == FULL_EVEN:
        if len(ms) != 1:
            raise UsageError(f"kind 'e' takes a single modulus, got {len(ms)}")
        return ms * k
    if len(ms) != k:
        raise UsageError(f"kind 'ee' takes {k} moduli, got {len(ms)}")
    return ms


# ---------------------------------------------------------------------------
# grid construction
# ---------------------------------------------------------------------------

def _marks_of(factor: SimpleFactor, dual: bool):
    return factor.dual_marks if dual else factor.marks


def _label_to_point(factor: SimpleFactor, label, modulus: int):
    return tuple(Q(s, modulus) for s in label_parameters(label))


def _label_to_weight(label):
    return tuple(label_parameters(label))


def _assemble(combos):
    """Concatenate per-factor (coords, label) pieces."""
    for pieces in combos:
        coords = tuple(c for piece in pieces for c in piece[0])
        label = tuple(l for piece in pieces for l in piece[1])
        yield coords, label


def _branches(system: SemisimpleSystem, kind: str, ms, dual: bool):
    """Yield (coords, label) for both branches of a grid.

    ``dual`` selects the weight-side conventions: dual marks, integer
    coordinates and the weight action of the gluing reflections.
    """
    per_factor_ms = _expand_ms(system, kind, ms)

    def local_value(factor, label, modulus):
        if dual:
            return _label_to_weight(label)
        return _label_to_point(factor, label, modulus)

    if kind == FULL_EVEN:
        modulus = per_factor_ms[0]
        closed = [
            [(local_value(f, lab, modulus), lab)
             for lab in _kac_labels(f, _marks_of(f, dual), modulus, strict=False)]
            for f in system.factors
        ]
        strict = [
            [(local_value(f, lab, modulus), lab)
             for lab in _kac_labels(f, _marks_of(f, dual), modulus, strict=True)]
            for f in system.factors
        ]
        refl = domain_reflection(system)
        apply = refl.apply_weight if dual else refl.apply_point
        for coords, label in _assemble(itertools.product(*closed)):
            yield coords, label
        for coords, label in _assemble(itertools.product(*strict)):
            yield apply(coords), label
    else:
        locals_per_factor = []
        for f, modulus in zip(system.factors, per_factor_ms):
            cells = []
            if f.rank == 1:
                for lab in _circle_labels(modulus):
                    cells.append((local_value(f, lab, modulus), lab))
            else:
                for lab in _kac_labels(f, _marks_of(f, dual), modulus, strict=False):
                    cells.append((local_value(f, lab, modulus), lab))
                refl = _local_reflection(f)
                apply = refl.apply_weight if dual else refl.apply_point
                for lab in _kac_labels(f, _marks_of(f, dual), modulus, strict=True):
                    cells.append((apply(local_value(f, lab, modulus)), lab))
            locals_per_factor.append(cells)
        yield from _assemble(itertools.product(*locals_per_factor))


@lru_cache(maxsize=None)
def _point_grid_cached(system: SemisimpleSystem, kind: str, ms: tuple[int, ...]):
    group = even_subgroup(system, kind)
    points = []
    seen = set()
    for coords, label in _branches(system, kind, ms, dual=False):
        canon = canonical_torus_point(system, coords)
        if canon in seen:
            raise AssertionError(f"duplicate grid point mod coroot lattice: {coords}")
        seen.add(canon)
        points.append(GridPoint(coords, label, torus_orbit_size(group, coords)))
    return tuple(points)


def build_point_grid(system: SemisimpleSystem, kind: str, ms) -> tuple[GridPoint, ...]:
    """The discrete even fundamental domain with labels and orbit sizes.

    ``ms`` is a single modulus for kind ``"e"`` and one modulus per
    factor for kind ``"ee"``.  Points come out in canonical order:
    closed branch first, reflected branch second, each in nested label
    order.
    """
    ms = (ms,) if isinstance(ms, int) else tuple(int(m) for m in ms)
    return _point_grid_cached(system, check_kind(kind), ms)


@lru_cache(maxsize=None)
def _weight_grid_cached(system: SemisimpleSystem, kind: str, ms: tuple[int, ...]):
    group = even_subgroup(system, kind)
    per_factor_ms = _expand_ms(system, kind, ms)
    weights = []
    seen = set()
    for coords, label in _branches(system, kind, ms, dual=True):
        coords = tuple(int(c) for c in coords)
        canon = canonical_weight_mod_mq(system, coords, per_factor_ms)
        if canon in seen:
            raise AssertionError(f"duplicate weight mod M*Q: {coords}")
        seen.add(canon)
        weights.append(
            SpectralPoint(coords, label, weight_stab_mod_mq(group, coords, per_factor_ms))
        )
    return tuple(weights)


def build_weight_grid(system: SemisimpleSystem, kind: str, ms) -> tuple[SpectralPoint, ...]:
    """The spectral grid dual to :func:`build_point_grid`."""
    ms = (ms,) if isinstance(ms, int) else tuple(int(m) for m in ms)
    return _weight_grid_cached(system, check_kind(kind), ms)


# ---------------------------------------------------------------------------
# domain membership (exact)
# ---------------------------------------------------------------------------

def _factor_in_closed(factor: SimpleFactor, coords) -> bool:
    if any(c < 0 for c in coords):
        return False
    return sum(m * c for m, c in zip(factor.marks, coords)) <= 1


def _factor_in_interior(factor: SimpleFactor, coords) -> bool:
    if any(c <= 0 for c in coords):
        return False
    return sum(m * c for m, c in zip(factor.marks, coords)) < 1


def in_closed_fundamental(system: SemisimpleSystem, x: TorusPoint) -> bool:
    return all(
        _factor_in_closed(f, part) for f, part in zip(system.factors, system.split(x))
    )


def in_interior_fundamental(system: SemisimpleSystem, x: TorusPoint) -> bool:
    return all(
        _factor_in_interior(f, part) for f, part in zip(system.factors, system.split(x))
    )


def in_even_domain(system: SemisimpleSystem, kind: str, x: TorusPoint) -> bool:
    """Exact membership in the even fundamental domain of the given kind."""
    check_kind(kind)
    x = tuple(Q(v) for v in x)
    if kind == FULL_EVEN:
        if in_closed_fundamental(system, x):
            return True
        return in_interior_fundamental(system, domain_reflection(system).apply_point(x))
    for f, part in zip(system.factors, system.split(x)):
        if _factor_in_closed(f, part):
            continue
        reflected = _local_reflection(f).apply_point(part)
        if not _factor_in_interior(f, reflected):
            return False
    return True


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def _torus_classes(system: SemisimpleSystem, per_factor_ms):
    """Canonical representatives of the finite group (1/M)P^v / Q^v."""
    ranges = []
    for f, m in zip(system.factors, per_factor_ms):
        span = m * abs(f.det_cartan)
        for _ in range(f.rank):
            ranges.append(range(span))
    seen = set()
    denoms = [m for f, m in zip(system.factors, per_factor_ms) for _ in range(f.rank)]
    for ks in itertools.product(*ranges):
        coords = tuple(Q(k, d) for k, d in zip(ks, denoms))
        seen.add(canonical_torus_point(system, coords))
    return seen


def _translate_candidates(system: SemisimpleSystem, s: TorusPoint):
    """Integer coroot translates that can land ``s`` inside [-1, 1]^n."""
    inv = system.inv_cartan
    n = system.n
    bounds = []
    for i in range(n):
        lo = hi = Q(0)
        for j in range(n):
            a = inv[i][j] * (Q(-1) - s[j])
            b = inv[i][j] * (Q(1) - s[j])
            lo += min(a, b)
            hi += max(a, b)
        bounds.append(range(math.ceil(lo), math.floor(hi) + 1))
    for zs in itertools.product(*bounds):
        yield mat_vec(system.cartan, zs)


def oracle_point_grid(system: SemisimpleSystem, kind: str, ms) -> frozenset:
    """Set-theoretic grid: finite torus group intersected with the domain.

    Returns canonical representatives modulo the coroot lattice, for
    comparison against :func:`build_point_grid`.
    """
    ms = (ms,) if isinstance(ms, int) else tuple(int(m) for m in ms)
    per_factor_ms = _expand_ms(system, kind, ms)
    hits = set()
    for rep in _torus_classes(system, per_factor_ms):
        for shift in _translate_candidates(system, rep):
            candidate = tuple(a + b for a, b in zip(rep, shift))
            if in_even_domain(system, kind, candidate):
                hits.add(canonical_torus_point(system, rep))
                break
    return frozenset(hits)


def grid_canonical_set(system: SemisimpleSystem, kind: str, ms) -> frozenset:
    """Canonical forms of the constructive grid, for oracle comparison."""
    return frozenset(
        canonical_torus_point(system, gp.point)
        for gp in build_point_grid(system, kind, ms)
    )


# ---------------------------------------------------------------------------
# dominant-weight enumeration for the continuous transform
# ---------------------------------------------------------------------------

def enumerate_dominant(system: SemisimpleSystem, kind: str, bound: int):
    """A finite truncation of the even-orbit representative weights.

    Every generator integer runs through ``0..bound`` (``-bound..bound``
    for the A1 circle directions of kind ``"ee"``), the reflected branch
    through ``1..bound``; one representative per even-orbit class is
    kept, in generation order.
    """
    check_kind(kind)
    if bound < 0:
        raise UsageError("bound must be >= 0")
    group = even_subgroup(system, kind)
    raw = []
    if kind == FULL_EVEN:
        for combo in itertools.product(range(bound + 1), repeat=system.n):
            raw.append(tuple(combo))
        refl = domain_reflection(system)
        for combo in itertools.product(range(1, bound + 1), repeat=system.n):
            raw.append(refl.apply_weight(tuple(combo)))
    else:
        per_factor = []
        for f in system.factors:
            cells = []
            if f.rank == 1:
                cells = [(a,) for a in range(-bound, bound + 1)]
            else:
                cells = [tuple(c) for c in itertools.product(range(bound + 1), repeat=f.rank)]
                refl = _local_reflection(f)
                cells += [
                    refl.apply_weight(tuple(c))
                    for c in itertools.product(range(1, bound + 1), repeat=f.rank)
                ]
            per_factor.append(cells)
        for pieces in itertools.product(*per_factor):
            raw.append(tuple(v for piece in pieces for v in piece))
    out = []
    seen = set()
    for w in raw:
        key = orbit(group, w)[0]
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out
