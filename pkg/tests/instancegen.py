"""Deterministic random instance generators shared across the suite.

Each generator is a pure function of its seed, so the frozen seed
lists pin down exactly which bodies the batteries exercise.
"""

from __future__ import annotations

import random
from fractions import Fraction


def _frac(rng: random.Random, lo: int, hi: int, dens=(1, 2, 3, 4, 5)) -> Fraction:
    den = rng.choice(dens)
    return Fraction(rng.randrange(lo * den, hi * den + 1), den)


def tetra_vertices(seed: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Four distinct rational points, coordinates in [0, 6], zeros
    sprinkled in so axis-touching bodies appear too."""
    rng = random.Random(7_000_000 + seed)
    pts: set[tuple[Fraction, Fraction, Fraction]] = set()
    while len(pts) < 4:
        coords = []
        for _ in range(3):
            if rng.random() < 0.2:
                coords.append(Fraction(0))
            else:
                coords.append(_frac(rng, 1, 6))
        p = tuple(coords)
        if any(c > 0 for c in p):
            pts.add(p)
    return sorted(pts)


_RAY_POOL = [
    (1, 0, 0), (0, 1, 0), (0, 0, 1),
    (1, 1, 0), (1, 0, 1), (0, 1, 1),
    (2, 1, 1), (1, 2, 1), (1, 1, 2),
    (1, 2, 3), (3, 1, 2), (2, 3, 1),
    (1, 1, 1), (3, 2, 1),
]


def _det3(a, b, c) -> int:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _scale(d, r: Fraction):
    return (d[0] * r, d[1] * r, d[2] * r)


def poly_vertices(seed: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """A body assembled from three random extremal rays carrying random
    point or segment chords, optionally with extra vertices on interior
    directions (which realize the inner vertex classes)."""
    rng = random.Random(40_000_000 + seed)
    while True:
        rays = rng.sample(_RAY_POOL, 3)
        if _det3(*rays) != 0:
            break
    verts = []
    for d in rays:
        r = _frac(rng, 2, 4, dens=(1, 2, 3))
        verts.append(_scale(d, r))
        if rng.random() < 0.5:
            verts.append(_scale(d, r + _frac(rng, 1, 3, dens=(1, 2))))
    extras = rng.choice((0, 0, 1, 1, 2))
    for _ in range(extras):
        u = tuple(
            sum(rng.choice((1, 2)) * d[a] for d in rays) for a in range(3)
        )
        lam = Fraction(rng.randrange(2, 17), 4)
        top = max(u)
        verts.append(_scale(u, lam / top))
    return verts
