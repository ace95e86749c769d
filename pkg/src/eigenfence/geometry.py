"""Membership, extremal modulus and sampled comparisons over regions.

A region is one of: :class:`~eigenfence.discs.DiscUnion`,
:class:`~eigenfence.refine.PairIntersectionUnion`,
:class:`~eigenfence.cassini.CassiniUnion` or :class:`RegionIntersection`.
Intersections are never converted to explicit shapes; membership
predicates compose instead, and set comparisons are sampled (boundary
points plus a grid over the bounding box).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .cassini import CassiniOval, CassiniUnion
from .discs import Disc, DiscUnion
from .refine import PairIntersectionUnion


@dataclass(frozen=True)
class RegionIntersection:
    """Finite intersection of regions; a point belongs iff it is in every part."""

    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise ValueError("an intersection needs at least one part")
        object.__setattr__(self, "parts", tuple(self.parts))

    def contains_points(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        hit = np.ones(z.shape, dtype=bool)
        for part in self.parts:
            hit &= part.contains_points(z)
        return hit

    def bounding_box(self) -> tuple[float, float, float, float]:
        boxes = [p.bounding_box() for p in self.parts]
        box = (max(b[0] for b in boxes), min(b[1] for b in boxes),
               max(b[2] for b in boxes), min(b[3] for b in boxes))
        if box[0] > box[1] or box[2] > box[3]:
            # parts with disjoint boxes: fall back to the tightest part
            boxes.sort(key=lambda b: (b[1] - b[0]) * (b[3] - b[2]))
            return boxes[0]
        return box

    def to_json(self) -> dict:
        return {"kind": "intersection", "parts": [p.to_json() for p in self.parts]}


class MaxAbs(NamedTuple):
    value: float
    exact: bool


class SubsetCheck(NamedTuple):
    is_subset: bool
    witness: complex | None


def contains(region, z) -> bool:
    """Scalar membership test (with the per-shape relative slack)."""
    return bool(region.contains_points(np.asarray(z, dtype=complex)))


def bounding_box(region) -> tuple[float, float, float, float]:
    return region.bounding_box()


def max_abs(region) -> MaxAbs:
    """Largest modulus over the region.

    Exact for disc unions (``max |c| + r``); for every other kind the value
    is a safe upper bound: pair intersections and general intersections use
    the smallest bound among their parts, ovals use focus distance plus
    sqrt(bound).  The flag says which case applies.
    """
    if isinstance(region, DiscUnion):
        return MaxAbs(max(abs(d.center) + d.radius for d in region.discs), True)
    if isinstance(region, PairIntersectionUnion):
        value = max(min(abs(a.center) + a.radius, abs(b.center) + b.radius)
                    for a, b in region.pairs)
        return MaxAbs(value, False)
    if isinstance(region, CassiniUnion):
        value = max(max(abs(o.c1), abs(o.c2)) + float(np.sqrt(o.bound))
                    for o in region.ovals)
        return MaxAbs(value, False)
    if isinstance(region, RegionIntersection):
        return MaxAbs(min(max_abs(p).value for p in region.parts), False)
    raise TypeError(f"not a region: {type(region).__name__}")


def _disc_boundary(disc: Disc, angles: int) -> np.ndarray:
    theta = np.linspace(0.0, 2.0 * np.pi, angles, endpoint=False)
    return disc.center + disc.radius * np.exp(1j * theta)


def _oval_boundary(oval: CassiniOval, angles: int) -> np.ndarray:
    """Outermost membership crossings along rays from each focus."""
    points = []
    reach = float(np.sqrt(oval.bound)) + abs(oval.c1 - oval.c2) + 1.0
    theta = np.linspace(0.0, 2.0 * np.pi, angles // 2, endpoint=False)
    for focus in (oval.c1, oval.c2):
        directions = np.exp(1j * theta)
        lo = np.zeros(theta.size)
        hi = np.full(theta.size, reach)
        for _ in range(40):
            mid = (lo + hi) / 2.0
            inside = oval.contains_points(focus + mid * directions)
            lo = np.where(inside, mid, lo)
            hi = np.where(inside, hi, mid)
        points.append(focus + lo * directions)
    return np.concatenate(points)


def boundary_points(region, angles: int = 256) -> np.ndarray:
    """Representative boundary samples of a region's primitive shapes.

    Points are filtered to those that belong to the region itself, so for
    intersections only the genuinely attained parts of each primitive
    boundary survive.
    """
    if isinstance(region, DiscUnion):
        raw = [_disc_boundary(d, angles) for d in region.discs]
    elif isinstance(region, PairIntersectionUnion):
        raw = [_disc_boundary(d, angles) for pair in region.pairs for d in pair]
    elif isinstance(region, CassiniUnion):
        raw = [_oval_boundary(o, angles) for o in region.ovals]
    elif isinstance(region, RegionIntersection):
        raw = [boundary_points(p, angles) for p in region.parts]
    else:
        raise TypeError(f"not a region: {type(region).__name__}")
    pts = np.concatenate(raw)
    return pts[region.contains_points(pts)]


def sampled_subset(region_a, region_b, resolution: int = 64) -> SubsetCheck:
    """Sampled test of ``region_a ⊆ region_b``.

    Samples the boundary of every primitive shape of ``region_a`` at
    ``4 * resolution`` angles plus a ``resolution x resolution`` grid over
    its bounding box; returns the first witness in A but not in B, if any.
    """
    if resolution < 16:
        raise ValueError(f"resolution must be >= 16, got {resolution}")
    candidates = [boundary_points(region_a, 4 * resolution)]
    x0, x1, y0, y1 = region_a.bounding_box()
    xs = np.linspace(x0, x1, resolution)
    ys = np.linspace(y0, y1, resolution)
    gx, gy = np.meshgrid(xs, ys)
    grid = (gx + 1j * gy).ravel()
    candidates.append(grid[region_a.contains_points(grid)])
    pts = np.concatenate(candidates)
    inside_b = region_b.contains_points(pts)
    if np.all(inside_b):
        return SubsetCheck(True, None)
    witness = pts[~inside_b][0]
    return SubsetCheck(False, complex(witness))


# ---------------------------------------------------------------------------
# JSON round-trip
# ---------------------------------------------------------------------------

def region_to_json(region) -> dict:
    return region.to_json()


def region_from_json(doc: dict):
    """Rebuild a region from its documented JSON form."""
    kind = doc.get("kind")
    if kind == "disc_union":
        return DiscUnion(tuple(Disc(d["center"], d["radius"]) for d in doc["discs"]))
    if kind == "pairwise_intersection_union":
        return PairIntersectionUnion(tuple(
            (Disc(a["center"], a["radius"]), Disc(b["center"], b["radius"]))
            for a, b in doc["pairs"]))
    if kind == "cassini_union":
        return CassiniUnion(tuple(
            CassiniOval(o["c1"], o["c2"], o["bound"]) for o in doc["ovals"]))
    if kind == "intersection":
        return RegionIntersection(tuple(region_from_json(p) for p in doc["parts"]))
    raise ValueError(f"unknown region kind: {kind!r}")
