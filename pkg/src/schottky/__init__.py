"""Schottky groups from circle configurations on the Riemann sphere."""

from .moebius import (
    INFINITY,
    AntiMoebiusMap,
    GeneralizedCircle,
    MapClass,
    MoebiusMap,
    SpherePoint,
    apply,
    as_point,
    chordal_diameter,
    chordal_distance,
    classify,
    compose,
    exact_point,
    fixed_points,
    map_circle,
    reflect,
)

__version__ = "0.1.0"
