"""The two-parameter family of Cayley-Klein plane geometries.

A geometry is fixed by a pair of real labels (k1, k2): k1 is the curvature
label attached to lengths, k2 the signature label attached to angles.  The
nine canonical members arise from k1, k2 in {-1, 0, +1}; arbitrary real
labels are supported everywhere (a rescaling of units moves any nonzero
label to +/-1).
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

__all__ = [
    "Geometry",
    "ELLIPTIC",
    "EUCLIDEAN",
    "HYPERBOLIC",
    "CO_EUCLIDEAN",
    "GALILEAN",
    "CO_MINKOWSKIAN",
    "CO_HYPERBOLIC",
    "MINKOWSKIAN",
    "DOUBLY_HYPERBOLIC",
    "CANONICAL_NINE",
    "named_geometry",
    "geometry_name",
    "NAMED_GEOMETRIES",
]


@dataclass(frozen=True)
class Geometry:
    """A Cayley-Klein plane geometry with length label k1 and angle label k2."""

    k1: float
    k2: float

    def __post_init__(self):
        for label in (self.k1, self.k2):
            if not math.isfinite(label):
                raise ValueError(f"geometry labels must be finite, got {label!r}")
        # normalize to plain floats so dataclass equality is value equality
        object.__setattr__(self, "k1", float(self.k1))
        object.__setattr__(self, "k2", float(self.k2))

    @property
    def k12(self) -> float:
        """The product label k1*k2 carried by second-kind lengths."""
        return self.k1 * self.k2

    def metric(self) -> np.ndarray:
        """Ambient bilinear form Lambda = diag(1, k1, k1*k2)."""
        return np.diag([1.0, self.k1, self.k1 * self.k2])

    def dual(self) -> "Geometry":
        """The geometry with length and angle labels interchanged."""
        return Geometry(self.k2, self.k1)

    def name(self) -> str | None:
        """Canonical name when (k1, k2) is one of the nine, else None."""
        return _CANONICAL_NAMES.get((self.k1, self.k2))

    def label(self) -> str:
        """Human-readable tag for messages: canonical name or the label pair."""
        return self.name() or f"geometry(k1={self.k1}, k2={self.k2})"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        tag = self.name()
        suffix = f" [{tag}]" if tag else ""
        return f"Geometry(k1={self.k1}, k2={self.k2}){suffix}"


ELLIPTIC = Geometry(1.0, 1.0)
EUCLIDEAN = Geometry(0.0, 1.0)
HYPERBOLIC = Geometry(-1.0, 1.0)
CO_EUCLIDEAN = Geometry(1.0, 0.0)
GALILEAN = Geometry(0.0, 0.0)
CO_MINKOWSKIAN = Geometry(-1.0, 0.0)
CO_HYPERBOLIC = Geometry(1.0, -1.0)
MINKOWSKIAN = Geometry(0.0, -1.0)
DOUBLY_HYPERBOLIC = Geometry(-1.0, -1.0)

#: The nine canonical geometries in reading order of the (k1, k2) grid.
CANONICAL_NINE: tuple[tuple[str, Geometry], ...] = (
    ("elliptic", ELLIPTIC),
    ("euclidean", EUCLIDEAN),
    ("hyperbolic", HYPERBOLIC),
    ("co-euclidean", CO_EUCLIDEAN),
    ("galilean", GALILEAN),
    ("co-minkowskian", CO_MINKOWSKIAN),
    ("co-hyperbolic", CO_HYPERBOLIC),
    ("minkowskian", MINKOWSKIAN),
    ("doubly-hyperbolic", DOUBLY_HYPERBOLIC),
)

_CANONICAL_NAMES = {(g.k1, g.k2): name for name, g in CANONICAL_NINE}

#: Accepted names and aliases (spacetime names included) for presets.
NAMED_GEOMETRIES: dict[str, Geometry] = {
    "elliptic": ELLIPTIC,
    "sphere": ELLIPTIC,
    "spherical": ELLIPTIC,
    "euclidean": EUCLIDEAN,
    "hyperbolic": HYPERBOLIC,
    "lobachevsky": HYPERBOLIC,
    "co-euclidean": CO_EUCLIDEAN,
    "oscillating-nh": CO_EUCLIDEAN,
    "oscillating-newton-hooke": CO_EUCLIDEAN,
    "galilean": GALILEAN,
    "galilei": GALILEAN,
    "co-minkowskian": CO_MINKOWSKIAN,
    "expanding-nh": CO_MINKOWSKIAN,
    "expanding-newton-hooke": CO_MINKOWSKIAN,
    "co-hyperbolic": CO_HYPERBOLIC,
    "anti-de-sitter": CO_HYPERBOLIC,
    "ads": CO_HYPERBOLIC,
    "minkowskian": MINKOWSKIAN,
    "minkowski": MINKOWSKIAN,
    "doubly-hyperbolic": DOUBLY_HYPERBOLIC,
    "de-sitter": DOUBLY_HYPERBOLIC,
    "ds": DOUBLY_HYPERBOLIC,
}


def _normalize_name(name: str) -> str:
    return name.strip().lower().replace("_", "-").replace(" ", "-")


def named_geometry(name: str) -> Geometry:
    """Look up a geometry preset by name or alias (case/sep insensitive)."""
    key = _normalize_name(name)
    try:
        return NAMED_GEOMETRIES[key]
    except KeyError:
        known = ", ".join(sorted(set(NAMED_GEOMETRIES)))
        raise KeyError(f"unknown geometry name {name!r}; known names: {known}") from None


def geometry_name(g: Geometry) -> str | None:
    """Canonical name of g if it is one of the nine, else None."""
    return g.name()
