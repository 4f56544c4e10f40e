"""Distances, geodesic bundles and ellipticity measurements."""
from hiercomplex.geodesy.metric import (
    GeodesicBundle,
    corner_pairs,
    distance,
    distance_preservation,
    ellipticity_scan,
    ellipticity_summary,
    geodesic_bundle,
    pasting_entry_distances,
    sample_pairs,
)

__all__ = [
    "GeodesicBundle",
    "corner_pairs",
    "distance",
    "distance_preservation",
    "ellipticity_scan",
    "ellipticity_summary",
    "geodesic_bundle",
    "pasting_entry_distances",
    "sample_pairs",
]
