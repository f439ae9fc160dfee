"""Bichromatic non-crossing perfect matchings: construction, uniqueness,
classification and geometric witnesses, all in exact arithmetic."""

from .geom import (BLACK, WHITE, Color, DirectedLine, DuplicatePointError, GeneralPositionError,
                   InputError, InternalInvariantError, Point, PointSet, Segment)
from .matching import BRMatching, MatchingError, Sidedness, precedes, sidedness
from .classify import (Circular, CutAdmitting, Linear, classify, census_sidedness_relations,
                       drum_property_check, is_unique, reference_direction, sort_by_sidedness)
from .construct import (alternative_matching_via_balanced_line, alternative_matchings_circular,
                        build_matching, ham_sandwich)
from .cuts import balanced_line_for_matching, chromatic_cut_from_pair, is_balanced
from .io import format_matching, format_pointset, parse_matching, parse_pointset
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "BLACK", "WHITE", "Color", "DirectedLine", "DuplicatePointError", "GeneralPositionError",
    "InputError", "InternalInvariantError", "Point", "PointSet", "Segment",
    "BRMatching", "MatchingError", "Sidedness", "precedes", "sidedness",
    "Circular", "CutAdmitting", "Linear", "classify", "census_sidedness_relations",
    "drum_property_check", "is_unique", "reference_direction", "sort_by_sidedness",
    "alternative_matching_via_balanced_line", "alternative_matchings_circular",
    "build_matching", "ham_sandwich",
    "balanced_line_for_matching", "chromatic_cut_from_pair", "is_balanced",
    "format_matching", "format_pointset", "parse_matching", "parse_pointset", "render_svg",
]
