"""Exact C(k) detection, line piercing and a KKM chord search for planar convex families."""
from .ck import CkCertificate, find_ck, find_violation, verify_ck
from .construction import build_construction, general_position_points, pentagon_ck
from .family import DiskTransform, Family, FamilyError, family_of, load_family, save_family, scale_to_unit_disk
from .geometry import ConvexBody, Line, RationalPoint, bodies_disjoint, convex_hull
from .kkm import SearchConfig, SearchResult, cover_label, find_piercing_lines
from .piercing import PiercingSolution, has_line_transversal, max_line_hits, min_piercing_lines

__all__ = [
    "CkCertificate", "ConvexBody", "DiskTransform", "Family", "FamilyError", "Line",
    "PiercingSolution", "RationalPoint", "SearchConfig", "SearchResult", "bodies_disjoint",
    "build_construction", "convex_hull", "cover_label", "family_of", "find_ck",
    "find_piercing_lines", "find_violation", "general_position_points", "has_line_transversal",
    "load_family", "max_line_hits", "min_piercing_lines", "pentagon_ck", "save_family",
    "scale_to_unit_disk", "verify_ck",
]
