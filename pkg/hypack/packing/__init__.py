"""
堆积模块
包含内切球与极球堆积的密度计算
"""

from .inball import (
    GridSearchResult,
    InballCandidate,
    InballResult,
    InballType,
    ball_volume,
    enumerate_incenter_candidates,
    existence_margin_chain,
    face_distances,
    grid_search_min_face_distance,
    incenter_type2,
    inball_density,
    inball_exists,
    inball_sum_closed_form,
    inradius_type1,
    search_incenter,
    truncation_preserves_inradius,
    truncation_ratio,
)
from .horoball import (
    HoroballSector,
    Horosphere,
    PackingResult,
    TwoHoroballConfig,
    cayley_menger_triangle_area,
    constraining_faces,
    density_curve,
    edge_intersections,
    edge_point,
    equal_volume_t,
    feasible_t_interval,
    golden_section_search,
    heron_area,
    horoball_sector,
    horosphere_through_point,
    horospheric_arc_length,
    horospheric_polygon_area,
    max_horoball,
    one_horoball_density,
    optimize_two_horoball,
    sector_volume,
    sector_width_area,
    signed_displacement,
    tangency_point,
    tangent_pair,
    two_horoball_density,
    volume_law,
)

__all__ = [
    'GridSearchResult',
    'InballCandidate',
    'InballResult',
    'InballType',
    'ball_volume',
    'enumerate_incenter_candidates',
    'existence_margin_chain',
    'face_distances',
    'grid_search_min_face_distance',
    'incenter_type2',
    'inball_density',
    'inball_exists',
    'inball_sum_closed_form',
    'inradius_type1',
    'search_incenter',
    'truncation_preserves_inradius',
    'truncation_ratio',
    'HoroballSector',
    'Horosphere',
    'PackingResult',
    'TwoHoroballConfig',
    'cayley_menger_triangle_area',
    'constraining_faces',
    'density_curve',
    'edge_intersections',
    'edge_point',
    'equal_volume_t',
    'feasible_t_interval',
    'golden_section_search',
    'heron_area',
    'horoball_sector',
    'horosphere_through_point',
    'horospheric_arc_length',
    'horospheric_polygon_area',
    'max_horoball',
    'one_horoball_density',
    'optimize_two_horoball',
    'sector_volume',
    'sector_width_area',
    'signed_displacement',
    'tangency_point',
    'tangent_pair',
    'two_horoball_density',
    'volume_law',
]
