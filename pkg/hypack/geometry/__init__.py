"""
几何模块
包含 Lorentz 模型上的线性代数与截断正交单形的构造
"""

from .lorentz import (
    CANONICAL_IDEAL,
    LORENTZ_FORM,
    MODEL_CENTER,
    LorentzIsometry,
    LorentzVector,
    PointClass,
    VectorKind,
    as_vector,
    bilinear_form,
    busemann_ratio,
    classify,
    ideal_to_canonical,
    lorentz_gram,
    perpendicular_foot,
    plane_distance,
    point_distance,
    polar_plane,
)
from .orthoscheme import (
    ADMISSIBLE_PARAMS,
    FaceLattice,
    SchlafliMatrices,
    TilingParams,
    TruncatedOrthoscheme,
    admissible_params,
    build_matrices,
    build_orthoscheme,
    dihedral_angles,
    general_c4,
    lobachevsky,
    lobachevsky_dilog,
    lobachevsky_quad,
    orthoscheme_volume,
)

__all__ = [
    'CANONICAL_IDEAL',
    'LORENTZ_FORM',
    'MODEL_CENTER',
    'LorentzIsometry',
    'LorentzVector',
    'PointClass',
    'VectorKind',
    'as_vector',
    'bilinear_form',
    'busemann_ratio',
    'classify',
    'ideal_to_canonical',
    'lorentz_gram',
    'perpendicular_foot',
    'plane_distance',
    'point_distance',
    'polar_plane',
    'ADMISSIBLE_PARAMS',
    'FaceLattice',
    'SchlafliMatrices',
    'TilingParams',
    'TruncatedOrthoscheme',
    'admissible_params',
    'build_matrices',
    'build_orthoscheme',
    'dihedral_angles',
    'general_c4',
    'lobachevsky',
    'lobachevsky_dilog',
    'lobachevsky_quad',
    'orthoscheme_volume',
]
