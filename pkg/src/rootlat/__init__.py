"""Exact growth series, coordinator polynomials and triangulation face counts
for the root lattices A_n, C_n and D_n."""
from .an_triangulation import (
    cell_unimodularity_check,
    enumerate_faces,
    facet_of_face,
    is_face,
    staircase_f_vector,
)
from .coordinator import (
    cn_inclusion_exclusion,
    f_closed,
    h_closed,
    is_palindromic,
    v2k_numerator,
)
from .dn_series import (
    cn_cone_total_f,
    cn_h_via_cone,
    dn_boundary_f,
    dn_h,
    dn_hypersimplex_total_f,
    dn_interior_total_f,
    hypersimplex_f,
    mallows_pn,
    series_bundle,
)
from .lattices import (
    LatticeFamily,
    check_total_unimodularity,
    contains,
    dilate_point_count,
    facet_census,
    generators,
    growth_bfs,
    h_star_from_dilates,
)
from .polyalg import (
    BiSeries,
    BivPoly,
    FVector,
    Poly,
    expand_growth,
    reverse,
    series_expand_rational,
    transform_f_to_h,
    transform_h_to_f,
)

__version__ = "0.1.0"
