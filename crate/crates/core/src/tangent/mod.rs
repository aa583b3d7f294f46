//! Zariski tangent spaces `T(I) = Hom_S(I, S/I)` at monomial points,
//! computed by counting bounded connected components in `Z^n`.

mod components;
mod criteria;
mod formulas;
mod report;

pub use components::{
    box_points, candidate_degrees, degree_box, graded_tangent_dim, ComponentSearch, ComponentSet,
    DegreeCount,
};
pub use criteria::{
    is_smooth_monomial_point, ppn_upper_bound, ppn_upper_bound_from, report_is_smooth,
    singular_by_generators,
};
pub use formulas::{
    counterexample_colength, e_ideal_tangent_formula, fat_point_graded_dim, fat_point_tangent_dims,
    fat_point_total, minimal_r, socle_part_formula, FatPointDims,
};
pub use report::{
    duality_slice_pairs, socle_tangent_dim, tangent_report, ReportDocument, TangentReport,
};
