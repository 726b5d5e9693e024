//! The Baby Nahm equation on an interval and on the half-line: the
//! identifications with `K x k` and `(K x (t_+)_C)/[C,C]`, closed-form
//! tangent vectors, and the metric, complex structure and symplectic form
//! of each stratum.

pub mod baby;
pub mod face;
pub mod geometry;
pub mod tangent;

pub use baby::{
    baby_phi_halfline, baby_phi_interval, baby_psi_interval, baby_residual, baby_residual_series,
    baby_residual_sup, cc_equivalent, nearest_cc, BabyPoint, CcEquivalence, HalflinePoint,
};
pub use face::{weyl_face, FaceSummary, WeylFace};
pub use geometry::{
    baby_geometry, baby_i, baby_omega, psi_differential, psi_pullback, standard_form, BabyGeometry,
    GeometryReport,
};
pub use tangent::{baby_tangent, linearized_baby_residual, ImplosionTangent, TangentCoords, TangentDiagnostics};
