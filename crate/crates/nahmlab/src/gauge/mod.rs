//! Gauge transformations: the action on Nahm data, fundamental vector
//! fields, gauge fixing, Kronheimer's map, complex orbits and polar
//! decomposition.

pub mod action;
pub mod complex;
pub mod fixing;
pub mod ode;
pub mod path;
pub mod polar;

pub use action::{apply_gauge, fundamental_vector_field, gauge_tangent};
pub use complex::{complex_gauge_apply, kronheimer_map, model_pair, orbit_coordinates, ComplexPair, KronheimerPoint};
pub use fixing::{center_tau0_gauge, gauge_t0_to_zero, CenteringGauge, GaugeFixReport};
pub use ode::{solve_right, OdeReport};
pub use path::{AlgebraAsymptotics, Flavor, GaugeAlgebraPath, GaugePath, Profile};
pub use polar::{polar_decompose, unitary_path_to, Polar};
