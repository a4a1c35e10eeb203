//! The reference cube element: faces, exact integration, face-moment DOFs,
//! unisolvence, the canonical projection and the cohomology of the element
//! complex.

mod dofs;
mod fe;
mod geometry;
pub mod proxy;

pub use dofs::{max_dof_dim, weight_basis, DofFunctional, DofJson, DofSet, DofSetJson, FaceJson};
pub use fe::{
    certify_commuting_diagram, certify_unisolvence, certify_unisolvence_on,
    certify_vanishing_trace_unisolvence, complex_cohomology_on_cube, dof_matrix, random_form,
    vanishing_trace_basis, vanishing_trace_basis_on, CohomologyReport, CommutingReport,
    CubeElement, UnisolvenceReport, VanishingTraceReport,
};
pub(crate) use fe::cohomology_from_matrices;
pub use geometry::{faces, integrate_top_form, trace_to_face, AxisBox, CubeFace, Side};
