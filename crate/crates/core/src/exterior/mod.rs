//! Exact algebra of polynomial differential forms: monomials, alternators,
//! wedge, exterior derivative, Koszul differential and traces.

mod form;
mod index;
mod json;
mod monomial;

pub use form::DiffForm;
pub use index::{eps, eps2, index_sets, multi_indices, IndexSet, MultiIndex, MAX_DIM};
pub use json::{FormJson, TermJson};
pub use monomial::{form_monomials, form_monomials_upto, FormMonomial};
