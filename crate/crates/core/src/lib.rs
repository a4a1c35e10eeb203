//! Exact construction of the `S_r Λ^k` finite element spaces of differential
//! forms on cubes and cubical meshes, together with computational
//! certificates of their structural properties.

pub mod element;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod mesh;
pub mod scalar;
pub mod spaces;
pub mod verify;

pub use error::{Error, Result};
