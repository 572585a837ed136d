//! Homomorphism counting, quotient factorization, strong Γ-scheme checks and
//! the rearrangement construction for small finite digraphs.

pub mod catalog;
pub mod class;
pub mod connectivity;
pub mod digraph;
pub mod error;
pub mod gamma_verify;
pub mod hom;
pub mod known;
pub mod quotient;
pub mod rearrange;
pub mod undirected;
pub mod vertex_set;

pub use class::{ClassKind, ClassSpec};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use hom::{count_homs, Count, HomMode, VertexMap};
pub use vertex_set::VertexSet;
