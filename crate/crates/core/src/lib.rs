//! Core computations for adjacency spectral radius and `H`-factors in
//! 1-binding graphs.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`): graph
//! construction and component analysis, small-order enumeration and
//! isomorphism, exact characteristic polynomials and quotient matrices,
//! power iteration, `H`-factor search, the Lu–Kano deficiency, binding
//! numbers, and the clique-join extremal families with their closed-form
//! quotient polynomials. File formats, campaigns and the CLI live in the
//! `hfactor` crate.

#![no_std]

extern crate alloc;

pub mod binding;
pub mod canon;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod roots;
pub mod spectral;

pub use binding::{binding_number, is_one_binding, BindingResult, BindingValue};
pub use canon::{canonical_code, canonical_graph, enumerate_connected, is_isomorphic};
pub use error::{Error, Result};
pub use factor::{
    all_even_h_assignments, find_h_factor, has_all_h_factors, lu_kano_deficiency, verify_h_factor, FactorSubgraph,
    HAssignment, HTag, LuKanoResult,
};
pub use graph::{Graph, RemovalAnalysis, VertexSet};
pub use matrix::{IntMatrix, Partition, RatMatrix};
pub use poly::IntPolynomial;
pub use roots::largest_real_root;
pub use spectral::{perron_vector, spectral_radius, PerronData};

/// Default residual tolerance for power iteration.
pub const DEFAULT_POWER_TOL: f64 = 1e-10;

/// Default absolute tolerance for root bisection.
pub const DEFAULT_ROOT_TOL: f64 = 1e-9;
