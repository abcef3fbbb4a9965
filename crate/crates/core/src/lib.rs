//! Randić spectra and Randić energies of graphs, with a specialization to
//! caterpillar trees.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`graph`]: simple undirected graphs, caterpillars `T(p1,...,pr)`, the
//!   H-join construction and the Randić matrix.
//! - [`eigen`]: a dense cyclic Jacobi eigensolver used as brute-force ground
//!   truth for every other route.
//! - [`hjoin`]: the quotient matrix `Γ_k` of an H-join of regular graphs and
//!   its caterpillar specialization `Γ_2r = [[A, B], [B, 0]]`, together with
//!   the `r × r` pencil `det(λ²I − λA − B²)`.
//! - [`closed_form`]: explicit spectra and energies for double stars (`r = 2`)
//!   and three-spine caterpillars (`r = 3`).
//! - [`extremal`]: extremal caterpillars of the one-parameter families
//!   studied over `r = 2, 3`, interval localization of the maximizer and the
//!   `g(n, b)` interval-length analysis.
//!
//! ```
//! use randic_core::{closed_form, graph::CaterpillarSpec, eigen};
//!
//! let spec = CaterpillarSpec::new(vec![2, 3]).unwrap();
//! let g = randic_core::graph::build_caterpillar(&spec);
//! let oracle = eigen::randic_energy(&g).unwrap();
//! let closed = closed_form::energy_r2(7, 2).unwrap();
//! assert!((oracle - closed).abs() < 1e-9);
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_form;
pub mod eigen;
mod error;
pub mod extremal;
pub mod graph;
pub mod hjoin;
pub(crate) mod math;
pub mod matrix;

pub use error::{Error, Result};
pub use graph::{CaterpillarSpec, Graph};
pub use matrix::{Matrix, SymmetricMatrix};
pub use eigen::Spectrum;
