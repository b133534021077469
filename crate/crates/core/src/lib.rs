//! Exact SU(3) tensor product combinatorics: closed-form multiplicities,
//! honeycombs and hives, tensor polygons, pictographs, and the
//! piecewise-linear bijection between `λ⊗μ` and `λ⊗μ̄`. A brute-force
//! SU(N) oracle (N ≤ 4) backs every closed form.

pub mod cli;
pub mod conjmap;
pub mod error;
pub mod honeycomb;
pub mod multiplicity;
pub mod oracle;
pub mod pictographs;
pub mod polygon;
pub mod weights;

pub use error::{Error, Result};
pub use weights::Weight;
