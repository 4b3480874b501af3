//! Codes invariant under a coordinate permutation, studied through the
//! module structure they carry over `F_p[Y]`.

pub mod embed;
pub mod crt;
pub mod error;
pub mod field;
pub mod lincode;
pub mod perm;
pub mod poly;
pub mod search;
pub mod sigma;
pub mod tables;
pub mod torsion;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use lincode::LinearCode;
pub use perm::Permutation;
pub use poly::{Poly, Residue};
pub use sigma::{ModuleElement, SigmaCode};
