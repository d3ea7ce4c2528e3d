//! Finite linear groups: fields, matrix-group closure, Sylow subgroups and
//! the natural-module checks built on them.

pub mod field;
pub mod gamma;
pub mod group;
pub mod matrix;
pub mod nq;

pub use field::{Elem, Field};
pub use gamma::{blow_up, gamma_group, sl2, GammaGroup};
pub use group::{sylow_subgroups, ClosedGroup, MatrixGroup, Subgroup, SylowFamily};
pub use matrix::{Matrix, Subspace};
pub use nq::{check_nq, is_irreducible, Irreducibility, NqReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{k}) exceeds the supported field size")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("modulus {0:?} is not a monic polynomial of the right degree over GF(p)")]
    BadModulus(Vec<u32>),
    #[error("modulus {} is reducible: divisible by {}", field::format_poly(.modulus), field::format_poly(.factor))]
    Reducible { modulus: Vec<u32>, factor: Vec<u32> },
    #[error("{0:?} is not a field element")]
    BadElement(Vec<u32>),
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,
    #[error("generator {generator}: expected a {expected}x{expected} matrix, found {found} rows or columns")]
    DimensionMismatch {
        generator: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {generator} has an entry outside the field")]
    EntryOutOfField { generator: usize },
    #[error("generator {generator} is singular")]
    Singular { generator: usize },
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("invalid closure cap {0:?}")]
    BadCap(String),
    #[error("module too large to enumerate")]
    ModuleTooLarge,
    #[error("internal error: {0}")]
    Internal(&'static str),
}
