//! Finite-group computations on explicit multiplication tables.
//!
//! The toolkit decides the CCS property — every proper characteristic
//! subgroup cyclic — for desk-scale finite groups, classifies CCS groups
//! into their structural families, and provides the supporting machinery:
//! family constructors, automorphism search, subgroup enumeration, and the
//! modular-arithmetic validators for the metacyclic families.

pub mod aut;
pub mod ccs;
pub mod constructors;
pub mod corpus;
mod gensearch;
pub mod group;
pub mod io;
pub mod numberth;
pub mod structure;

pub use group::{ElementSet, GroupTable};

use thiserror::Error;

/// Size bounds for the enumerative operations.
///
/// `max_order` gates subgroup/automorphism enumeration, `assoc_check` is the
/// largest order at which table construction verifies associativity
/// exhaustively, `closure_limit` caps permutation/matrix closures, and
/// `max_aut` caps how many automorphisms a search will visit.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub max_order: usize,
    pub assoc_check: usize,
    pub closure_limit: usize,
    pub max_aut: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_order: 256,
            assoc_check: 512,
            closure_limit: 10_000,
            max_aut: 100_000,
        }
    }
}

impl Bounds {
    /// Uniform override of the enumeration bound, keeping the other limits.
    pub fn with_max_order(n: usize) -> Self {
        Bounds {
            max_order: n,
            ..Bounds::default()
        }
    }

    pub(crate) fn check_order(&self, what: &'static str, order: usize) -> Result<()> {
        if order > self.max_order {
            Err(Error::SizeLimit {
                what,
                size: order,
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("size limit exceeded in {what}: {size} > {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("classification failure: {0}")]
    ClassificationFailure(String),
    #[error("invalid group table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
