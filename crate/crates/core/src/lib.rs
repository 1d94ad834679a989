//! Exact combinatorics for Young composition tableaux, immaculate tableaux and
//! the insertion bijection relating the dual immaculate and Young
//! quasisymmetric Schur bases.

pub mod composition;
pub mod dirt;
pub mod error;
pub mod insertion;
pub mod qsym;
pub mod rw_tree;
pub mod tableau;
pub mod verify;

pub use composition::{compositions_of, compositions_up_to, partitions_of, Composition};
pub use dirt::{enumerate_dirts, is_dirt, row_strip_shape, row_strips, superstandard, RowStripDecomposition};
pub use error::{Error, Result};
pub use insertion::{
    insert, insert_word, insert_word_steps, is_virtuous, rapture, uninsert, InsertionResult, RaptureResult, TraceEvent,
    WordStep,
};
pub use qsym::{expand_in, quasi_shuffle, Basis, BasisExpansion, MExpr};
pub use rw_tree::{rw_dual, rw_forward, PartialFilling, RwNode, RwTree};
pub use tableau::{enumerate_semistandard, enumerate_standard, Cell, Entry, Filling, TableauKind};
