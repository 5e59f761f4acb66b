//! Enumeration, rectangle tiling, and impossibility proofs for holey
//! polyominoes: free shapes with `n` visible squares whose minimal
//! connector has `k` transparent squares.
//!
//! During tiling a visible square may lie on top of transparent squares of
//! other tiles, but never on another visible square. A piece is
//! *rectifiable* when copies of it can completely fill some rectangle;
//! this crate finds such tilings, proves some pieces unrectifiable, and
//! classifies whole (n,k) families into solved / impossible / unknown.
//!
//! A narrative guide with runnable examples lives in the `book/` directory
//! of the repository; its code blocks are compiled as doc-tests below.

pub mod board;
pub mod budget;
pub mod catalog;
pub mod cell;
pub mod fixtures;
pub mod prover;
pub mod render;
pub mod shape;
pub mod solver;
pub mod strip;

pub use board::{Board, CellState, Placement};
pub use budget::SearchBudget;
pub use catalog::{classify, classify_class, BudgetProfile, Catalog, Classification, Status};
pub use cell::{Cell, CellSet, SymmetryImage};
pub use fixtures::{compare_to_expected, DiffReport, ExpectedClass};
pub use prover::{prove_unrectifiable, InconclusiveReason, ProofOutcome, UnrectifiableProof};
pub use shape::{enumerate_connected, enumerate_holey, steiner_k, HoleyPolyomino};
pub use solver::{
    construct_2k_tiling, inverse_completion, smallest_tiling, solve_bounded, solve_exact,
    verify_tiling, ExactOutcome, SolveOutcome, SweepOutcome, Tiling,
};
pub use strip::{max_side_floor, min_side_bound, strip_status, SideBound, StripStatus};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty shape")]
    EmptyShape,
    #[error("cannot parse piece `{0}`: expected semicolon-separated `row,col` pairs")]
    ParsePiece(String),
    #[error("size {0} outside the supported range 1..=10")]
    SizeOutOfRange(usize),
    #[error("class ({0},{1}) unsupported: need n >= 1 and n + k <= 10")]
    ClassOutOfRange(usize, usize),
    #[error("illegal placement: {0}")]
    IllegalPlacement(String),
    #[error("target cell is occupied or out of bounds")]
    BadTarget,
    #[error("empty move stack")]
    EmptyMoveStack,
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("missing expected-results fixture for class ({0},{1})")]
    MissingFixture(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/shapes.md")]
    mod shapes {}
    #[doc = include_str!("../../../book/src/tiling.md")]
    mod tiling {}
    #[doc = include_str!("../../../book/src/impossibility.md")]
    mod impossibility {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
}
