//! Incremental context-sensitive transductions: exact decision procedures,
//! Boolean combinations and the graphs they define.

pub mod acceptor;
pub mod blocks;
pub mod error;
pub mod graph;
pub mod samples;
pub mod sync;
pub mod transduction;

pub use acceptor::{acceptor_transduction, shift_acceptor, shift_transduction, Dfa, ShiftPiece, MARK};
pub use blocks::{to_one_incremental, BlockCode};
pub use error::TransductionError;
pub use graph::graph_ball;
pub use sync::{from_synchronized, from_synchronized_over};
pub use transduction::{
    combine, complement, semantic, BoolOp, Decider, ImageGenerator, IncrementalTransduction, Provenance, CANDIDATE_CAP,
};
