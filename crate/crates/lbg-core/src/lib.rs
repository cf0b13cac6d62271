//! Words, alphabets and finite fragments of infinite labeled graphs.

pub mod ball;
pub mod dot;
pub mod error;
pub mod fragment;
pub mod iso;
pub mod symbol;

pub use ball::{ball, Ball, DEFAULT_VERTEX_CAP};
pub use dot::{parse_dot, to_dot};
pub use error::CoreError;
pub use fragment::{CanonicalFragment, GraphFragment};
pub use iso::{isomorphic, verify_bijection};
pub use symbol::{display_symbols, sym, Alphabet, Symbol, Word};
