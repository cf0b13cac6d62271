//! Transductions used by the examples and tests.

use lbg_core::{sym, Alphabet, Symbol, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::acceptor::{shift_transduction, Dfa, ShiftPiece};
use crate::transduction::IncrementalTransduction;

pub const SEPARATOR: &str = "|";

pub fn fig1_alphabet() -> Alphabet {
    Alphabet::parse("# a b")
}

fn piece(language: Dfa, drop: usize, suffix: &str) -> ShiftPiece {
    ShiftPiece { language, drop, suffix: Word::parse(suffix) }
}

/// `#a*`
fn hash_a_star() -> Dfa {
    Dfa::new(2, &[1]).on(0, "#", 1).on(1, "a", 1)
}

/// `#a⁺`
fn hash_a_plus() -> Dfa {
    Dfa::new(3, &[2]).on(0, "#", 1).on(1, "a", 2).on(2, "a", 2)
}

/// `x⁺y*`
fn plus_star(x: &str, y: &str) -> Dfa {
    Dfa::new(3, &[1, 2]).on(0, x, 1).on(1, x, 1).on(1, y, 2).on(2, y, 2)
}

/// `{(#aⁿ, #aⁿ⁺¹)} ∪ {(bᵐaⁿ, bᵐ⁻¹aⁿ⁺¹) : m ≥ 1}`
pub fn fig1_pieces_a() -> Vec<ShiftPiece> {
    vec![piece(hash_a_star(), 0, "a"), piece(plus_star("b", "a"), 1, "a")]
}

/// `{(#aⁿ, aⁿ⁻¹b) : n ≥ 1} ∪ {(aᵐbⁿ, aᵐ⁻¹bⁿ⁺¹) : m ≥ 1}`
pub fn fig1_pieces_b() -> Vec<ShiftPiece> {
    vec![piece(hash_a_plus(), 2, "b"), piece(plus_star("a", "b"), 1, "b")]
}

/// The acceptor-backed pair `(T_a, T_b)` whose graph from `#` is the
/// transition graph of the `aⁿbⁿ` machine.
pub fn fig1_family() -> Vec<(Symbol, IncrementalTransduction)> {
    let sep = sym(SEPARATOR);
    vec![
        (sym("a"), shift_transduction(fig1_alphabet(), sep, &fig1_pieces_a()).expect("valid pieces")),
        (sym("b"), shift_transduction(fig1_alphabet(), sep, &fig1_pieces_b()).expect("valid pieces")),
    ]
}

/// Seeded random shift pieces over `{a, b}` with growth at most 1.
pub fn random_pieces(seed: u64) -> Vec<ShiftPiece> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = ["a", "b"];
    let count = rng.gen_range(1..=2);
    (0..count)
        .map(|_| {
            let states = rng.gen_range(1..=3);
            let finals: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
            let mut dfa = Dfa::new(states, &finals);
            for q in 0..states {
                for x in letters {
                    if rng.gen_bool(0.8) {
                        dfa = dfa.on(q, x, rng.gen_range(0..states));
                    }
                }
            }
            let drop = rng.gen_range(0..=2);
            let len = rng.gen_range(0..=(drop + 1).min(2));
            let suffix: String = (0..len).map(|_| letters[rng.gen_range(0..2)]).collect();
            piece(dfa, drop, &suffix)
        })
        .collect()
}

/// Acceptor-backed transduction over `{a, b}` with `k ≤ 1`.
pub fn random_shift_transduction(seed: u64) -> IncrementalTransduction {
    let pieces = random_pieces(seed);
    let mut t = shift_transduction(Alphabet::parse("a b"), sym(SEPARATOR), &pieces).expect("valid pieces");
    t.k = 1;
    t
}
