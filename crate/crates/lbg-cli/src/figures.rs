//! The figure fragments kept as golden DOT files.

use lbg_core::{sym, to_dot, GraphFragment, Word};
use lbg_machine::samples::{anbn_machine, diamond_machine};
use lbg_rational::samples::{doubling, unary, unary_double, unary_minus_three};
use lbg_rational::{rational_ball, weber_rename, WeberFunction, WeberParams};
use lbg_rewriting::cayley_ball;
use lbg_rewriting::samples::counter_system;
use lbg_tgraph::{caucal_ball, epsilon_chain_graph, machine_ball, transition_ball, ExternalityPolicy};

use crate::error::CliError;

pub struct Figure {
    pub file: &'static str,
    pub fragment: GraphFragment,
}

impl Figure {
    pub fn dot(&self) -> String {
        to_dot(&self.fragment)
    }
}

/// The two unary functions n ↦ 2n and n ↦ n − 3 on `1⁺`.
pub fn weber_functions() -> Vec<WeberFunction> {
    vec![
        WeberFunction { name: sym("a"), label: sym("a"), transducer: unary_double() },
        WeberFunction { name: sym("b"), label: sym("b"), transducer: unary_minus_three() },
    ]
}

pub fn figures(cap: usize) -> Result<Vec<Figure>, CliError> {
    let policy = ExternalityPolicy::Configuration;
    let chain = epsilon_chain_graph();
    let one = chain.find("1").ok_or_else(|| CliError::usage("chain graph has no vertex 1"))?;
    let params = WeberParams { radius: 6, max_vertex_len: 64, word_cap: 256, cap };
    let weber = weber_rename(&weber_functions(), &Word::from_symbols(vec![unary()]), params)?;
    Ok(vec![
        Figure { file: "anbn_r3.dot", fragment: machine_ball(&anbn_machine(), 3, policy, cap)? },
        Figure { file: "counter_r4.dot", fragment: cayley_ball(&counter_system(), &Word::empty(), 4, cap)? },
        Figure { file: "chain_caucal.dot", fragment: caucal_ball(&chain, &one, 5, |_| true, cap)? },
        Figure { file: "chain_closure.dot", fragment: transition_ball(&chain, &[one], 5, cap)? },
        Figure {
            file: "doubling_r2.dot",
            fragment: rational_ball(&[(sym("t"), doubling())], &Word::parse("A"), 2, 64, cap)?,
        },
        Figure { file: "diamond_r3.dot", fragment: machine_ball(&diamond_machine(), 3, policy, cap)? },
        Figure { file: "weber_r6.dot", fragment: weber.renamed },
    ])
}
