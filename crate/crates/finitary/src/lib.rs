//! Finitary automaton groups and their word problems.
//!
//! The library models invertible, complete, letter-to-letter transducers
//! whose states generate a group of tree automorphisms. It focuses on the
//! finitary case, where every long enough input prefix drives the machine
//! into an identity state, and provides:
//!
//! - parsing, validation, and canonical serialization of automata
//!   ([`GAutomaton`]) and of straight-line programs over their states
//!   ([`Slp`]);
//! - the action of signed state sequences on letter words, and word
//!   problem deciders that search for a shortest separating word
//!   ([`decide_identity`], [`slp_decide_identity`]);
//! - balanced iterated commutators with logarithmic-depth expansions
//!   ([`balanced_commutator`]);
//! - CNF and QBF machinery ([`formulas`]) and the reductions that turn a
//!   3-CNF formula into a word problem instance and a 3-QBF formula into a
//!   compressed word problem instance ([`reductions`]).
//!
//! The `examples/` directory walks through each capability; the `finitary`
//! binary exposes the same operations as subcommands.

pub mod action;
pub mod automaton;
pub mod commutator;
pub mod error;
pub mod formulas;
pub(crate) mod lex;
pub mod perm;
pub mod reductions;
pub mod slp;

pub use action::{
    apply, apply_with_residual, decide_identity, decide_identity_exhaustive,
    decide_identity_threaded, format_word, parse_word, GenSymbol, StateSequence, Verdict,
};
pub use automaton::{AutomatonBuilder, GAutomaton, Letter, StateId};
pub use commutator::{balanced_commutator, expansion_len, BalancedSpec};
pub use error::{Error, Result};
pub use formulas::{
    brute_force_sat, eval_cnf, eval_nnf_qbf, eval_prenex_qbf, normalize_to_3qbf, parse_dimacs,
    parse_qdimacs, preprocess_3cnf, Assignment, Clause, Cnf, Literal, NnfQbf, PrenexQbf,
    Quantifier,
};
pub use perm::{
    all_even_permutations, balanced_fold, find_sigma_triple, sigma_triple, Permutation,
    SigmaTriple,
};
pub use reductions::{qbf_to_cwp, sat_to_wp, CwpInstance, ReductionLayout, WpInstance};
pub use slp::{
    slp_decide_identity, slp_decide_identity_threaded, ExpansionLength, RawSymbol, Slp, SlpSymbol,
    StreamStats,
};
