//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,

    #[error("automaton has no states")]
    NoStates,

    #[error("letter {letter} out of range for alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: u64, alphabet_size: u32 },

    #[error("duplicate transition from state '{state}' on input {input}")]
    DuplicateTransition { state: String, input: u32 },

    #[error("missing transition from state '{state}' on input {input}")]
    MissingTransition { state: String, input: u32 },

    #[error("state '{state}' does not output a permutation of the alphabet")]
    OutputNotBijective { state: String },

    #[error("state '{state}' was declared the identity but is not")]
    DeclaredIdentityInvalid { state: String },

    #[error("unknown state '{name}'")]
    UnknownState { name: String },

    #[error("automaton is not finitary: state '{state}' lies on a non-trivial cycle")]
    NotFinitary { state: String },

    #[error("balanced commutator needs a power-of-two entry count, got {count}")]
    EntriesNotPowerOfTwo { count: usize },

    #[error("duplicate rule '{name}'")]
    DuplicateRule { name: String },

    #[error("reference to missing rule '{name}'")]
    MissingRule { name: String },

    #[error("rule '{name}' expands through itself")]
    RuleCycle { name: String },

    #[error("expansion length {length} exceeds limit {limit}")]
    ExpansionTooLong { length: u128, limit: u128 },

    #[error("expansion length exceeds {limit} (count saturated)")]
    ExpansionSaturated { limit: u128 },

    #[error("{what} {actual} exceeds the supported maximum {max}")]
    GuardExceeded {
        what: &'static str,
        max: u32,
        actual: u32,
    },

    #[error("clause {index} has {distinct} distinct variables, need exactly 3")]
    ClauseArity { index: usize, distinct: usize },

    #[error("variable {var} out of range 1..={max}")]
    VarOutOfRange { var: i64, max: u32 },

    #[error("variable {var} quantified twice")]
    DuplicateQuantifier { var: u32 },

    #[error("header declares {declared} clauses but {found} were found")]
    ClauseCountMismatch { declared: usize, found: usize },

    #[error("last clause is not terminated by 0")]
    UnterminatedClause,

    #[error("quantifier prefix is empty")]
    EmptyPrefix,

    #[error("assignment must cover variables 1..={expected} exactly")]
    PartialAssignment { expected: u32 },

    #[error("images do not form a permutation")]
    NotAPermutation,
}

pub type Result<T> = std::result::Result<T, Error>;
