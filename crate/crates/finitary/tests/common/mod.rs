#![allow(dead_code)]

use finitary::{AutomatonBuilder, GAutomaton, GenSymbol, Letter, StateId, StateSequence};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random finitary automaton: state `s0` is the identity and every other
/// state points only at lower-numbered states, so the non-identity part is
/// acyclic by construction.
pub fn random_finitary(rng: &mut ChaCha8Rng, alphabet: u32, states: usize) -> GAutomaton {
    let mut b = AutomatonBuilder::new(alphabet).unwrap();
    for a in 0..alphabet {
        b.transition("s0", a, a, "s0").unwrap();
    }
    for i in 1..states {
        let mut outputs: Vec<u32> = (0..alphabet).collect();
        outputs.shuffle(rng);
        for a in 0..alphabet {
            let q = rng.random_range(0..i);
            b.transition(&format!("s{i}"), a, outputs[a as usize], &format!("s{q}"))
                .unwrap();
        }
    }
    b.build().unwrap()
}

pub fn sized_random_finitary(rng: &mut ChaCha8Rng) -> GAutomaton {
    let alphabet = rng.random_range(2..=4);
    let states = rng.random_range(1..=6);
    random_finitary(rng, alphabet, states)
}

pub fn random_sequence(rng: &mut ChaCha8Rng, aut: &GAutomaton, max_len: usize) -> StateSequence {
    let len = rng.random_range(0..=max_len);
    let symbols = (0..len)
        .map(|_| {
            let state = StateId(rng.random_range(0..aut.state_count() as u32));
            GenSymbol {
                state,
                inverse: rng.random(),
            }
        })
        .collect();
    StateSequence::new(symbols)
}

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: u32, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter(rng.random_range(0..alphabet))).collect()
}
