//! Decide whether state sequences act as the identity, and read the
//! witness words back.
//!
//! Run with `cargo run --example word_problem`.

use finitary::{
    apply, decide_identity, decide_identity_exhaustive, decide_identity_threaded,
    AutomatonBuilder, StateSequence, Verdict,
};

fn main() {
    // a mod-3 counter on the ternary alphabet: state g_r adds r to the
    // first letter and then stops changing anything
    let mut b = AutomatonBuilder::new(3).unwrap();
    for r in 0..3u32 {
        for a in 0..3u32 {
            b.transition(&format!("g{r}"), a, (a + r) % 3, "g0").unwrap();
        }
    }
    let aut = b.build().unwrap();
    assert!(aut.is_finitary());

    // g1 g1 g1 adds 3 = 0: the identity, even though no single state is
    let seq = StateSequence::parse(&aut, "g1 g1 g1").unwrap();
    assert_eq!(decide_identity(&aut, &seq).unwrap(), Verdict::Identity);
    println!("g1 g1 g1 = identity");

    // g1 g1 adds 2; the decider returns the least word telling it apart
    let seq = StateSequence::parse(&aut, "g1 g1").unwrap();
    match decide_identity(&aut, &seq).unwrap() {
        Verdict::Witness(word) => {
            println!("g1 g1 moves the word {word:?} to {:?}", apply(&aut, &seq, &word));
        }
        Verdict::Identity => unreachable!(),
    }

    // inverses cancel: g2^-1 g1 g1 adds 2 - 2 = 0
    let seq = StateSequence::parse(&aut, "g2^-1 g1 g1").unwrap();
    assert_eq!(decide_identity(&aut, &seq).unwrap(), Verdict::Identity);
    println!("g2^-1 g1 g1 = identity");

    // the depth-first search, the exhaustive scan, and the threaded search
    // agree on every verdict and on the witness itself
    let seq = StateSequence::parse(&aut, "g2 g2").unwrap();
    let dfs = decide_identity(&aut, &seq).unwrap();
    assert_eq!(dfs, decide_identity_exhaustive(&aut, &seq).unwrap());
    assert_eq!(dfs, decide_identity_threaded(&aut, &seq, 4).unwrap());
    println!("g2 g2: all three deciders return {dfs:?}");
}
