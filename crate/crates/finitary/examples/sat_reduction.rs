//! Reduce CNF satisfiability to the word problem: the produced state
//! sequence acts as the identity exactly when the formula has no model.
//!
//! Run with `cargo run --example sat_reduction`.

use finitary::{
    apply, brute_force_sat, decide_identity, parse_dimacs, sat_to_wp, Letter, Verdict,
};

fn main() {
    // (x1 v x2 v x3) & (~x1 v x2 v ~x3)
    let cnf = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n").unwrap();
    let wp = sat_to_wp(&cnf).unwrap();
    println!(
        "automaton: {} states, depth {}; sequence: {} symbols",
        wp.automaton.state_count(),
        wp.automaton.depth().unwrap(),
        wp.sequence.len()
    );

    // the sequence reads an assignment block x3 x2 x1 and then acts on the
    // next letter: by sigma if the block satisfies the formula, not at all
    // otherwise
    let model = brute_force_sat(&cnf).unwrap().expect("satisfiable");
    let mut word = wp.layout.encode_assignment(&model).unwrap();
    word.push(Letter(2));
    let out = apply(&wp.automaton, &wp.sequence, &word);
    println!("satisfying block + probe letter: {word:?} -> {out:?}");
    assert_ne!(out, word);

    // an unsatisfying assignment leaves every extension fixed
    let bad = finitary::Assignment::from_pairs([(1, false), (2, false), (3, false)]);
    let mut word = wp.layout.encode_assignment(&bad).unwrap();
    word.push(Letter(2));
    assert_eq!(apply(&wp.automaton, &wp.sequence, &word), word);

    // so the word problem verdict IS the satisfiability verdict
    match decide_identity(&wp.automaton, &wp.sequence).unwrap() {
        Verdict::Witness(w) => println!("verdict: SAT, witness word {w:?}"),
        Verdict::Identity => println!("verdict: UNSAT"),
    }

    // the crafted unsatisfiable instance: all 8 sign patterns over 3 vars
    let mut text = String::from("p cnf 3 8\n");
    for m in 0..8u32 {
        for v in 1..=3 {
            if m >> (v - 1) & 1 == 1 {
                text.push_str(&format!("{v} "));
            } else {
                text.push_str(&format!("-{v} "));
            }
        }
        text.push_str("0\n");
    }
    let cnf = parse_dimacs(&text).unwrap();
    assert!(brute_force_sat(&cnf).unwrap().is_none());
    let wp = sat_to_wp(&cnf).unwrap();
    let verdict = decide_identity(&wp.automaton, &wp.sequence).unwrap();
    println!(
        "all-sign-patterns instance: {} symbols over {} states, verdict {verdict:?}",
        wp.sequence.len(),
        wp.automaton.state_count()
    );
    assert!(verdict.is_identity());
}
