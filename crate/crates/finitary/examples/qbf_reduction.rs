//! Reduce quantified boolean formulas to the compressed word problem: the
//! straight-line program expands to a sequence that is non-identity
//! exactly when the formula is true. The expansion grows like 4^N while
//! the program itself stays linear in N.
//!
//! Run with `cargo run --example qbf_reduction`.

use finitary::{
    eval_nnf_qbf, normalize_to_3qbf, parse_qdimacs, qbf_to_cwp, slp_decide_identity, NnfQbf,
    Verdict,
};

fn main() {
    // forall x2 exists x1: (x1 v x2) & (~x1 v ~x2) -- true: pick x1 = ~x2
    let prenex = parse_qdimacs("p cnf 2 2\na 2 0\ne 1 0\n1 2 0\n-1 -2 0\n").unwrap();
    let nnf = normalize_to_3qbf(&prenex);
    println!(
        "normalized: {} variables, {} clauses",
        nnf.num_vars(),
        nnf.matrix().clauses().len()
    );

    let cwp = qbf_to_cwp(&nnf).unwrap();
    let len = cwp.slp.expansion_length();
    println!(
        "automaton: {} states; program: {} rules expanding to {} symbols",
        cwp.automaton.state_count(),
        cwp.slp.rule_count(),
        len.length
    );

    match slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap() {
        Verdict::Witness(word) => println!("verdict: TRUE, witness {word:?}"),
        Verdict::Identity => println!("verdict: FALSE"),
    }
    assert!(eval_nnf_qbf(&nnf).unwrap());

    // the same matrix with the quantifiers swapped is false: some x2 works
    // for neither x1
    let prenex = parse_qdimacs("p cnf 2 2\ne 1 0\na 2 0\n1 2 0\n-1 -2 0\n").unwrap();
    let nnf = normalize_to_3qbf(&prenex);
    let cwp = qbf_to_cwp(&nnf).unwrap();
    let verdict = slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap();
    println!("swapped prefix: verdict {verdict:?}");
    assert!(verdict.is_identity());
    assert!(!eval_nnf_qbf(&nnf).unwrap());

    // compression at work: rules grow linearly, expansions exponentially
    println!("\n N  rules  expansion");
    for n in 1..=12 {
        let q = NnfQbf::new(n, vec![]).unwrap();
        let cwp = qbf_to_cwp(&q).unwrap();
        let len = cwp.slp.expansion_length();
        println!("{n:>2}  {:>5}  {:>9}", cwp.slp.rule_count(), len.length);
    }
}
