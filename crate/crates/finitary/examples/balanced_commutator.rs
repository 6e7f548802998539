//! Build balanced iterated commutators of state sequences and watch the
//! two laws that make them work: with the right conjugators a nest of
//! copies of sigma acts as sigma again, and a single identity entry
//! collapses the whole nest.
//!
//! Run with `cargo run --example balanced_commutator`.

use finitary::{
    balanced_commutator, decide_identity, expansion_len, sigma_triple, AutomatonBuilder,
    BalancedSpec, StateSequence, Verdict,
};

fn main() {
    // one-shot states over the 5-letter alphabet: each applies one fixed
    // permutation to the first letter it reads, then stops acting
    let triple = sigma_triple();
    let mut b = AutomatonBuilder::new(5).unwrap();
    for a in 0..5 {
        b.transition("id", a, a, "id").unwrap();
        b.transition("sig", a, triple.sigma.apply(a), "id").unwrap();
        b.transition("alp", a, triple.alpha.apply(a), "id").unwrap();
        b.transition("bet", a, triple.beta.apply(a), "id").unwrap();
    }
    let aut = b.build().unwrap();
    let seq = |text: &str| StateSequence::parse(&aut, text).unwrap();

    // B[sig, sig] with conjugators alp, bet expands to twelve symbols:
    // bet^-1 U^-1 bet alp^-1 L^-1 alp bet^-1 U bet alp^-1 L alp
    let spec = BalancedSpec {
        entries: vec![seq("sig"), seq("sig")],
        alpha: seq("alp"),
        beta: seq("bet"),
    };
    let expansion = balanced_commutator(&spec).unwrap();
    println!("B[sig, sig] = {}", expansion.display(&aut));
    assert_eq!(expansion.len() as u128, expansion_len(&spec).unwrap());

    // sigma = [sigma^beta, sigma^alpha], so the nest still acts as sigma
    match decide_identity(&aut, &expansion).unwrap() {
        Verdict::Witness(word) => println!("acts like sigma: moves {word:?}"),
        Verdict::Identity => unreachable!("the triple law keeps sigma alive"),
    }

    // the same survives every nesting depth, with length L(2D) = 4 L(D) + 8
    let mut expect = 1u128;
    for log_d in 0..7 {
        let d = 1usize << log_d;
        let spec = BalancedSpec {
            entries: vec![seq("sig"); d],
            alpha: seq("alp"),
            beta: seq("bet"),
        };
        assert_eq!(expansion_len(&spec).unwrap(), expect);
        let expansion = balanced_commutator(&spec).unwrap();
        let verdict = decide_identity(&aut, &expansion).unwrap();
        assert!(!verdict.is_identity());
        println!("D = {d:2}: length {expect:5}, still non-identity");
        expect = 4 * expect + 8;
    }

    // but one identity entry anywhere collapses the nest to the identity,
    // even though the expansion text stays long: the commutator computes
    // the AND of its entries
    let mut entries = vec![seq("sig"); 8];
    entries[5] = seq("id");
    let spec = BalancedSpec { entries, alpha: seq("alp"), beta: seq("bet") };
    let expansion = balanced_commutator(&spec).unwrap();
    let verdict = decide_identity(&aut, &expansion).unwrap();
    println!("one dead entry among 8: {} symbols, verdict {verdict:?}", expansion.len());
    assert!(verdict.is_identity());
}
