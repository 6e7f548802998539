//! Work with straight-line programs: exponentially long sequences in a
//! handful of rules, evaluated without ever materializing the expansion.
//!
//! Run with `cargo run --example slp_streaming`.

use finitary::{slp_decide_identity, GAutomaton, Slp, Verdict};

const FLIP: &str = "\
gaut v1
alphabet 2
identity e
trans x 0 1 e
trans x 1 0 e
trans e 0 0 e
trans e 1 1 e
";

fn main() {
    let aut = GAutomaton::parse(FLIP).unwrap();

    // A21 doubles A20 doubles A19 ... expansion length 2^20
    let mut text = String::from("slp v1\nstart A21\nrule A1 x\n");
    for i in 2..=21 {
        text.push_str(&format!("rule A{i} @A{} @A{}\n", i - 1, i - 1));
    }
    let slp = Slp::parse(&text).unwrap();

    let len = slp.expansion_length();
    println!("rules: {}, expansion length: {}", slp.rule_count(), len.length);
    assert_eq!(len.length, 1 << 20);
    assert!(!len.saturated);

    // streaming applies the program directly to a word: 2^20 flips cancel
    let word = [finitary::Letter(0), finitary::Letter(1)];
    let out = slp.stream_apply(&aut, &word).unwrap();
    println!("2^20 flips applied to {word:?}: {out:?}");
    assert_eq!(out.as_slice(), word.as_slice());

    // ... so the program is the identity, decided without decompression
    assert_eq!(slp_decide_identity(&aut, &slp).unwrap(), Verdict::Identity);
    println!("even at length 2^20: verdict identity");

    // an odd count of flips is one flip; the witness is the least moved
    // word of full depth
    let odd = Slp::parse("slp v1\nstart S\nrule A x\nrule S @A @A @A\n").unwrap();
    match slp_decide_identity(&aut, &odd).unwrap() {
        Verdict::Witness(word) => println!("x x x acts like x: moves {word:?}"),
        Verdict::Identity => unreachable!(),
    }

    // signed references expand mirrored and inverted, so @A @A^-1 cancels
    // symbol by symbol
    let cancel = Slp::parse("slp v1\nstart S\nrule A x x\nrule S @A @A^-1\n").unwrap();
    assert_eq!(
        cancel.decompress(&aut, 100).unwrap().display(&aut),
        "x x x^-1 x^-1"
    );

    // decompression refuses to materialize past a limit, streaming does not
    let huge = slp.decompress(&aut, 1000);
    println!("decompress with limit 1000: {}", huge.unwrap_err());

    // serialization is canonical: parents first, stable under re-parsing
    let canon = slp.serialize();
    assert_eq!(canon, Slp::parse(&canon).unwrap().serialize());
}
