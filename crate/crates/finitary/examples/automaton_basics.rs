//! Parse an automaton from its text form, inspect it, and round-trip it
//! through the canonical serializer.
//!
//! Run with `cargo run --example automaton_basics`.

use finitary::{GAutomaton, Letter};

// Two states over the binary alphabet: `x` swaps the first letter and
// stops, `e` never changes anything.
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
    let aut = GAutomaton::parse(FLIP).expect("well-formed text");
    println!("states: {}", aut.state_count());
    println!("alphabet: {}", aut.alphabet_size());
    println!("finitary: {}", aut.is_finitary());
    println!("depth: {}", aut.depth().expect("finitary"));

    // step() transduces one letter; the returned state handles the rest of
    // the word. inverse_step() answers "which input produced this output".
    let x = aut.state_id("x").unwrap();
    let (out, next) = aut.step(x, Letter(0));
    println!("x reads 0: writes {out}, continues in {}", aut.state_name(next));
    let (input, next_inv) = aut.inverse_step(x, Letter(1));
    println!("x^-1 reads 1: came from {input}, continues in {}", aut.state_name(next_inv));

    // identity states are detected structurally, not by their name
    assert_eq!(aut.identity_state(), aut.state_id("e"));

    // the canonical form is stable: parse o serialize is the identity on it
    let canonical = aut.serialize();
    let reparsed = GAutomaton::parse(&canonical).unwrap();
    assert!(aut.structurally_equal(&reparsed));
    assert_eq!(canonical, reparsed.serialize());
    println!("canonical form:\n{canonical}");
}
