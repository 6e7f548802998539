//! Search the alternating group A5 for the least triple (sigma, alpha,
//! beta) with sigma = [sigma^beta, sigma^alpha], the identity that lets a
//! permutation survive arbitrarily deep commutator nesting.
//!
//! Run with `cargo run --example sigma_triple`.

use std::time::Instant;

use finitary::{balanced_fold, find_sigma_triple, Permutation};

fn main() {
    let started = Instant::now();
    let triple = find_sigma_triple();
    println!("search over A5^3 took {:?}", started.elapsed());
    println!("sigma = {}", triple.sigma);
    println!("alpha = {}", triple.alpha);
    println!("beta  = {}", triple.beta);
    assert!(triple.check());

    // sigma fixes the two letters reserved for truth values
    assert_eq!(triple.sigma.apply(0), 0);
    assert_eq!(triple.sigma.apply(1), 1);
    println!("sigma moves letters {:?}", triple.moved_letters());

    // the defining identity makes the balanced fold of D copies of sigma
    // collapse back to sigma for every power of two D
    for d in [1usize, 2, 4, 8, 16, 32, 64] {
        let entries: Vec<Permutation> = vec![triple.sigma.clone(); d];
        let folded = balanced_fold(&entries, &triple.alpha, &triple.beta).unwrap();
        assert_eq!(folded, triple.sigma);
        println!("fold of {d:2} copies = sigma");
    }

    // but one identity entry anywhere kills the whole fold
    let mut entries: Vec<Permutation> = vec![triple.sigma.clone(); 8];
    entries[5] = Permutation::identity(5);
    let folded = balanced_fold(&entries, &triple.alpha, &triple.beta).unwrap();
    assert!(folded.is_identity());
    println!("fold with one identity entry = identity");
}
