//! Finite permutations and the commutator machinery behind the hardness
//! reductions.
//!
//! The reductions need a degree-5 triple `(sigma, alpha, beta)` of even
//! permutations with `sigma = [conj(sigma, beta), conj(sigma, alpha)]`.
//! Such a triple exists because the alternating group A5 is perfect; we
//! search for the lexicographically least one and cache it.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image table.
///
/// Ordering and equality are lexicographic on the image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation);
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` after `other`: the result maps `a` to `self(other(a))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&a| self.apply(a)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            images[b as usize] = a as u32;
        }
        Permutation { images }
    }

    /// Conjugate of `self` by `by`: maps `a` to `by⁻¹(self(by(a)))`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// Commutator `[h, g] = h⁻¹ g⁻¹ h g`, acting as `a ↦ h⁻¹(g⁻¹(h(g(a))))`.
    pub fn commutator(h: &Permutation, g: &Permutation) -> Permutation {
        h.inverse().compose(&g.inverse()).compose(h).compose(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a as u32 == b)
    }

    /// Parity: even iff the permutation is a product of an even number of
    /// transpositions.
    pub fn is_even(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = self.images[a] as usize;
            }
        }
        (n - cycles).is_multiple_of(2)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, ")")
    }
}

/// All even permutations of the given degree, in lexicographic order.
pub fn all_even_permutations(degree: u32) -> Vec<Permutation> {
    let n = degree as usize;
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..degree).collect();
    loop {
        let p = Permutation {
            images: images.clone(),
        };
        if p.is_even() {
            out.push(p);
        }
        // next_permutation in lex order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// Folds a balanced commutator tree over permutations.
///
/// `entries` is `[q_D, .., q_1]` with `q_1` last; the recursion is
/// `B(q_D..q_1) = [conj(B(upper), beta), conj(B(lower), alpha)]` where
/// `upper` is the first half of the slice and `lower` the second.
/// Entry count must be a power of two.
pub fn balanced_fold(
    entries: &[Permutation],
    alpha: &Permutation,
    beta: &Permutation,
) -> Result<Permutation> {
    if entries.is_empty() || !entries.len().is_power_of_two() {
        return Err(Error::EntriesNotPowerOfTwo {
            count: entries.len(),
        });
    }
    fn fold(entries: &[Permutation], alpha: &Permutation, beta: &Permutation) -> Permutation {
        if entries.len() == 1 {
            return entries[0].clone();
        }
        let mid = entries.len() / 2;
        let upper = fold(&entries[..mid], alpha, beta).conjugate(beta);
        let lower = fold(&entries[mid..], alpha, beta).conjugate(alpha);
        Permutation::commutator(&upper, &lower)
    }
    Ok(fold(entries, alpha, beta))
}

/// The permutation triple the reductions are built on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTriple {
    pub sigma: Permutation,
    pub alpha: Permutation,
    pub beta: Permutation,
}

impl SigmaTriple {
    /// Letters moved by sigma, ascending.
    pub fn moved_letters(&self) -> Vec<u32> {
        (0..self.sigma.degree())
            .filter(|&a| self.sigma.apply(a) != a)
            .collect()
    }

    /// The triple's defining equation:
    /// `sigma == [conj(sigma, beta), conj(sigma, alpha)]`.
    pub fn check(&self) -> bool {
        let u = self.sigma.conjugate(&self.beta);
        let l = self.sigma.conjugate(&self.alpha);
        Permutation::commutator(&u, &l) == self.sigma
    }
}

/// Searches A5³ for the lexicographically least triple satisfying
/// `sigma = [conj(sigma, beta), conj(sigma, alpha)]` with sigma non-trivial.
///
/// Order of comparison: sigma first, then alpha, then beta.
pub fn find_sigma_triple() -> SigmaTriple {
    let evens = all_even_permutations(5);
    for sigma in &evens {
        if sigma.is_identity() {
            continue;
        }
        for alpha in &evens {
            let lower = sigma.conjugate(alpha);
            for beta in &evens {
                let upper = sigma.conjugate(beta);
                if Permutation::commutator(&upper, &lower) == *sigma {
                    return SigmaTriple {
                        sigma: sigma.clone(),
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    };
                }
            }
        }
    }
    unreachable!("A5 is perfect, a triple always exists");
}

/// The cached canonical triple.
pub fn sigma_triple() -> &'static SigmaTriple {
    static TRIPLE: OnceLock<SigmaTriple> = OnceLock::new();
    TRIPLE.get_or_init(find_sigma_triple)
}
