//! Balanced iterated commutators over state sequences, expanded to
//! explicit words.
//!
//! `B[q_D, .., q_1]` nests commutators by halving: the base case is the
//! single entry, and `B[q_D..q_1] = [B(upper)^beta, B(lower)^alpha]`
//! where `upper` is the first half of the entry list (`q_1` is the LAST
//! element, matching the written order `B[q_D, .., q_1]`).

use crate::action::{GenSymbol, StateSequence};
use crate::error::{Error, Result};

/// Entries plus the two conjugating sequences.
#[derive(Clone, Debug)]
pub struct BalancedSpec {
    /// `[q_D, .., q_1]` with `q_1` last; the length must be a power of two.
    pub entries: Vec<StateSequence>,
    pub alpha: StateSequence,
    pub beta: StateSequence,
}

/// Expands the balanced commutator to a single sequence:
/// `beta⁻¹ U⁻¹ beta  alpha⁻¹ L⁻¹ alpha  beta⁻¹ U beta  alpha⁻¹ L alpha`,
/// recursively, where `U`/`L` expand the upper/lower halves.
///
/// The recursion emits symbols straight into the output buffer; only one
/// path of the recursion tree is alive at a time.
pub fn balanced_commutator(spec: &BalancedSpec) -> Result<StateSequence> {
    if spec.entries.is_empty() || !spec.entries.len().is_power_of_two() {
        return Err(Error::EntriesNotPowerOfTwo {
            count: spec.entries.len(),
        });
    }
    let mut out = Vec::new();
    emit(&spec.entries, &spec.alpha, &spec.beta, false, &mut out);
    Ok(StateSequence::new(out))
}

fn push(out: &mut Vec<GenSymbol>, seq: &StateSequence, inverted: bool) {
    if inverted {
        out.extend(seq.symbols().iter().rev().map(|s| s.inverted()));
    } else {
        out.extend_from_slice(seq.symbols());
    }
}

fn emit(
    entries: &[StateSequence],
    alpha: &StateSequence,
    beta: &StateSequence,
    inverted: bool,
    out: &mut Vec<GenSymbol>,
) {
    if entries.len() == 1 {
        push(out, &entries[0], inverted);
        return;
    }
    let (upper, lower) = entries.split_at(entries.len() / 2);
    if !inverted {
        // beta⁻¹ U⁻¹ beta alpha⁻¹ L⁻¹ alpha beta⁻¹ U beta alpha⁻¹ L alpha
        push(out, beta, true);
        emit(upper, alpha, beta, true, out);
        push(out, beta, false);
        push(out, alpha, true);
        emit(lower, alpha, beta, true, out);
        push(out, alpha, false);
        push(out, beta, true);
        emit(upper, alpha, beta, false, out);
        push(out, beta, false);
        push(out, alpha, true);
        emit(lower, alpha, beta, false, out);
        push(out, alpha, false);
    } else {
        // the inverse word: segments reversed, each segment inverted
        push(out, alpha, true);
        emit(lower, alpha, beta, true, out);
        push(out, alpha, false);
        push(out, beta, true);
        emit(upper, alpha, beta, true, out);
        push(out, beta, false);
        push(out, alpha, true);
        emit(lower, alpha, beta, false, out);
        push(out, alpha, false);
        push(out, beta, true);
        emit(upper, alpha, beta, false, out);
        push(out, beta, false);
    }
}

/// Length of the expansion without building it:
/// `L(1) = entry length, L(D) = 4·L(D/2) + 4·(|alpha| + |beta|)`.
pub fn expansion_len(spec: &BalancedSpec) -> Result<u128> {
    if spec.entries.is_empty() || !spec.entries.len().is_power_of_two() {
        return Err(Error::EntriesNotPowerOfTwo {
            count: spec.entries.len(),
        });
    }
    fn len(entries: &[StateSequence], conj: u128) -> u128 {
        if entries.len() == 1 {
            return entries[0].len() as u128;
        }
        let mid = entries.len() / 2;
        2 * len(&entries[..mid], conj) + 2 * len(&entries[mid..], conj) + 4 * conj
    }
    Ok(len(
        &spec.entries,
        (spec.alpha.len() + spec.beta.len()) as u128,
    ))
}
