//! Reductions from propositional problems to word problems.
//!
//! Both reductions share one automaton family over the alphabet
//! `{0,1,2,3,4}` with `0` read as false and `1` as true. A formula over
//! variables `x_1..x_N` turns into chains of depth `N`: a word starts with
//! the block `A(x_N)..A(x_1)` spelling an assignment, and the letter after
//! the block is where the machines act.
//!
//! - The `alpha` and `beta` chains copy any `N` letters, then apply a fixed
//!   permutation once and stop.
//! - The `sigma` chain copies truth values, then applies `sigma` once; a
//!   letter outside `{0,1}` ends it early without effect.
//! - Clause states `c_k_n` walk the assignment block: when the letter for a
//!   variable of clause `k` satisfies its literal they hand over to the
//!   `sigma` chain, and when the block ends unsatisfied they die into `id`.
//!
//! So the state `c_k_N` acts as `sigma` past exactly the assignments
//! satisfying clause `k` and trivially past the rest. A balanced iterated
//! commutator of the `c_k_N` (conjugated through `alpha`/`beta`) then acts
//! as `sigma` past satisfying assignments of the whole formula and
//! collapses to the identity if no assignment satisfies it: the word
//! problem answer is the satisfiability answer.
//!
//! The quantified reduction keeps the word free of assignment choices by
//! compressing it: a straight-line program alternates the commutator trick
//! with `t` chain states that flip one truth value, quantifying variables
//! from the inside out. The program expands to length `Θ(4^N)` but its rule
//! count stays linear in `N`, and the compressed word problem answer is the
//! formula's truth value.

use crate::action::{GenSymbol, StateSequence};
use crate::automaton::{AutomatonBuilder, GAutomaton, Letter};
use crate::commutator::{balanced_commutator, BalancedSpec};
use crate::error::{Error, Result};
use crate::formulas::{preprocess_3cnf, Assignment, Cnf, NnfQbf};
use crate::perm::{sigma_triple, Permutation, SigmaTriple};
use crate::slp::{RawSymbol, Slp};

/// How a reduction laid out its instance.
#[derive(Clone, Copy, Debug)]
pub struct ReductionLayout {
    /// Variables in the (preprocessed) formula; chains have this depth.
    pub num_vars: u32,
    /// Clauses after preprocessing.
    pub num_clauses: usize,
    /// Commutator entries after padding to a power of two; 0 when the
    /// formula has no clauses and no commutator is needed.
    pub padded_entries: usize,
    /// The permutations behind `sigma`, `alpha`, `beta`.
    pub triple: &'static SigmaTriple,
}

impl ReductionLayout {
    /// Encodes a total assignment as the letter block the automata read:
    /// `x_N` first, `x_1` last, true = `1`, false = `0`.
    pub fn encode_assignment(&self, assignment: &Assignment) -> Result<Vec<Letter>> {
        let n = self.num_vars;
        if assignment.len() != n as usize || (1..=n).any(|v| assignment.get(v).is_none()) {
            return Err(Error::PartialAssignment { expected: n });
        }
        Ok((1..=n)
            .rev()
            .map(|v| Letter(assignment.get(v).unwrap() as u32))
            .collect())
    }
}

/// A word problem instance equivalent to a SAT question.
#[derive(Clone, Debug)]
pub struct WpInstance {
    pub automaton: GAutomaton,
    pub sequence: StateSequence,
    pub layout: ReductionLayout,
}

/// A compressed word problem instance equivalent to a QBF question.
#[derive(Clone, Debug)]
pub struct CwpInstance {
    pub automaton: GAutomaton,
    pub slp: Slp,
    pub layout: ReductionLayout,
}

fn level_name(chain: &str, n: u32) -> String {
    format!("{chain}_{n}")
}

fn checker_name(k: usize, n: u32) -> String {
    format!("c_{k}_{n}")
}

/// Chain states `{chain}_{top}..{chain}_0`: levels above 0 pass letters
/// through unchanged, level 0 applies `emit` once and stops. With
/// `truth_only`, letters outside `{0,1}` stop a level early instead of
/// descending.
fn add_chain(
    b: &mut AutomatonBuilder,
    chain: &str,
    top: u32,
    truth_only: bool,
    emit: &Permutation,
) -> Result<()> {
    for n in (1..=top).rev() {
        let p = level_name(chain, n);
        let down = level_name(chain, n - 1);
        for a in 0..5 {
            let q = if truth_only && a > 1 { "id" } else { &down };
            b.transition(&p, a, a, q)?;
        }
    }
    let p = level_name(chain, 0);
    for a in 0..5 {
        b.transition(&p, a, emit.apply(a), "id")?;
    }
    Ok(())
}

fn add_clause_checkers(b: &mut AutomatonBuilder, matrix: &Cnf) -> Result<()> {
    for (idx, clause) in matrix.clauses().iter().enumerate() {
        let k = idx + 1;
        for n in (1..=matrix.num_vars()).rev() {
            let p = checker_name(k, n);
            let down = if n == 1 {
                "id".to_string()
            } else {
                checker_name(k, n - 1)
            };
            match clause.iter().find(|lit| lit.var == n) {
                Some(lit) => {
                    let sat = lit.positive as u32;
                    b.transition(&p, sat, sat, &level_name("sigma", n - 1))?;
                    b.transition(&p, 1 - sat, 1 - sat, &down)?;
                }
                None => {
                    b.transition(&p, 0, 0, &down)?;
                    b.transition(&p, 1, 1, &down)?;
                }
            }
            for a in 2..5 {
                b.transition(&p, a, a, "id")?;
            }
        }
    }
    Ok(())
}

fn build_reduction_automaton(matrix: &Cnf, with_t_chain: bool) -> Result<GAutomaton> {
    let triple = sigma_triple();
    let n = matrix.num_vars();
    let mut b = AutomatonBuilder::new(5)?;
    b.declare_identity("id");
    for a in 0..5 {
        b.transition("id", a, a, "id")?;
    }
    add_chain(&mut b, "alpha", n, false, &triple.alpha)?;
    add_chain(&mut b, "beta", n, false, &triple.beta)?;
    add_chain(&mut b, "sigma", n, true, &triple.sigma)?;
    if with_t_chain {
        let flip = Permutation::from_images(vec![1, 0, 2, 3, 4]).expect("valid images");
        add_chain(&mut b, "t", n - 1, true, &flip)?;
    }
    add_clause_checkers(&mut b, matrix)?;
    b.build()
}

fn single(aut: &GAutomaton, name: &str) -> StateSequence {
    let id = aut.state_id(name).expect("reduction state exists");
    StateSequence::new(vec![GenSymbol::positive(id)])
}

/// The flat sequence acting as `sigma` past satisfying assignments: the
/// balanced commutator over one checker per clause, padded to a power of
/// two by repeating the last clause, or the bare `sigma` chain for an
/// empty formula.
fn matrix_sequence(aut: &GAutomaton, matrix: &Cnf) -> Result<StateSequence> {
    let n = matrix.num_vars();
    let k = matrix.clauses().len();
    if k == 0 {
        return Ok(single(aut, &level_name("sigma", n)));
    }
    let d = k.next_power_of_two();
    let entries = (1..=d)
        .rev()
        .map(|j| single(aut, &checker_name(j.min(k), n)))
        .collect();
    balanced_commutator(&BalancedSpec {
        entries,
        alpha: single(aut, &level_name("alpha", n)),
        beta: single(aut, &level_name("beta", n)),
    })
}

fn layout_for(matrix: &Cnf) -> ReductionLayout {
    let k = matrix.clauses().len();
    ReductionLayout {
        num_vars: matrix.num_vars(),
        num_clauses: k,
        padded_entries: if k == 0 { 0 } else { k.next_power_of_two() },
        triple: sigma_triple(),
    }
}

/// Reduces satisfiability of a CNF (preprocessed to exact 3-CNF) to a word
/// problem: the sequence is non-identity iff the formula is satisfiable.
/// Its witnesses are exactly the words `A(x_N)..A(x_1) a ..` with `A`
/// satisfying and `sigma` moving `a`.
pub fn sat_to_wp(cnf: &Cnf) -> Result<WpInstance> {
    let matrix = preprocess_3cnf(cnf)?;
    let automaton = build_reduction_automaton(&matrix, false)?;
    let sequence = matrix_sequence(&automaton, &matrix)?;
    Ok(WpInstance {
        sequence,
        layout: layout_for(&matrix),
        automaton,
    })
}

fn term(name: &str, inverse: bool) -> RawSymbol {
    RawSymbol::Terminal(name.to_string(), inverse)
}

fn call(name: &str, inverse: bool) -> RawSymbol {
    RawSymbol::Call(name.to_string(), inverse)
}

/// Reduces truth of a quantified chain formula to a compressed word
/// problem: the program expands to a non-identity sequence iff the formula
/// is true. Rule `A0` is the flat matrix sequence; rule `A{n}` quantifies
/// `x_n` by combining both truth values of it (the `t_{N-n}` flip) through
/// one more commutator level.
pub fn qbf_to_cwp(q: &NnfQbf) -> Result<CwpInstance> {
    let n = q.num_vars();
    if n == 0 {
        return Err(Error::EmptyPrefix);
    }
    let automaton = build_reduction_automaton(q.matrix(), true)?;
    let base = matrix_sequence(&automaton, q.matrix())?;

    let alpha = level_name("alpha", n);
    let beta = level_name("beta", n);
    let sigma = level_name("sigma", n);
    let mut rules: Vec<(String, Vec<RawSymbol>)> = Vec::new();
    rules.push((
        "A0".to_string(),
        base.symbols()
            .iter()
            .map(|s| RawSymbol::Terminal(automaton.state_name(s.state).to_string(), s.inverse))
            .collect(),
    ));
    for level in 1..=n {
        let t = level_name("t", n - level);
        let prev = format!("A{}", level - 1);
        let pname = format!("A{level}p");
        let body = vec![
            term(&beta, true),
            term(&t, true),
            call(&prev, true),
            term(&t, false),
            term(&beta, false),
            term(&alpha, true),
            call(&prev, true),
            term(&alpha, false),
            term(&beta, true),
            term(&t, true),
            call(&prev, false),
            term(&t, false),
            term(&beta, false),
            term(&alpha, true),
            call(&prev, false),
            term(&alpha, false),
        ];
        rules.push((pname.clone(), body));
        rules.push((
            format!("A{level}"),
            vec![call(&pname, true), term(&sigma, false)],
        ));
    }
    let slp = Slp::from_rules(&format!("A{n}"), rules)?;
    Ok(CwpInstance {
        slp,
        layout: layout_for(q.matrix()),
        automaton,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{apply, decide_identity, decide_identity_exhaustive, Verdict};
    use crate::formulas::{brute_force_sat, eval_nnf_qbf, Literal};
    use crate::slp::slp_decide_identity;

    fn cnf(num_vars: u32, clauses: &[&[i64]]) -> Cnf {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| Literal::new(l.unsigned_abs() as u32, l > 0))
                    .collect()
            })
            .collect();
        Cnf::new(num_vars, clauses).unwrap()
    }

    fn letters(raw: &[u32]) -> Vec<Letter> {
        raw.iter().map(|&a| Letter(a)).collect()
    }

    #[test]
    fn single_clause_instance() {
        let wp = sat_to_wp(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(wp.automaton.state_count(), 16);
        assert_eq!(wp.automaton.depth().unwrap(), 4);
        assert_eq!(wp.sequence.len(), 1);
        assert_eq!(wp.layout.num_clauses, 1);
        assert_eq!(wp.layout.padded_entries, 1);

        let verdict = decide_identity(&wp.automaton, &wp.sequence).unwrap();
        assert_eq!(verdict, Verdict::Witness(letters(&[0, 0, 1, 2])));
        assert_eq!(
            apply(&wp.automaton, &wp.sequence, &letters(&[0, 0, 1, 2])),
            letters(&[0, 0, 1, 3])
        );
        assert_eq!(
            decide_identity_exhaustive(&wp.automaton, &wp.sequence).unwrap(),
            verdict
        );
    }

    #[test]
    fn state_names_follow_the_layout() {
        let wp = sat_to_wp(&cnf(3, &[&[1, 2, 3]])).unwrap();
        for name in ["id", "alpha_3", "beta_0", "sigma_2", "c_1_1", "c_1_3"] {
            assert!(wp.automaton.state_id(name).is_some(), "missing {name}");
        }
        assert!(wp.automaton.state_id("t_0").is_none());
        assert!(wp.automaton.state_id("c_1_0").is_none());
        assert!(wp.automaton.state_id("c_2_3").is_none());

        let q = NnfQbf::new(3, vec![vec![
            Literal::new(1, true),
            Literal::new(2, true),
            Literal::new(3, true),
        ]])
        .unwrap();
        let cwp = qbf_to_cwp(&q).unwrap();
        for name in ["t_0", "t_1", "t_2"] {
            assert!(cwp.automaton.state_id(name).is_some(), "missing {name}");
        }
        assert!(cwp.automaton.state_id("t_3").is_none());
    }

    #[test]
    fn all_sign_patterns_give_identity() {
        let all: Vec<&[i64]> = vec![
            &[1, 2, 3],
            &[-1, 2, 3],
            &[1, -2, 3],
            &[-1, -2, 3],
            &[1, 2, -3],
            &[-1, 2, -3],
            &[1, -2, -3],
            &[-1, -2, -3],
        ];
        let formula = cnf(3, &all);
        assert!(brute_force_sat(&formula).unwrap().is_none());

        let wp = sat_to_wp(&formula).unwrap();
        assert_eq!(wp.automaton.state_count(), 37);
        assert_eq!(wp.sequence.len(), 232);
        assert_eq!(wp.layout.padded_entries, 8);
        assert_eq!(
            decide_identity(&wp.automaton, &wp.sequence).unwrap(),
            Verdict::Identity
        );
    }

    #[test]
    fn two_clause_witness() {
        let wp = sat_to_wp(&cnf(3, &[&[1, -2, 3], &[-1, 2, -3]])).unwrap();
        assert_eq!(wp.automaton.state_count(), 19);
        assert_eq!(wp.sequence.len(), 12);
        assert_eq!(
            decide_identity(&wp.automaton, &wp.sequence).unwrap(),
            Verdict::Witness(letters(&[0, 0, 0, 2]))
        );
    }

    #[test]
    fn empty_formula_reduces_to_bare_sigma() {
        let wp = sat_to_wp(&cnf(0, &[])).unwrap();
        assert_eq!(wp.automaton.state_count(), 4);
        assert_eq!(wp.sequence.len(), 1);
        assert_eq!(wp.layout.padded_entries, 0);
        assert_eq!(
            decide_identity(&wp.automaton, &wp.sequence).unwrap(),
            Verdict::Witness(letters(&[2]))
        );
        assert_eq!(apply(&wp.automaton, &wp.sequence, &letters(&[2])), letters(&[3]));

        let wp = sat_to_wp(&cnf(2, &[])).unwrap();
        assert_eq!(wp.automaton.state_count(), 10);
        assert_eq!(
            decide_identity(&wp.automaton, &wp.sequence).unwrap(),
            Verdict::Witness(letters(&[0, 0, 2]))
        );
    }

    #[test]
    fn witnesses_are_satisfying_blocks_followed_by_moved_letters() {
        let wp = sat_to_wp(&cnf(3, &[&[1, 2, 3]])).unwrap();
        let moved = wp.layout.triple.moved_letters();
        for m in 0u32..8 {
            let assignment = Assignment::from_pairs((1..=3).map(|v| (v, m >> (v - 1) & 1 == 1)));
            let satisfies = m != 0;
            let block = wp.layout.encode_assignment(&assignment).unwrap();
            for a in 0..5 {
                let mut word = block.clone();
                word.push(Letter(a));
                let out = apply(&wp.automaton, &wp.sequence, &word);
                let expect_move = satisfies && moved.contains(&a);
                assert_eq!(out != word, expect_move, "word {word:?}");
            }
        }
    }

    #[test]
    fn encode_assignment_is_total_or_fails() {
        let wp = sat_to_wp(&cnf(3, &[&[1, 2, 3]])).unwrap();
        let full = Assignment::from_pairs([(1, true), (2, false), (3, true)]);
        assert_eq!(
            wp.layout.encode_assignment(&full).unwrap(),
            letters(&[1, 0, 1])
        );

        let partial = Assignment::from_pairs([(1, true)]);
        assert!(matches!(
            wp.layout.encode_assignment(&partial),
            Err(Error::PartialAssignment { expected: 3 })
        ));
        let shifted = Assignment::from_pairs([(1, true), (2, true), (4, true)]);
        assert!(matches!(
            wp.layout.encode_assignment(&shifted),
            Err(Error::PartialAssignment { expected: 3 })
        ));
    }

    fn qbf(num_vars: u32, clauses: &[&[i64]]) -> NnfQbf {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| Literal::new(l.unsigned_abs() as u32, l > 0))
                    .collect()
            })
            .collect();
        NnfQbf::new(num_vars, clauses).unwrap()
    }

    #[test]
    fn qbf_single_clause_false_instance() {
        let q = qbf(3, &[&[1, 2, 3]]);
        assert!(!eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert_eq!(cwp.automaton.state_count(), 19);
        assert_eq!(cwp.automaton.depth().unwrap(), 4);
        assert_eq!(cwp.slp.rule_count(), 7);
        assert_eq!(cwp.slp.start_name(), "A3");
        let len = cwp.slp.expansion_length();
        assert!(!len.saturated);
        assert_eq!(len.length, 337);
        assert_eq!(
            slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap(),
            Verdict::Identity
        );
    }

    #[test]
    fn qbf_empty_matrix_true_instance() {
        let q = NnfQbf::new(2, vec![]).unwrap();
        assert!(eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert_eq!(cwp.automaton.state_count(), 12);
        assert_eq!(cwp.automaton.depth().unwrap(), 3);
        assert_eq!(cwp.slp.expansion_length().length, 81);
        assert_eq!(
            slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap(),
            Verdict::Witness(letters(&[0, 0, 2]))
        );
    }

    #[test]
    fn qbf_two_clause_true_instance() {
        let q = qbf(3, &[&[1, 2, 3], &[1, -2, 3]]);
        assert!(eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert_eq!(cwp.automaton.state_count(), 22);
        assert_eq!(cwp.slp.expansion_length().length, 1041);
        let verdict = slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap();
        assert_eq!(verdict, Verdict::Witness(letters(&[0, 0, 0, 2])));

        let expanded = cwp.slp.decompress(&cwp.automaton, 10_000_000).unwrap();
        assert_eq!(expanded.len(), 1041);
        assert_eq!(
            apply(&cwp.automaton, &expanded, &letters(&[0, 0, 0, 2])),
            letters(&[0, 0, 0, 3])
        );
    }

    #[test]
    fn qbf_four_variable_instances() {
        let q = qbf(4, &[&[4, 1, 2]]);
        assert!(eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert_eq!(cwp.automaton.state_count(), 24);
        assert_eq!(cwp.automaton.depth().unwrap(), 5);
        assert_eq!(cwp.slp.expansion_length().length, 1361);
        assert_eq!(
            slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap(),
            Verdict::Witness(letters(&[0, 0, 0, 0, 2]))
        );

        let q = qbf(4, &[&[2, 3, 4], &[-2, 3, -4]]);
        assert!(eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert!(!slp_decide_identity(&cwp.automaton, &cwp.slp)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn qbf_false_instance_is_identity() {
        let q = qbf(3, &[&[1, 2, 3], &[-1, 2, -3]]);
        assert!(!eval_nnf_qbf(&q).unwrap());
        let cwp = qbf_to_cwp(&q).unwrap();
        assert_eq!(
            slp_decide_identity(&cwp.automaton, &cwp.slp).unwrap(),
            Verdict::Identity
        );
    }

    #[test]
    fn qbf_requires_at_least_one_variable() {
        let q = NnfQbf::new(0, vec![]).unwrap();
        assert!(matches!(qbf_to_cwp(&q), Err(Error::EmptyPrefix)));
    }

    #[test]
    fn sequence_length_follows_the_commutator_recurrence() {
        // L(1) = 1, L(2D) = 4 L(D) + 8 for single-state entries
        let lens = [1u128, 12, 56, 232];
        for (i, &expect) in lens.iter().enumerate() {
            let k = 1 << i;
            let clauses: Vec<Vec<i64>> = (0..k).map(|_| vec![1, 2, 3]).collect();
            let refs: Vec<&[i64]> = clauses.iter().map(|c| c.as_slice()).collect();
            let wp = sat_to_wp(&cnf(3, &refs)).unwrap();
            assert_eq!(wp.sequence.len() as u128, expect);
        }
    }
}
