//! G-automata: deterministic, complete, invertible letter-to-letter
//! transducers over an integer alphabet, with validation, the finitary
//! check, depth, and the `gaut v1` text format.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::lex::{hash_token_lines, syntax_at};

/// A letter of the alphabet, an integer in `[0, alphabet_size)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A state, identified by its first-seen position in the automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

impl StateId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A validated G-automaton.
///
/// Immutable after construction; every state's output column is a
/// bijection on the alphabet, so each state acts as a length-preserving
/// bijection on words.
#[derive(Clone, Debug)]
pub struct GAutomaton {
    alphabet_size: u32,
    names: Vec<String>,
    index: HashMap<String, StateId>,
    // forward[p*k + a] = (b, q) with delta(p, a) = (b, q)
    forward: Vec<(Letter, StateId)>,
    // backward[p*k + b] = (a, q) with delta(p, a) = (b, q)
    backward: Vec<(Letter, StateId)>,
    identity_flags: Vec<bool>,
    least_identity: Option<StateId>,
    declared_identity: Option<StateId>,
}

impl GAutomaton {
    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn state_name(&self, state: StateId) -> &str {
        &self.names[state.index()]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied()
    }

    /// The transition of `p` reading input `a`: output letter and next state.
    pub fn step(&self, p: StateId, a: Letter) -> (Letter, StateId) {
        debug_assert!(a.0 < self.alphabet_size);
        self.forward[p.index() * self.alphabet_size as usize + a.index()]
    }

    /// The transition of `p⁻¹` reading `b`: the unique `(a, q)` with
    /// `step(p, a) = (b, q)`. The residual of `p⁻¹` is `q⁻¹`.
    pub fn inverse_step(&self, p: StateId, b: Letter) -> (Letter, StateId) {
        debug_assert!(b.0 < self.alphabet_size);
        self.backward[p.index() * self.alphabet_size as usize + b.index()]
    }

    /// Whether `state` acts as the identity on every word.
    pub fn is_identity_state(&self, state: StateId) -> bool {
        self.identity_flags[state.index()]
    }

    /// The least-index identity state, if any.
    pub fn identity_state(&self) -> Option<StateId> {
        self.least_identity
    }

    /// The state named by an `identity` line or `declare_identity` call.
    pub fn declared_identity(&self) -> Option<StateId> {
        self.declared_identity
    }

    /// Witness lengths per state: `levels[p]` is the least `d` such that
    /// every length-`d` path from `p` ends at an identity state.
    /// Errors if non-identity states contain a cycle.
    fn levels(&self) -> Result<Vec<u32>> {
        let k = self.alphabet_size as usize;
        let n = self.names.len();
        let live = |s: StateId| !self.identity_flags[s.index()];

        // Transitions into live states, reversed; out_deg counts a live
        // state's live successors with multiplicity.
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut out_deg = vec![0u32; n];
        for (p, deg) in out_deg.iter_mut().enumerate() {
            if self.identity_flags[p] {
                continue;
            }
            for a in 0..k {
                let (_, q) = self.forward[p * k + a];
                if live(q) {
                    preds[q.index()].push(p as u32);
                    *deg += 1;
                }
            }
        }

        let mut levels = vec![0u32; n];
        let mut queue: VecDeque<usize> = (0..n)
            .filter(|&p| !self.identity_flags[p] && out_deg[p] == 0)
            .collect();
        let mut processed = vec![false; n];
        while let Some(p) = queue.pop_front() {
            processed[p] = true;
            let mut max_succ = 0;
            for a in 0..k {
                let (_, q) = self.forward[p * k + a];
                max_succ = max_succ.max(levels[q.index()]);
            }
            levels[p] = 1 + max_succ;
            for &r in &preds[p] {
                out_deg[r as usize] -= 1;
                if out_deg[r as usize] == 0 {
                    queue.push_back(r as usize);
                }
            }
        }

        if let Some(p) = (0..n).find(|&p| !self.identity_flags[p] && !processed[p]) {
            return Err(Error::NotFinitary {
                state: self.names[p].clone(),
            });
        }
        Ok(levels)
    }

    /// Whether every cycle of the transition graph stays within identity
    /// states.
    pub fn is_finitary(&self) -> bool {
        self.levels().is_ok()
    }

    /// Least `d` such that every length-`d` path ends at an identity state.
    pub fn depth(&self) -> Result<u32> {
        Ok(self.levels()?.into_iter().max().unwrap_or(0))
    }

    /// Parses the `gaut v1` text format.
    pub fn parse(text: &str) -> Result<GAutomaton> {
        let lines = hash_token_lines(text);
        let mut it = lines.into_iter();

        let header = it
            .next()
            .ok_or_else(|| syntax_at(1, 1, "empty input, expected `gaut v1`"))?;
        if header.len() != 2 || header[0].text != "gaut" || header[1].text != "v1" {
            return Err(header[0].syntax("expected header `gaut v1`"));
        }

        let alpha_line = it
            .next()
            .ok_or_else(|| syntax_at(header[0].line + 1, 1, "expected `alphabet <k>`"))?;
        if alpha_line.len() != 2 || alpha_line[0].text != "alphabet" {
            return Err(alpha_line[0].syntax("expected `alphabet <k>`"));
        }
        let k: u32 = alpha_line[1]
            .text
            .parse()
            .map_err(|_| alpha_line[1].syntax("alphabet size must be a non-negative integer"))?;
        let mut builder = AutomatonBuilder::new(k)?;

        let mut saw_identity = false;
        let mut saw_trans = false;
        for line in it {
            match line[0].text {
                "identity" => {
                    if line.len() != 2 {
                        return Err(line[0].syntax("expected `identity <state>`"));
                    }
                    if saw_identity {
                        return Err(line[0].syntax("duplicate identity declaration"));
                    }
                    if saw_trans {
                        return Err(line[0].syntax("identity declaration must precede transitions"));
                    }
                    saw_identity = true;
                    let name = state_token(&line[1])?;
                    builder.declare_identity(name);
                }
                "trans" => {
                    if line.len() != 5 {
                        return Err(line[0].syntax("expected `trans <p> <a> <b> <q>`"));
                    }
                    saw_trans = true;
                    let p = state_token(&line[1])?;
                    let a = letter_token(&line[2], k)?;
                    let b = letter_token(&line[3], k)?;
                    let q = state_token(&line[4])?;
                    builder.transition(p, a, b, q)?;
                }
                other => {
                    return Err(line[0].syntax(format!("unknown directive `{other}`")));
                }
            }
        }
        builder.build()
    }

    /// Canonical text form: state blocks sorted by name, inputs ascending.
    /// Independent of the order states or transitions were supplied in;
    /// `parse(serialize(a))` is structurally equal to `a`.
    pub fn serialize(&self) -> String {
        let k = self.alphabet_size as usize;
        let mut out = String::new();
        out.push_str("gaut v1\n");
        out.push_str(&format!("alphabet {}\n", self.alphabet_size));
        if let Some(id) = self.declared_identity {
            out.push_str(&format!("identity {}\n", self.state_name(id)));
        }
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        for p in order {
            for a in 0..k {
                let (b, q) = self.forward[p * k + a];
                out.push_str(&format!(
                    "trans {} {} {} {}\n",
                    self.names[p],
                    a,
                    b,
                    self.names[q.index()]
                ));
            }
        }
        out
    }

    /// Equality of transition structure keyed by state names; ignores the
    /// order states were first seen in and any identity declaration.
    pub fn structurally_equal(&self, other: &GAutomaton) -> bool {
        if self.alphabet_size != other.alphabet_size || self.names.len() != other.names.len() {
            return false;
        }
        let k = self.alphabet_size as usize;
        for (p, name) in self.names.iter().enumerate() {
            let Some(op) = other.state_id(name) else {
                return false;
            };
            for a in 0..k {
                let (b, q) = self.forward[p * k + a];
                let (ob, oq) = other.forward[op.index() * k + a];
                if b != ob || self.names[q.index()] != other.names[oq.index()] {
                    return false;
                }
            }
        }
        true
    }
}

fn state_token<'a>(tok: &crate::lex::Tok<'a>) -> Result<&'a str> {
    if tok.text.starts_with('@') {
        return Err(tok.syntax("state names must not start with `@`"));
    }
    Ok(tok.text)
}

fn letter_token(tok: &crate::lex::Tok<'_>, alphabet_size: u32) -> Result<u32> {
    let raw: u64 = tok
        .text
        .parse()
        .map_err(|_| tok.syntax("expected a letter (non-negative integer)"))?;
    if raw >= alphabet_size as u64 {
        return Err(Error::LetterOutOfRange {
            letter: raw,
            alphabet_size,
        });
    }
    Ok(raw as u32)
}

/// Incremental construction of a validated automaton. States are indexed
/// in first-registration order.
pub struct AutomatonBuilder {
    alphabet_size: u32,
    names: Vec<String>,
    index: HashMap<String, StateId>,
    rows: Vec<Vec<Option<(Letter, StateId)>>>,
    declared_identity: Option<StateId>,
}

impl AutomatonBuilder {
    pub fn new(alphabet_size: u32) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(AutomatonBuilder {
            alphabet_size,
            names: Vec::new(),
            index: HashMap::new(),
            rows: Vec::new(),
            declared_identity: None,
        })
    }

    /// Registers a state (idempotent) and returns its id.
    pub fn state(&mut self, name: &str) -> StateId {
        debug_assert!(!name.starts_with('@') && !name.contains(char::is_whitespace));
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = StateId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        self.rows.push(vec![None; self.alphabet_size as usize]);
        id
    }

    /// Marks a state to be verified as an identity at build time.
    pub fn declare_identity(&mut self, name: &str) {
        let id = self.state(name);
        self.declared_identity = Some(id);
    }

    pub fn transition(&mut self, p: &str, input: u32, output: u32, q: &str) -> Result<()> {
        for letter in [input, output] {
            if letter >= self.alphabet_size {
                return Err(Error::LetterOutOfRange {
                    letter: letter as u64,
                    alphabet_size: self.alphabet_size,
                });
            }
        }
        let pid = self.state(p);
        let qid = self.state(q);
        let slot = &mut self.rows[pid.index()][input as usize];
        if slot.is_some() {
            return Err(Error::DuplicateTransition {
                state: p.to_string(),
                input,
            });
        }
        *slot = Some((Letter(output), qid));
        Ok(())
    }

    pub fn build(self) -> Result<GAutomaton> {
        let k = self.alphabet_size as usize;
        let n = self.names.len();
        if n == 0 {
            return Err(Error::NoStates);
        }

        let mut forward = Vec::with_capacity(n * k);
        for (p, row) in self.rows.iter().enumerate() {
            for (a, slot) in row.iter().enumerate() {
                match slot {
                    Some(entry) => forward.push(*entry),
                    None => {
                        return Err(Error::MissingTransition {
                            state: self.names[p].clone(),
                            input: a as u32,
                        })
                    }
                }
            }
        }

        let mut backward = vec![(Letter(0), StateId(0)); n * k];
        for p in 0..n {
            let mut seen = vec![false; k];
            for a in 0..k {
                let (b, q) = forward[p * k + a];
                if seen[b.index()] {
                    return Err(Error::OutputNotBijective {
                        state: self.names[p].clone(),
                    });
                }
                seen[b.index()] = true;
                backward[p * k + b.index()] = (Letter(a as u32), q);
            }
        }

        // A state is an identity iff its output column is the identity map
        // and all successors are identities: greatest fixed point.
        let mut flags: Vec<bool> = (0..n)
            .map(|p| (0..k).all(|a| forward[p * k + a].0.index() == a))
            .collect();
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
        for p in 0..n {
            for a in 0..k {
                preds[forward[p * k + a].1.index()].push(p as u32);
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&p| !flags[p]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &preds[q] {
                if flags[p as usize] {
                    flags[p as usize] = false;
                    queue.push_back(p as usize);
                }
            }
        }

        if let Some(d) = self.declared_identity {
            if !flags[d.index()] {
                return Err(Error::DeclaredIdentityInvalid {
                    state: self.names[d.index()].clone(),
                });
            }
        }
        let least_identity = flags.iter().position(|&f| f).map(|p| StateId(p as u32));

        Ok(GAutomaton {
            alphabet_size: self.alphabet_size,
            names: self.names,
            index: self.index,
            forward,
            backward,
            identity_flags: flags,
            least_identity,
            declared_identity: self.declared_identity,
        })
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::{f1, z3};
    use super::*;

    #[test]
    fn f1_structure() {
        let aut = f1();
        assert_eq!(aut.alphabet_size(), 2);
        assert_eq!(aut.state_count(), 2);
        let x = aut.state_id("x").unwrap();
        let e = aut.state_id("e").unwrap();
        assert_eq!(aut.step(x, Letter(0)), (Letter(1), e));
        assert_eq!(aut.step(e, Letter(1)), (Letter(1), e));
        assert_eq!(aut.inverse_step(x, Letter(1)), (Letter(0), e));
        assert_eq!(aut.inverse_step(e, Letter(0)), (Letter(0), e));
        assert!(aut.is_identity_state(e));
        assert!(!aut.is_identity_state(x));
        assert_eq!(aut.identity_state(), Some(e));
        assert!(aut.is_finitary());
        assert_eq!(aut.depth().unwrap(), 1);
    }

    #[test]
    fn z3_matches_group_multiplication() {
        let aut = z3();
        assert_eq!(aut.state_count(), 3);
        let g1 = aut.state_id("g1").unwrap();
        let g0 = aut.state_id("g0").unwrap();
        assert_eq!(aut.step(g1, Letter(2)), (Letter(0), g0));
        assert_eq!(aut.depth().unwrap(), 1);
    }

    #[test]
    fn inverse_step_inverts_step_everywhere() {
        for aut in [f1(), z3()] {
            for p in 0..aut.state_count() {
                let p = StateId(p as u32);
                for a in 0..aut.alphabet_size() {
                    let (b, q) = aut.step(p, Letter(a));
                    assert_eq!(aut.inverse_step(p, b), (Letter(a), q));
                }
            }
        }
    }

    #[test]
    fn non_bijective_output_rejected() {
        let err = GAutomaton::parse(
            "gaut v1\nalphabet 2\n\
             trans x 0 0 e\ntrans x 1 0 e\ntrans e 0 0 e\ntrans e 1 1 e\n",
        )
        .unwrap_err();
        assert!(matches!(err, Error::OutputNotBijective { state } if state == "x"));
    }

    #[test]
    fn missing_and_duplicate_transitions_rejected() {
        let err = GAutomaton::parse("gaut v1\nalphabet 2\ntrans x 0 1 x\n").unwrap_err();
        assert!(matches!(err, Error::MissingTransition { state, input: 1 } if state == "x"));

        let err = GAutomaton::parse(
            "gaut v1\nalphabet 2\ntrans x 0 1 x\ntrans x 0 0 x\n",
        )
        .unwrap_err();
        assert!(matches!(err, Error::DuplicateTransition { state, input: 0 } if state == "x"));
    }

    #[test]
    fn declared_identity_is_verified() {
        let err = GAutomaton::parse(
            "gaut v1\nalphabet 2\nidentity x\ntrans x 0 1 x\ntrans x 1 0 x\n",
        )
        .unwrap_err();
        assert!(matches!(err, Error::DeclaredIdentityInvalid { state } if state == "x"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = GAutomaton::parse("gaut v2\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 1, .. }));
        let err = GAutomaton::parse("gaut v1\nalphabet 2\nbogus x\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, column: 1, .. }));
        let err = GAutomaton::parse("gaut v1\nalphabet 2\ntrans x 7 0 x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::LetterOutOfRange { letter: 7, alphabet_size: 2 }
        ));
    }

    #[test]
    fn empty_inputs_rejected() {
        assert!(matches!(
            GAutomaton::parse("gaut v1\nalphabet 0\n").unwrap_err(),
            Error::EmptyAlphabet
        ));
        assert!(matches!(
            GAutomaton::parse("gaut v1\nalphabet 2\n").unwrap_err(),
            Error::NoStates
        ));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let aut = GAutomaton::parse(
            "# fixture\ngaut v1\n\nalphabet 2 # two letters\nidentity e\n\
             trans x 0 1 e\ntrans x 1 0 e # flip\ntrans e 0 0 e\ntrans e 1 1 e\n",
        )
        .unwrap();
        assert!(aut.structurally_equal(&f1()));
    }

    #[test]
    fn non_identity_self_loop_is_not_finitary() {
        let aut = GAutomaton::parse(
            "gaut v1\nalphabet 3\ntrans r 0 1 r\ntrans r 1 2 r\ntrans r 2 0 r\n",
        )
        .unwrap();
        assert_eq!(aut.identity_state(), None);
        assert!(!aut.is_finitary());
        assert!(matches!(
            aut.depth().unwrap_err(),
            Error::NotFinitary { state } if state == "r"
        ));
    }

    #[test]
    fn swap_cycle_between_states_is_not_finitary() {
        let aut = GAutomaton::parse(
            "gaut v1\nalphabet 2\n\
             trans p 0 0 q\ntrans p 1 1 q\ntrans q 0 1 p\ntrans q 1 0 p\n",
        )
        .unwrap();
        assert!(!aut.is_finitary());
    }

    #[test]
    fn mutual_identity_cycle_is_finitary_with_depth_zero() {
        // e1 and e2 copy everything and feed each other; both act trivially.
        let aut = GAutomaton::parse(
            "gaut v1\nalphabet 2\n\
             trans e1 0 0 e2\ntrans e1 1 1 e2\ntrans e2 0 0 e1\ntrans e2 1 1 e1\n",
        )
        .unwrap();
        assert!(aut.is_identity_state(aut.state_id("e1").unwrap()));
        assert!(aut.is_identity_state(aut.state_id("e2").unwrap()));
        assert_eq!(aut.depth().unwrap(), 0);
    }

    #[test]
    fn depth_of_chain_counts_levels() {
        // c3 -> c2 -> c1 -> e, with c1 flipping letters.
        let aut = GAutomaton::parse(
            "gaut v1\nalphabet 2\nidentity e\n\
             trans c3 0 0 c2\ntrans c3 1 1 c2\n\
             trans c2 0 0 c1\ntrans c2 1 1 c1\n\
             trans c1 0 1 e\ntrans c1 1 0 e\n\
             trans e 0 0 e\ntrans e 1 1 e\n",
        )
        .unwrap();
        assert_eq!(aut.depth().unwrap(), 3);
        assert!((aut.depth().unwrap() as usize) < aut.state_count());
    }

    #[test]
    fn least_index_identity_wins() {
        let aut = GAutomaton::parse(
            "gaut v1\nalphabet 2\n\
             trans e1 0 0 e1\ntrans e1 1 1 e1\ntrans e2 0 0 e2\ntrans e2 1 1 e2\n",
        )
        .unwrap();
        assert_eq!(aut.identity_state(), Some(StateId(0)));
        assert_eq!(aut.state_name(StateId(0)), "e1");
    }

    #[test]
    fn serialization_is_canonical_and_round_trips() {
        let aut = f1();
        let text = aut.serialize();
        let reparsed = GAutomaton::parse(&text).unwrap();
        assert!(reparsed.structurally_equal(&aut));
        assert_eq!(reparsed.serialize(), text);

        // Same transitions in shuffled order serialize identically.
        let shuffled = GAutomaton::parse(
            "gaut v1\nalphabet 2\nidentity e\n\
             trans e 1 1 e\ntrans x 1 0 e\ntrans e 0 0 e\ntrans x 0 1 e\n",
        )
        .unwrap();
        assert_eq!(shuffled.serialize(), text);
    }

    #[test]
    fn structural_equality_detects_differences() {
        let aut = f1();
        let other = GAutomaton::parse(
            "gaut v1\nalphabet 2\nidentity e\n\
             trans y 0 1 e\ntrans y 1 0 e\ntrans e 0 0 e\ntrans e 1 1 e\n",
        )
        .unwrap();
        assert!(!aut.structurally_equal(&other));
    }
}
