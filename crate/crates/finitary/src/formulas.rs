//! CNF and QBF data model, DIMACS/QDIMACS parsing, brute-force oracles,
//! and the normalization of prenex formulas to the ¬∀-chain 3-QBF form.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lex::{dimacs_token_lines, syntax_at, Tok};

/// A variable or its negation. Variables are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: u32,
    pub positive: bool,
}

impl Literal {
    pub fn new(var: u32, positive: bool) -> Self {
        Literal { var, positive }
    }
}

pub type Clause = Vec<Literal>;

/// A conjunction of clauses over variables `x_1..x_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl Cnf {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Cnf> {
        for clause in &clauses {
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(Error::VarOutOfRange {
                        var: lit.var as i64,
                        max: num_vars,
                    });
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    Exists,
    ForAll,
}

impl Quantifier {
    fn opposite(self) -> Quantifier {
        match self {
            Quantifier::Exists => Quantifier::ForAll,
            Quantifier::ForAll => Quantifier::Exists,
        }
    }
}

/// A prenex quantified formula; the prefix is written outermost first.
/// Matrix variables missing from the prefix are closed existentially at
/// the outermost position, in ascending variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrenexQbf {
    prefix: Vec<(Quantifier, u32)>,
    matrix: Cnf,
}

impl PrenexQbf {
    pub fn new(prefix: Vec<(Quantifier, u32)>, matrix: Cnf) -> Result<PrenexQbf> {
        let mut quantified = HashSet::new();
        for &(_, var) in &prefix {
            if var == 0 || var > matrix.num_vars() {
                return Err(Error::VarOutOfRange {
                    var: var as i64,
                    max: matrix.num_vars(),
                });
            }
            if !quantified.insert(var) {
                return Err(Error::DuplicateQuantifier { var });
            }
        }
        let mut free: Vec<u32> = matrix
            .clauses()
            .iter()
            .flatten()
            .map(|lit| lit.var)
            .filter(|var| !quantified.contains(var))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        free.sort_unstable();
        let mut full = Vec::with_capacity(free.len() + prefix.len());
        full.extend(free.into_iter().map(|var| (Quantifier::Exists, var)));
        full.extend(prefix);
        Ok(PrenexQbf {
            prefix: full,
            matrix,
        })
    }

    pub fn prefix(&self) -> &[(Quantifier, u32)] {
        &self.prefix
    }

    pub fn matrix(&self) -> &Cnf {
        &self.matrix
    }
}

/// The chain form `¬∀x_N ¬∀x_{N−1} .. ¬∀x_1: matrix` with `x_N` outermost
/// and a matrix in which every clause has exactly 3 distinct variables and
/// no complementary pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NnfQbf {
    num_vars: u32,
    matrix: Cnf,
}

impl NnfQbf {
    /// Canonicalizes the clauses through `preprocess_3cnf`.
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<NnfQbf> {
        let matrix = preprocess_3cnf(&Cnf::new(num_vars, clauses)?)?;
        Ok(NnfQbf { num_vars, matrix })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn matrix(&self) -> &Cnf {
        &self.matrix
    }
}

/// A partial map from variables to truth values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<u32, bool>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, bool)>) -> Self {
        Assignment {
            values: pairs.into_iter().collect(),
        }
    }

    pub fn set(&mut self, var: u32, value: bool) {
        self.values.insert(var, value);
    }

    pub fn get(&self, var: u32) -> Option<bool> {
        self.values.get(&var).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pairs in ascending variable order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.values.iter().map(|(&v, &b)| (v, b))
    }
}

fn eval_clauses(cnf: &Cnf, value_of: impl Fn(u32) -> bool) -> bool {
    cnf.clauses()
        .iter()
        .all(|clause| clause.iter().any(|lit| value_of(lit.var) == lit.positive))
}

/// Evaluates under an assignment covering every variable the matrix uses.
pub fn eval_cnf(cnf: &Cnf, assignment: &Assignment) -> bool {
    eval_clauses(cnf, |var| {
        assignment
            .get(var)
            .expect("assignment must cover all matrix variables")
    })
}

/// Least satisfying assignment in binary counting order with `x_1` as the
/// least-significant bit, or `None`. Guarded to 30 variables.
pub fn brute_force_sat(cnf: &Cnf) -> Result<Option<Assignment>> {
    let n = cnf.num_vars();
    if n > 30 {
        return Err(Error::GuardExceeded {
            what: "variable count",
            max: 30,
            actual: n,
        });
    }
    for m in 0u64..(1u64 << n) {
        if eval_clauses(cnf, |var| m >> (var - 1) & 1 == 1) {
            return Ok(Some(Assignment::from_pairs(
                (1..=n).map(|var| (var, m >> (var - 1) & 1 == 1)),
            )));
        }
    }
    Ok(None)
}

/// Evaluates the chain `¬∀x_N ¬∀x_{N−1} .. ¬∀x_1: matrix`: level 0 is the
/// matrix, level n is NOT(AND over both values of x_n of level n−1).
/// Guarded to 20 variables.
pub fn eval_nnf_qbf(q: &NnfQbf) -> Result<bool> {
    let n = q.num_vars();
    if n > 20 {
        return Err(Error::GuardExceeded {
            what: "variable count",
            max: 20,
            actual: n,
        });
    }
    fn level(q: &NnfQbf, n: u32, values: &mut Vec<bool>) -> bool {
        if n == 0 {
            return eval_clauses(q.matrix(), |var| values[var as usize]);
        }
        values[n as usize] = false;
        let v0 = level(q, n - 1, values);
        values[n as usize] = true;
        let v1 = v0 && level(q, n - 1, values);
        !v1
    }
    let mut values = vec![false; n as usize + 1];
    Ok(level(q, n, &mut values))
}

/// Evaluates a prenex formula by quantifier recursion. Guarded to a
/// 24-quantifier prefix.
pub fn eval_prenex_qbf(q: &PrenexQbf) -> Result<bool> {
    let len = q.prefix().len();
    if len > 24 {
        return Err(Error::GuardExceeded {
            what: "quantifier count",
            max: 24,
            actual: len as u32,
        });
    }
    fn rec(q: &PrenexQbf, i: usize, values: &mut Vec<bool>) -> bool {
        let Some(&(quant, var)) = q.prefix().get(i) else {
            return eval_clauses(q.matrix(), |v| values[v as usize]);
        };
        values[var as usize] = false;
        let v0 = rec(q, i + 1, values);
        let short_circuit = match quant {
            Quantifier::Exists => v0,
            Quantifier::ForAll => !v0,
        };
        if short_circuit {
            return v0;
        }
        values[var as usize] = true;
        rec(q, i + 1, values)
    }
    let mut values = vec![false; q.matrix().num_vars() as usize + 1];
    Ok(rec(q, 0, &mut values))
}

/// Canonicalizes toward the 3-CNF the reductions consume: deduplicates
/// repeated literals, drops tautological clauses, then requires exactly 3
/// distinct variables per clause and orders each clause by descending
/// variable index.
pub fn preprocess_3cnf(cnf: &Cnf) -> Result<Cnf> {
    let mut out = Vec::with_capacity(cnf.clauses().len());
    for (index, clause) in cnf.clauses().iter().enumerate() {
        let mut signs: BTreeMap<u32, bool> = BTreeMap::new();
        let mut tautology = false;
        for lit in clause {
            match signs.insert(lit.var, lit.positive) {
                Some(prev) if prev != lit.positive => {
                    tautology = true;
                    break;
                }
                _ => {}
            }
        }
        if tautology {
            continue;
        }
        if signs.len() != 3 {
            return Err(Error::ClauseArity {
                index,
                distinct: signs.len(),
            });
        }
        let cleaned: Clause = signs
            .into_iter()
            .rev()
            .map(|(var, positive)| Literal { var, positive })
            .collect();
        out.push(cleaned);
    }
    Cnf::new(cnf.num_vars(), out)
}

fn parse_header(line: &[Tok<'_>]) -> Result<(u32, usize)> {
    if line.len() != 4 || line[0].text != "p" || line[1].text != "cnf" {
        return Err(line[0].syntax("expected header `p cnf <vars> <clauses>`"));
    }
    let num_vars: u32 = line[2]
        .text
        .parse()
        .map_err(|_| line[2].syntax("variable count must be a non-negative integer"))?;
    let num_clauses: usize = line[3]
        .text
        .parse()
        .map_err(|_| line[3].syntax("clause count must be a non-negative integer"))?;
    Ok((num_vars, num_clauses))
}

fn parse_clause_token(
    tok: &Tok<'_>,
    num_vars: u32,
    current: &mut Clause,
    clauses: &mut Vec<Clause>,
) -> Result<()> {
    let raw: i64 = tok
        .text
        .parse()
        .map_err(|_| tok.syntax("expected a literal or 0"))?;
    if raw == 0 {
        clauses.push(std::mem::take(current));
        return Ok(());
    }
    let var = raw.unsigned_abs();
    if var > num_vars as u64 {
        return Err(Error::VarOutOfRange {
            var: var as i64,
            max: num_vars,
        });
    }
    current.push(Literal {
        var: var as u32,
        positive: raw > 0,
    });
    Ok(())
}

/// Parses DIMACS CNF: `c` comment lines, a `p cnf N M` header, then
/// 0-terminated clauses.
pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let lines = dimacs_token_lines(text);
    let mut it = lines.into_iter();
    let header = it
        .next()
        .ok_or_else(|| syntax_at(1, 1, "empty input, expected `p cnf <vars> <clauses>`"))?;
    let (num_vars, declared) = parse_header(&header)?;

    let mut clauses = Vec::with_capacity(declared);
    let mut current = Clause::new();
    for line in it {
        for tok in &line {
            parse_clause_token(tok, num_vars, &mut current, &mut clauses)?;
        }
    }
    if !current.is_empty() {
        return Err(Error::UnterminatedClause);
    }
    if clauses.len() != declared {
        return Err(Error::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    Cnf::new(num_vars, clauses)
}

/// Parses QDIMACS: DIMACS plus `e`/`a` quantifier lines between the header
/// and the matrix, outermost first, each terminated by 0.
pub fn parse_qdimacs(text: &str) -> Result<PrenexQbf> {
    let lines = dimacs_token_lines(text);
    let mut it = lines.into_iter().peekable();
    let header = it
        .next()
        .ok_or_else(|| syntax_at(1, 1, "empty input, expected `p cnf <vars> <clauses>`"))?;
    let (num_vars, declared) = parse_header(&header)?;

    let mut prefix: Vec<(Quantifier, u32)> = Vec::new();
    while let Some(line) = it.peek() {
        let quant = match line[0].text {
            "e" => Quantifier::Exists,
            "a" => Quantifier::ForAll,
            _ => break,
        };
        let line = it.next().unwrap();
        let Some((last, vars)) = line[1..].split_last() else {
            return Err(line[0].syntax("expected `e <vars> 0` or `a <vars> 0`"));
        };
        if last.text != "0" {
            return Err(last.syntax("quantifier line must end with 0"));
        }
        for tok in vars {
            let var: u64 = tok
                .text
                .parse()
                .map_err(|_| tok.syntax("expected a variable index"))?;
            if var == 0 || var > num_vars as u64 {
                return Err(Error::VarOutOfRange {
                    var: var as i64,
                    max: num_vars,
                });
            }
            prefix.push((quant, var as u32));
        }
    }

    let mut clauses = Vec::with_capacity(declared);
    let mut current = Clause::new();
    for line in it {
        if matches!(line[0].text, "e" | "a") {
            return Err(line[0].syntax("quantifier line after the matrix"));
        }
        for tok in &line {
            parse_clause_token(tok, num_vars, &mut current, &mut clauses)?;
        }
    }
    if !current.is_empty() {
        return Err(Error::UnterminatedClause);
    }
    if clauses.len() != declared {
        return Err(Error::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    PrenexQbf::new(prefix, Cnf::new(num_vars, clauses)?)
}

/// Rewrites a prenex formula into the equivalent ¬∀-chain 3-QBF form.
///
/// In order: clauses are cleaned (duplicate literals merged, tautologies
/// dropped); clauses longer than 3 are split with fresh innermost
/// existentials (`(L1 ∨ L2 ∨ z) ∧ (¬z ∨ rest)`); clauses shorter than 3
/// are padded with fresh innermost universals (`L` ≡ `∀z: L ∨ z`); dummy
/// variables make the prefix alternate strictly ∃∀∃∀..∃∀; finally
/// variables are renumbered so the innermost is `x_1`. Rewriting each
/// `∃z: ψ` as `¬∀z: ¬ψ` then yields the chain, so the result evaluates
/// exactly like the input.
pub fn normalize_to_3qbf(q: &PrenexQbf) -> NnfQbf {
    let mut prefix = q.prefix().to_vec();
    let mut next_fresh = q.matrix().num_vars() + 1;

    // cleanup
    let mut clauses: Vec<Clause> = Vec::with_capacity(q.matrix().clauses().len());
    for clause in q.matrix().clauses() {
        let mut signs: BTreeMap<u32, bool> = BTreeMap::new();
        let mut tautology = false;
        let mut cleaned = Clause::new();
        for lit in clause {
            match signs.insert(lit.var, lit.positive) {
                None => cleaned.push(*lit),
                Some(prev) if prev != lit.positive => {
                    tautology = true;
                    break;
                }
                Some(_) => {}
            }
        }
        if !tautology {
            clauses.push(cleaned);
        }
    }

    // split long clauses, fresh existentials innermost in clause order
    let mut split = Vec::with_capacity(clauses.len());
    for clause in clauses {
        let mut rest = clause;
        while rest.len() > 3 {
            let z = next_fresh;
            next_fresh += 1;
            prefix.push((Quantifier::Exists, z));
            split.push(vec![rest[0], rest[1], Literal::new(z, true)]);
            let mut remainder = vec![Literal::new(z, false)];
            remainder.extend_from_slice(&rest[2..]);
            rest = remainder;
        }
        split.push(rest);
    }

    // pad short clauses, fresh universals innermost in clause order
    for clause in &mut split {
        while clause.len() < 3 {
            let z = next_fresh;
            next_fresh += 1;
            prefix.push((Quantifier::ForAll, z));
            clause.push(Literal::new(z, true));
        }
    }

    // dummy variables force strict ∃∀ alternation, ∃ outermost
    let mut alternating: Vec<(Quantifier, u32)> = Vec::new();
    let mut last = Quantifier::ForAll;
    for (quant, var) in prefix {
        if quant == last {
            alternating.push((quant.opposite(), next_fresh));
            next_fresh += 1;
        }
        alternating.push((quant, var));
        last = quant;
    }
    if alternating.is_empty() {
        alternating.push((Quantifier::Exists, next_fresh));
        alternating.push((Quantifier::ForAll, next_fresh + 1));
    } else if last == Quantifier::Exists {
        alternating.push((Quantifier::ForAll, next_fresh));
    }

    // renumber so position i from the outside becomes variable n − i
    let n = alternating.len() as u32;
    let renumber: HashMap<u32, u32> = alternating
        .iter()
        .enumerate()
        .map(|(i, &(_, var))| (var, n - i as u32))
        .collect();
    let matrix = split
        .into_iter()
        .map(|clause| {
            clause
                .into_iter()
                .map(|lit| {
                    Literal::new(
                        *renumber.get(&lit.var).expect("matrix variable is quantified"),
                        lit.positive,
                    )
                })
                .collect()
        })
        .collect();
    NnfQbf::new(n, matrix).expect("normalized clauses have 3 distinct variables")
}
