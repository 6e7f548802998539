use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use finitary::{
    decide_identity_threaded, find_sigma_triple, format_word, normalize_to_3qbf, parse_dimacs,
    parse_qdimacs, parse_word, qbf_to_cwp, sat_to_wp, slp_decide_identity_threaded,
    brute_force_sat, eval_nnf_qbf, GAutomaton, ReductionLayout, Slp, StateSequence, Verdict,
};

/// Finitary automaton groups: validation, word problems, and the
/// SAT/QBF reductions, all over plain text formats.
#[derive(Parser)]
#[command(name = "finitary", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an automaton and report alphabet, size, finitarity, depth
    Validate {
        /// Automaton file (`-` for standard input)
        automaton: String,
    },
    /// Apply a state sequence to a word and print the output word
    Eval {
        /// Automaton file (`-` for standard input)
        automaton: String,
        /// Sequence, e.g. `x y^-1` (`-` for the empty sequence)
        #[arg(long)]
        seq: String,
        /// Input word, e.g. `0 1 2` (`-` for the empty word)
        #[arg(long)]
        word: String,
    },
    /// Decide whether a sequence acts as the identity on every word
    Wp {
        /// Automaton file (`-` for standard input)
        automaton: String,
        /// Sequence, e.g. `x y^-1` (`-` for the empty sequence)
        #[arg(long)]
        seq: String,
        /// Worker threads for the witness search
        #[arg(long, default_value_t = 1)]
        threads: u32,
    },
    /// Decide whether a compressed sequence acts as the identity
    Cwp {
        /// Automaton file (`-` for standard input)
        automaton: String,
        /// Straight-line program file
        #[arg(long)]
        slp: String,
        /// Worker threads for the witness search
        #[arg(long, default_value_t = 1)]
        threads: u32,
    },
    /// Print the expansion length of a straight-line program
    SlpLen {
        /// Straight-line program file (`-` for standard input)
        slp: String,
    },
    /// Expand a straight-line program to a plain sequence line
    SlpExpand {
        /// Straight-line program file (`-` for standard input)
        slp: String,
        /// Refuse expansions longer than this
        #[arg(long, default_value_t = 10_000_000)]
        limit: u128,
    },
    /// Reduce a DIMACS CNF to a word problem instance
    ReduceSat {
        /// DIMACS CNF file (`-` for standard input)
        dimacs: String,
        /// Output prefix; writes `<out>.gaut` and `<out>.seq`
        #[arg(long)]
        out: String,
    },
    /// Reduce a QDIMACS formula to a compressed word problem instance
    ReduceQbf {
        /// QDIMACS file (`-` for standard input)
        qdimacs: String,
        /// Output prefix; writes `<out>.gaut` and `<out>.slp`
        #[arg(long)]
        out: String,
    },
    /// Decide satisfiability through the word problem reduction
    SolveSat {
        /// DIMACS CNF file (`-` for standard input)
        dimacs: String,
        /// Worker threads for the witness search
        #[arg(long, default_value_t = 1)]
        threads: u32,
    },
    /// Decide truth through the compressed word problem reduction
    SolveQbf {
        /// QDIMACS file (`-` for standard input)
        qdimacs: String,
        /// Worker threads for the witness search
        #[arg(long, default_value_t = 1)]
        threads: u32,
    },
    /// Search A5 for the least commutator triple and verify it
    FindSigma,
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe closes (e.g. `| head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &str) -> Result<String, Box<dyn std::error::Error>> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load_automaton(path: &str) -> Result<GAutomaton, Box<dyn std::error::Error>> {
    Ok(GAutomaton::parse(&read_input(path)?)?)
}

fn print_verdict(verdict: &Verdict) {
    match verdict {
        Verdict::Identity => println!("identity"),
        Verdict::Witness(word) => println!("non-identity witness: {}", format_word(word)),
    }
}

fn metadata_block(tag: &str, layout: &ReductionLayout) -> String {
    format!(
        "# {tag}\n# variables: {}\n# clauses: {}\n# padded entries: {}\n# sigma: {}\n# alpha: {}\n# beta: {}\n",
        layout.num_vars,
        layout.num_clauses,
        layout.padded_entries,
        layout.triple.sigma,
        layout.triple.alpha,
        layout.triple.beta,
    )
}

fn write_artifact(path: &str, content: &str) -> Result<(), Box<dyn std::error::Error>> {
    fs::write(path, content)?;
    println!("wrote {path}");
    Ok(())
}

fn run(command: Command) -> Result<(), Box<dyn std::error::Error>> {
    match command {
        Command::Validate { automaton } => {
            let aut = load_automaton(&automaton)?;
            println!("ok");
            println!("alphabet: {}", aut.alphabet_size());
            println!("states: {}", aut.state_count());
            if aut.is_finitary() {
                println!("finitary: yes");
                println!("depth: {}", aut.depth()?);
            } else {
                println!("finitary: no");
            }
        }
        Command::Eval { automaton, seq, word } => {
            let aut = load_automaton(&automaton)?;
            let seq = StateSequence::parse(&aut, &seq)?;
            let word = parse_word(&word, aut.alphabet_size())?;
            println!("{}", format_word(&finitary::apply(&aut, &seq, &word)));
        }
        Command::Wp { automaton, seq, threads } => {
            let aut = load_automaton(&automaton)?;
            let seq = StateSequence::parse(&aut, &seq)?;
            print_verdict(&decide_identity_threaded(&aut, &seq, threads)?);
        }
        Command::Cwp { automaton, slp, threads } => {
            let aut = load_automaton(&automaton)?;
            let slp = Slp::parse(&read_input(&slp)?)?;
            print_verdict(&slp_decide_identity_threaded(&aut, &slp, threads)?);
        }
        Command::SlpLen { slp } => {
            let slp = Slp::parse(&read_input(&slp)?)?;
            let len = slp.expansion_length();
            if len.saturated {
                println!("expansion length: saturated (>= {})", len.length);
            } else {
                println!("expansion length: {}", len.length);
            }
        }
        Command::SlpExpand { slp, limit } => {
            let slp = Slp::parse(&read_input(&slp)?)?;
            let terms = slp.decompress_terms(limit)?;
            if terms.is_empty() {
                println!("-");
            } else {
                let line: Vec<String> = terms
                    .iter()
                    .map(|&(term, inverse)| {
                        let name = slp.terminal_name(term);
                        if inverse {
                            format!("{name}^-1")
                        } else {
                            name.to_string()
                        }
                    })
                    .collect();
                println!("{}", line.join(" "));
            }
        }
        Command::ReduceSat { dimacs, out } => {
            let cnf = parse_dimacs(&read_input(&dimacs)?)?;
            let wp = sat_to_wp(&cnf)?;
            let meta = metadata_block("reduce-sat", &wp.layout);
            print!("{meta}");
            write_artifact(
                &format!("{out}.gaut"),
                &format!("{meta}{}", wp.automaton.serialize()),
            )?;
            write_artifact(
                &format!("{out}.seq"),
                &format!("{meta}{}\n", wp.sequence.display(&wp.automaton)),
            )?;
        }
        Command::ReduceQbf { qdimacs, out } => {
            let prenex = parse_qdimacs(&read_input(&qdimacs)?)?;
            let cwp = qbf_to_cwp(&normalize_to_3qbf(&prenex))?;
            let meta = metadata_block("reduce-qbf", &cwp.layout);
            print!("{meta}");
            write_artifact(
                &format!("{out}.gaut"),
                &format!("{meta}{}", cwp.automaton.serialize()),
            )?;
            write_artifact(&format!("{out}.slp"), &format!("{meta}{}", cwp.slp.serialize()))?;
        }
        Command::SolveSat { dimacs, threads } => {
            let cnf = parse_dimacs(&read_input(&dimacs)?)?;
            let wp = sat_to_wp(&cnf)?;
            let verdict = decide_identity_threaded(&wp.automaton, &wp.sequence, threads)?;
            println!("{}", if verdict.is_identity() { "UNSAT" } else { "SAT" });
            if cnf.num_vars() <= 20 {
                let oracle_sat = brute_force_sat(&cnf)?.is_some();
                let agree = oracle_sat != verdict.is_identity();
                println!("oracle: {}", if agree { "agree" } else { "disagree" });
            }
        }
        Command::SolveQbf { qdimacs, threads } => {
            let prenex = parse_qdimacs(&read_input(&qdimacs)?)?;
            let nnf = normalize_to_3qbf(&prenex);
            let cwp = qbf_to_cwp(&nnf)?;
            let verdict = slp_decide_identity_threaded(&cwp.automaton, &cwp.slp, threads)?;
            println!("{}", if verdict.is_identity() { "FALSE" } else { "TRUE" });
            if nnf.num_vars() <= 12 {
                let oracle_true = eval_nnf_qbf(&nnf)?;
                let agree = oracle_true != verdict.is_identity();
                println!("oracle: {}", if agree { "agree" } else { "disagree" });
            }
        }
        Command::FindSigma => {
            let triple = find_sigma_triple();
            println!("sigma: {}", triple.sigma);
            println!("alpha: {}", triple.alpha);
            println!("beta: {}", triple.beta);
            assert!(triple.check(), "triple fails its own defining identity");
            println!("check: sigma = [sigma^beta, sigma^alpha]");
        }
    }
    Ok(())
}
