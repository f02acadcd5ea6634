//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit status: 0 when a result was computed (negative answers included),
//! 2 for bad input or usage, 3 when a search hit its state cap.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use kjump::chordal::find_peo;
use kjump::engine::DEFAULT_STATE_CAP;
use kjump::generate::{random_connected_graph, random_independent_set, random_split_graph, rng};
use kjump::io::{parse_graph, to_json, GraphDoc, GraphFormat, Instance, SequenceDoc};
use kjump::sat::{assignment_to_sequence, build_instance, instance_stats, parse_e3cnf, sequence_to_assignment};
use kjump::split::recognize_split;
use kjump::split2::decide2_traced;
use kjump::tj::simulate_sequence;
use kjump::{lower_bound_moves, validate_sequence, Error, Graph, Oracle, SearchLimits};

#[derive(Parser)]
#[command(name = "kjump", version, about = "Independent set reconfiguration under the k-Jump rule")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Split and chordal structure of a graph
    Recognize {
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide reachability by exact search
    Decide {
        instance: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, hide = true, default_value_t = DEFAULT_STATE_CAP)]
        max_states: usize,
    },
    /// Shortest sequence by exact search
    Shortest {
        instance: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, hide = true, default_value_t = DEFAULT_STATE_CAP)]
        max_states: usize,
    },
    /// Polynomial 2-Jump decision on split graphs
    Decide2 { instance: String },
    /// Compile a token-jumping sequence into jumps of length at most k
    Simulate {
        sequence: String,
        #[arg(long)]
        k: usize,
    },
    /// Build the reconfiguration instance of an E3-CNF formula
    Reduce {
        cnf: String,
        #[arg(long)]
        k: usize,
    },
    /// Sequence of length 2(m+n) from a satisfying assignment
    Witness {
        instance: String,
        /// One character per variable: 1/t/T for true, 0/f/F for false
        #[arg(long)]
        assignment: String,
    },
    /// Read an assignment off a short sequence of a reduction instance
    Extract { instance: String, sequence: String },
    /// Validate a sequence against an instance
    Verify {
        instance: String,
        sequence: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Size, diameter, chordality and lower bound of an instance
    Stats { instance: String },
    /// Seeded random instance generator
    #[command(hide = true)]
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        tokens: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Connected,
    Split,
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Format(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn load_instance(path: &str) -> Result<Instance, Error> {
    Instance::parse(&read_input(path)?)
}

fn load_sequence(path: &str) -> Result<SequenceDoc, Error> {
    SequenceDoc::parse(&read_input(path)?)
}

fn jump_bound(flag: Option<usize>, fallback: &[Option<usize>]) -> Result<usize, Error> {
    flag.or_else(|| fallback.iter().copied().flatten().next())
        .ok_or_else(|| Error::Format("no jump bound: pass --k or set \"k\" in the input".into()))
}

fn parse_assignment(bits: &str) -> Result<Vec<bool>, Error> {
    bits.chars()
        .map(|c| match c {
            '1' | 't' | 'T' => Ok(true),
            '0' | 'f' | 'F' => Ok(false),
            _ => Err(Error::Format(format!("assignment character {c:?} is not 0/1"))),
        })
        .collect()
}

fn bits(a: &[bool]) -> String {
    a.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable value")
}

fn recognize(g: &Graph) -> Value {
    let (split, obstruction) = match recognize_split(g) {
        Ok(dec) => (Some(dec), None),
        Err(Error::NotSplit(ob)) => (None, Some(ob)),
        Err(_) => (None, None),
    };
    let peo = find_peo(g);
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "split": split.is_some(),
        "decomposition": split.map(|d| value(&d)),
        "obstruction": obstruction.map(|o| value(&o)),
        "chordal": peo.is_some(),
        "peo": peo.map(|p| p.order),
    })
}

fn run(cli: Cli) -> Result<Value, Error> {
    Ok(match cli.command {
        Command::Recognize { graph, format } => {
            let format = match format {
                Format::Json => GraphFormat::Json,
                Format::Edgelist => GraphFormat::EdgeList,
            };
            recognize(&parse_graph(&read_input(&graph)?, format)?)
        }
        Command::Decide { instance, k, max_states } => {
            let inst = load_instance(&instance)?;
            let k = jump_bound(k, &[inst.k])?;
            let oracle = Oracle::new(&inst.graph, k)?.with_limits(SearchLimits { max_states });
            json!({ "k": k, "reconfigurable": oracle.decide(&inst.start, &inst.target)? })
        }
        Command::Shortest { instance, k, max_states } => {
            let inst = load_instance(&instance)?;
            let k = jump_bound(k, &[inst.k])?;
            let oracle = Oracle::new(&inst.graph, k)?.with_limits(SearchLimits { max_states });
            match oracle.shortest(&inst.start, &inst.target)? {
                Some(seq) => {
                    let mut v = value(&SequenceDoc::new(&seq, Some(&inst.graph), Some(k)));
                    v["reachable"] = json!(true);
                    v["length"] = json!(seq.len());
                    v
                }
                None => json!({ "k": k, "reachable": false, "result": "unreachable" }),
            }
        }
        Command::Decide2 { instance } => {
            let inst = load_instance(&instance)?;
            value(&decide2_traced(&inst.graph, &inst.start, &inst.target)?)
        }
        Command::Simulate { sequence, k } => {
            let doc = load_sequence(&sequence)?;
            let graph = doc
                .graph
                .as_ref()
                .ok_or_else(|| Error::Format("sequence input needs an embedded \"graph\"".into()))?
                .to_graph()?;
            let sim = simulate_sequence(&graph, &doc.sequence(), k)?;
            let mut v = value(&SequenceDoc::new(&sim.sequence, Some(&graph), Some(k)));
            v["expansions"] = value(&sim.expansions);
            v
        }
        Command::Reduce { cnf, k } => {
            let formula = parse_e3cnf(&read_input(&cnf)?)?;
            value(&Instance::from(&build_instance(&formula, k)?).to_doc())
        }
        Command::Witness { instance, assignment } => {
            let red = load_instance(&instance)?.to_reduction()?;
            let seq = assignment_to_sequence(&red, &parse_assignment(&assignment)?)?;
            value(&SequenceDoc::new(&seq, None, Some(red.k)))
        }
        Command::Extract { instance, sequence } => {
            let red = load_instance(&instance)?.to_reduction()?;
            let seq = load_sequence(&sequence)?.sequence();
            let a = sequence_to_assignment(&red, &seq)?;
            json!({ "assignment": bits(&a), "satisfies": red.formula.satisfies(&a) })
        }
        Command::Verify { instance, sequence, k } => {
            let inst = load_instance(&instance)?;
            let doc = load_sequence(&sequence)?;
            let k = jump_bound(k, &[doc.k, inst.k])?;
            let seq = doc.sequence();
            let report = validate_sequence(&inst.graph, &seq, k);
            let mut v = value(&report);
            v["k"] = json!(k);
            v["from_start"] = json!(seq.start == inst.start);
            v["reaches_target"] = json!(report.valid && report.final_config == inst.target);
            v
        }
        Command::Stats { instance } => {
            let inst = load_instance(&instance)?;
            if inst.formula.is_some() {
                let red = inst.to_reduction()?;
                let mut v = value(&instance_stats(&red)?);
                v["k"] = json!(red.k);
                v["witness_length"] = json!(red.witness_length());
                v
            } else {
                let g = &inst.graph;
                let bound = match inst.k {
                    Some(k) => Some(lower_bound_moves(g, &inst.start, &inst.target, k)?),
                    None => None,
                };
                json!({
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "tokens": inst.start.len(),
                    "diameter": g.diameter().ok(),
                    "chordal": find_peo(g).is_some(),
                    "split": recognize_split(g).is_ok(),
                    "k": inst.k,
                    "lower_bound": bound,
                })
            }
        }
        Command::Gen { family, n, p, seed, tokens, k } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Format(format!("probability {p} outside [0, 1]")));
            }
            let mut r = rng(seed);
            let g = match family {
                Family::Connected => random_connected_graph(&mut r, n, p),
                Family::Split => random_split_graph(&mut r, n, p),
            };
            let start = random_independent_set(&mut r, &g, tokens);
            let target = random_independent_set(&mut r, &g, tokens);
            match (start, target) {
                (Some(start), Some(target)) => value(&Instance { graph: g, start, target, k, formula: None }.to_doc()),
                // a bare graph when no pair of that size turned up
                _ => value(&GraphDoc::from(&g)),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            print!("{}", to_json(&v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceExhausted { .. } => ExitCode::from(3),
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
