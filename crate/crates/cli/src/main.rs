//! `l21`: generate graphs, compute and verify L(2,1)- and (G,H)-labelings.
//!
//! Exit status 0 on success, 1 when a precondition fails, a budget is
//! infeasible or a labeling is invalid, 2 on unreadable or malformed input.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use l21_core::families::random::gnp;
use l21_core::families::{
    erdos_extension, hoffman_singleton, petersen, polarity_graph, prime_power, Family, FiniteField,
    DEFAULT_SEED,
};
use l21_core::format::{
    emit_graph, emit_labeling, parse_graph, parse_instance, parse_labeling, ParseError,
};
use l21_core::graph::Graph;
use l21_core::hamilton::{posa_cycle_condition, posa_path_condition};
use l21_core::labeling::{
    l21_as_instance, verify_instance, verify_l21, Instance, Labeling, Relation,
};
use l21_core::pipeline::{
    bound_table, chang_kuo_instance, first_fit_instance, injective_labeling, label_with_budget,
    least_admissible_budget,
};
use l21_core::{exact_span, Error, ExactOutcome};

#[derive(Parser)]
#[command(name = "l21", version, about = "L(2,1)- and (G,H)-labelings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a named family.
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
    },
    /// Order, size, degrees, diameter and Pósa conditions.
    Info { file: PathBuf },
    /// Print the square of a graph.
    Square { file: PathBuf },
    /// Print the complement of a graph.
    Complement { file: PathBuf },
    /// Minimum span by branch and bound, with a witness.
    Exact {
        #[command(flatten)]
        input: Input,
        /// Only look for labelings with span at most B.
        #[arg(long, value_name = "B")]
        budget: Option<u32>,
    },
    /// Labeling with labels in 0..L via equitable colouring and hamilton paths.
    Label {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: Budget,
    },
    /// Greedy labeling.
    Baseline {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Injective labeling of span n − 1 from a hamilton path of the complement.
    Injective { file: PathBuf },
    /// Check a labeling file against a graph or instance.
    Verify {
        #[command(flatten)]
        input: Input,
        labels: PathBuf,
    },
    /// Order thresholds for L in Δ²+1 ..= Δ²+Δ.
    Bounds {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input.
    file: PathBuf,
    /// Read a weighted (G,H) instance instead of a plain graph.
    #[arg(long)]
    gh: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Budget {
    /// Number of available labels L.
    #[arg(long, value_name = "L")]
    span_budget: Option<usize>,
    /// Use the least L for which the construction applies.
    #[arg(long)]
    auto: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    FirstFit,
    ChangKuo,
}

#[derive(Subcommand)]
enum FamilyArg {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Centre 1 joined to vertices 2..n.
    Star {
        n: usize,
    },
    RandomTree {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// G(n, p).
    Gnp {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    Petersen,
    HoffmanSingleton,
    /// Polarity graph of the projective plane over GF(q).
    Polarity {
        q: u32,
    },
    /// Polarity graph of GF(q) plus a vertex joined to its absolute points.
    Erdos {
        q: u32,
    },
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Core(#[from] Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io { .. } | Failure::Parse { .. } => 2,
            Failure::Core(Error::InvalidInput(_)) => 2,
            Failure::Core(_) => 1,
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    let shown = path.display().to_string();
    let io = |source| Failure::Io {
        path: shown.clone(),
        source,
    };
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|source| Failure::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parsed(path, parse_graph(&read(path)?))
}

fn load(input: &Input) -> Result<Instance, Failure> {
    let text = read(&input.file)?;
    if input.gh {
        parsed(&input.file, parse_instance(&text))
    } else {
        Ok(l21_as_instance(&parsed(&input.file, parse_graph(&text))?))
    }
}

fn field(q: u32) -> Result<FiniteField, Failure> {
    let (p, k) =
        prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
    Ok(FiniteField::new(p, k)?)
}

fn generate(family: FamilyArg) -> Result<Graph, Failure> {
    let g = match family {
        FamilyArg::Path { n } => Family::Path(n).generate()?,
        FamilyArg::Cycle { n } => Family::Cycle(n).generate()?,
        FamilyArg::Complete { n } => Family::Complete(n).generate()?,
        FamilyArg::Star { n } => Family::Star(n).generate()?,
        FamilyArg::RandomTree { n, seed } => Family::RandomTree { n, seed }.generate()?,
        FamilyArg::Gnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!("p = {p} is not a probability")).into());
            }
            gnp(n, p, seed)
        }
        FamilyArg::Petersen => petersen(),
        FamilyArg::HoffmanSingleton => hoffman_singleton(),
        FamilyArg::Polarity { q } => polarity_graph(&field(q)?),
        FamilyArg::Erdos { q } => erdos_extension(&field(q)?)?,
    };
    Ok(g)
}

fn info(g: &Graph) -> String {
    let diameter = match g.diameter() {
        Ok(d) => d.to_string(),
        Err(_) => "none".into(),
    };
    let posa_cycle = match posa_cycle_condition(g) {
        Ok(b) => b.to_string(),
        Err(_) => "n/a".into(),
    };
    [
        ("n", g.order().to_string()),
        ("m", g.size().to_string()),
        ("max_degree", g.max_degree().to_string()),
        ("min_degree", g.min_degree().to_string()),
        ("diameter", diameter),
        ("posa_cycle", posa_cycle),
        ("posa_path", posa_path_condition(g).to_string()),
    ]
    .iter()
    .map(|(k, v)| format!("k {k} {v}\n"))
    .collect()
}

/// Prints a labeling with its summary, verifying it first.
fn report(inst: &Instance, f: &Labeling, method: &str, extra: &[(&str, String)]) -> Outcome {
    let valid = verify_instance(inst, f)?.is_valid();
    let mut summary = vec![("method", method.to_string())];
    summary.extend(extra.iter().cloned());
    summary.push(("span", f.span()?.to_string()));
    summary.push(("valid", valid.to_string()));
    print!("{}", emit_labeling(f, &summary));
    Ok(if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn exact(inst: &Instance, budget: Option<u32>) -> Outcome {
    let extra: Vec<_> = budget.iter().map(|b| ("budget", b.to_string())).collect();
    match exact_span(inst, budget)? {
        ExactOutcome::Optimal(r) => report(inst, &r.witness, "exact", &extra),
        ExactOutcome::InfeasibleWithinBudget => {
            println!("k method exact");
            for (k, v) in &extra {
                println!("k {k} {v}");
            }
            println!("k result infeasible");
            Ok(ExitCode::from(1))
        }
    }
}

fn label(inst: &Instance, budget: &Budget) -> Outcome {
    let l = match budget.span_budget {
        Some(l) => l,
        None => least_admissible_budget(inst)?,
    };
    let f = label_with_budget(inst, l)?;
    report(inst, &f, "budget", &[("L", l.to_string())])
}

fn relation_name(r: Relation) -> String {
    match r {
        Relation::Adjacent => "adjacent".into(),
        Relation::DistanceTwo => "distance-two".into(),
        Relation::Weight(w) => format!("weight-{w}"),
    }
}

fn verify(input: &Input, labels: &Path) -> Outcome {
    let text = read(&input.file)?;
    // plain graphs are checked by distance, instances by edge weight
    let (n, graph, inst) = if input.gh {
        let inst = parsed(&input.file, parse_instance(&text))?;
        (inst.order(), None, Some(inst))
    } else {
        let g = parsed(&input.file, parse_graph(&text))?;
        (g.order(), Some(g), None)
    };
    let doc = parsed(labels, parse_labeling(&read(labels)?, n))?;
    let f = parsed(labels, doc.total())?;
    let verdict = match (&graph, &inst) {
        (Some(g), _) => verify_l21(g, &f)?,
        (None, Some(inst)) => verify_instance(inst, &f)?,
        (None, None) => unreachable!("one input kind is always loaded"),
    };
    let span = f.span()?;
    let span_matches = doc.declared_span.is_none_or(|s| s == i64::from(span));
    println!("k method verify");
    println!("k span {span}");
    if let Some(s) = doc.declared_span {
        println!("k declared_span {s}");
        println!(
            "k span_record {}",
            if span_matches { "ok" } else { "mismatch" }
        );
    }
    println!("k violations {}", verdict.violations().len());
    let valid = verdict.is_valid() && span_matches;
    println!("k valid {valid}");
    for x in verdict.violations() {
        println!(
            "v {} {} {} {} {}",
            x.u + 1,
            x.v + 1,
            relation_name(x.relation),
            x.relation.required_gap(),
            x.gap
        );
    }
    Ok(if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn bounds(inst: &Instance) -> Outcome {
    let table = bound_table(inst)?;
    let first = &table[0];
    println!("k n {}", inst.order());
    println!("k delta {}", first.delta);
    println!("k delta_g {}", first.delta_g);
    match least_admissible_budget(inst) {
        Ok(l) => println!("k least_admissible_L {l}"),
        Err(Error::Precondition(p)) => println!("k least_admissible_L none ({})", p.name()),
        Err(e) => return Err(e.into()),
    }
    for r in &table {
        println!("b {} {} {}", r.l, r.m, r.applicable);
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Generate { family } => print!("{}", emit_graph(&generate(family)?)),
        Command::Info { file } => print!("{}", info(&load_graph(&file)?)),
        Command::Square { file } => print!("{}", emit_graph(&load_graph(&file)?.square())),
        Command::Complement { file } => {
            print!("{}", emit_graph(&load_graph(&file)?.complement()))
        }
        Command::Exact { input, budget } => return exact(&load(&input)?, budget),
        Command::Label { input, budget } => return label(&load(&input)?, &budget),
        Command::Baseline { input, method } => {
            let inst = load(&input)?;
            let (f, name) = match method {
                Method::FirstFit => (first_fit_instance(&inst)?, "first-fit"),
                Method::ChangKuo => (chang_kuo_instance(&inst)?, "chang-kuo"),
            };
            return report(&inst, &f, name, &[]);
        }
        Command::Injective { file } => {
            let g = load_graph(&file)?;
            let f = injective_labeling(&g)?;
            return report(&l21_as_instance(&g), &f, "injective", &[]);
        }
        Command::Verify { input, labels } => return verify(&input, &labels),
        Command::Bounds { input } => return bounds(&load(&input)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            if let Failure::Core(Error::Precondition(p)) = &failure {
                println!("k precondition {}", p.name());
            }
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
