//! The `numset` command: analysis, conversion, sums, decompositions,
//! rendering and exhaustive checks of numerical sets from the shell.
//!
//! [`run`] holds all behaviour so it can be driven in-process by tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numset_core::census::{self, BoundType, Caps, EnumSpec, SetKind, TheoremId};
use numset_core::{
    decompose, fold_partitions, fold_sets, numerical_set_of, partition_of, render,
    render_partition, Error, NumericalSet, Partition, RenderFormat, SumKind,
};

#[derive(Parser, Debug)]
#[command(
    name = "numset",
    version,
    about = "Numerical sets, their Young diagrams and sums"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print gaps, genus, Frobenius number, conductor and symmetry facts
    Analyze {
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Convert a set to its partition or a partition to its set
    Convert {
        input: String,
        #[arg(long = "as", value_enum)]
        input_as: Option<InputAs>,
    },
    /// Print the dual set
    Dual { set: String },
    /// Fold two or more sets (or partitions) with one kind of sum
    Sum {
        #[arg(long, value_parser = parse_kind)]
        kind: SumKind,
        #[arg(required = true, num_args = 2..)]
        operands: Vec<String>,
        #[arg(long = "as", value_enum)]
        input_as: Option<InputAs>,
    },
    /// Split a symmetric or almost symmetric set as S ⊞ middle ⊞ S*
    Decompose {
        set: String,
        #[arg(long)]
        json: bool,
        /// Choose S to be a numerical semigroup
        #[arg(long)]
        semigroup: bool,
    },
    /// Draw the Young diagram with hook lengths
    Render {
        input: String,
        #[arg(long, default_value = "ascii", value_parser = parse_format)]
        format: RenderFormat,
        #[arg(long = "as", value_enum)]
        input_as: Option<InputAs>,
    },
    /// List every set of a family up to a bound
    Enumerate {
        #[arg(long, default_value = "sets", value_parser = parse_set_kind)]
        kind: SetKind,
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long)]
        min_type: Option<usize>,
        #[arg(long)]
        max_type: Option<usize>,
        /// Keep only semigroups with a confined, consecutive pseudo-Frobenius block
        #[arg(long)]
        consecutive_pf: bool,
        /// Print only the number of sets
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check a structural property over every bounded instance
    Verify {
        /// A property name, or `all`
        theorem: String,
        #[arg(long, value_parser = parse_set_kind)]
        kind: Option<SetKind>,
        /// Bound for the property's default family
        #[arg(long, default_value_t = 10)]
        bound: u32,
        #[command(flatten)]
        limits: BoundArgs,
    },
}

#[derive(Args, Debug)]
struct BoundArgs {
    #[arg(long, conflicts_with = "max_genus")]
    max_conductor: Option<u32>,
    #[arg(long)]
    max_genus: Option<u32>,
    /// Lift the safety caps on conductor and genus
    #[arg(long)]
    no_cap: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputAs {
    Set,
    Partition,
}

fn parse_kind(s: &str) -> Result<SumKind, String> {
    s.parse()
        .map_err(|_| format!("unknown sum kind `{s}` (bonded, e2e, conjoint)"))
}

fn parse_format(s: &str) -> Result<RenderFormat, String> {
    s.parse()
        .map_err(|_| format!("unknown format `{s}` (ascii, ydiagram, hooks, json)"))
}

fn parse_set_kind(s: &str) -> Result<SetKind, String> {
    s.parse()
        .map_err(|_| format!("unknown kind `{s}` (sets, semigroups, symmetric, almost-symmetric)"))
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// Already reported; exit with status 1.
    Silent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(format!("{}: {e}", e.name())),
            _ => Failure::Domain(e),
        }
    }
}

enum Input {
    Set(NumericalSet),
    Partition(Partition),
}

fn read_input(text: &str, forced: Option<InputAs>) -> Result<Input, Failure> {
    let as_partition = match forced {
        Some(InputAs::Partition) => true,
        Some(InputAs::Set) => false,
        None => text.trim_start().starts_with('['),
    };
    Ok(if as_partition {
        Input::Partition(text.parse()?)
    } else {
        Input::Set(text.parse()?)
    })
}

/// Runs one invocation; returns the exit status (0 ok, 1 domain error,
/// 2 usage error).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
        Err(Failure::Silent) => 1,
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let text = match command {
        Command::Analyze { set, json } => {
            let r: NumericalSet = set.parse()?;
            if json {
                serde_json::to_string(&r.report()).expect("report serializes")
            } else {
                analyze_text(&r)
            }
        }
        Command::Convert { input, input_as } => match read_input(&input, input_as)? {
            Input::Set(r) => partition_of(&r)?.to_string(),
            Input::Partition(p) => numerical_set_of(&p)?.literal(),
        },
        Command::Dual { set } => {
            let r: NumericalSet = set.parse()?;
            r.dual()?.literal()
        }
        Command::Sum {
            kind,
            operands,
            input_as,
        } => sum_text(kind, &operands, input_as)?,
        Command::Decompose {
            set,
            json,
            semigroup,
        } => {
            let r: NumericalSet = set.parse()?;
            let d = decompose(&r, semigroup)?;
            if json {
                d.to_json()
            } else {
                d.to_string()
            }
        }
        Command::Render {
            input,
            format,
            input_as,
        } => match read_input(&input, input_as)? {
            Input::Set(r) => render(&r, format)?,
            Input::Partition(p) => render_partition(&p, format)?,
        },
        Command::Enumerate {
            kind,
            bound,
            min_type,
            max_type,
            consecutive_pf,
            count,
            json,
        } => {
            let (bound_type, value) = match (bound.max_conductor, bound.max_genus) {
                (Some(c), _) => (BoundType::Conductor, c),
                (None, Some(g)) => (BoundType::Genus, g),
                (None, None) => {
                    return Err(Failure::Usage(
                        "enumerate needs --max-conductor or --max-genus".into(),
                    ));
                }
            };
            let mut spec = EnumSpec::new(kind, bound_type, value);
            spec.min_type = min_type;
            spec.max_type = max_type;
            spec.consecutive_pf = consecutive_pf.then_some(true);
            spec.caps = caps(&bound, err);
            let sets = spec.instances()?;
            if count {
                sets.len().to_string()
            } else if json {
                serde_json::to_string(&sets).expect("sets serialize")
            } else {
                sets.iter()
                    .map(NumericalSet::literal)
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }
        Command::Verify {
            theorem,
            kind,
            bound,
            limits,
        } => {
            let theorems: Vec<TheoremId> = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let caps = caps(&limits, err);
            let mut failed = Vec::new();
            let mut lines = Vec::new();
            for t in theorems {
                let mut spec = t.default_spec(bound);
                if let Some(c) = limits.max_conductor {
                    spec.bound_type = BoundType::Conductor;
                    spec.bound = c;
                } else if let Some(g) = limits.max_genus {
                    spec.bound_type = BoundType::Genus;
                    spec.bound = g;
                }
                if let Some(k) = kind {
                    spec.kind = k;
                }
                spec.caps = caps;
                let report = census::verify(t, &spec)?;
                if !report.passed() {
                    failed.push(t.name());
                }
                lines.push(report.to_json());
            }
            writeln!(out, "{}", lines.join("\n")).map_err(io_failure)?;
            if !failed.is_empty() {
                let _ = writeln!(err, "verification failed: {}", failed.join(", "));
                return Err(Failure::Silent);
            }
            return Ok(());
        }
    };
    writeln!(out, "{text}").map_err(io_failure)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn caps(bound: &BoundArgs, err: &mut dyn Write) -> Caps {
    if bound.no_cap {
        let _ = writeln!(
            err,
            "warning: safety caps lifted; enumeration grows exponentially"
        );
        Caps::unlimited()
    } else {
        Caps::default()
    }
}

fn analyze_text(r: &NumericalSet) -> String {
    let rep = r.report();
    let join = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let mut lines = vec![
        format!("small elements: {}", join(&rep.small_elements)),
        format!("gaps: {}", join(&rep.gaps)),
        format!("genus: {}", rep.genus),
        format!("frobenius: {}", rep.frobenius),
        format!("conductor: {}", rep.conductor),
        format!("semigroup: {}", rep.is_semigroup),
        format!("symmetric: {}", rep.is_symmetric),
        format!("pseudo-symmetric: {}", rep.is_pseudo_symmetric),
        format!("almost symmetric: {}", rep.is_almost_symmetric),
    ];
    if let (Some(pf), Some(t)) = (&rep.pseudo_frobenius, rep.semigroup_type) {
        lines.push(format!("pseudo-frobenius: {}", join(pf)));
        lines.push(format!("type: {t}"));
    }
    lines.join("\n")
}

fn sum_text(
    kind: SumKind,
    operands: &[String],
    forced: Option<InputAs>,
) -> Result<String, Failure> {
    let inputs = operands
        .iter()
        .map(|o| read_input(o, forced))
        .collect::<Result<Vec<_>, _>>()?;
    let sets: Vec<NumericalSet> = inputs
        .iter()
        .filter_map(|i| match i {
            Input::Set(r) => Some(r.clone()),
            Input::Partition(_) => None,
        })
        .collect();
    if sets.len() == inputs.len() {
        return Ok(fold_sets(&sets, kind)?.literal());
    }
    if !sets.is_empty() {
        return Err(Failure::Usage("operands mix sets and partitions".into()));
    }
    let parts: Vec<Partition> = inputs
        .into_iter()
        .filter_map(|i| match i {
            Input::Partition(p) => Some(p),
            Input::Set(_) => None,
        })
        .collect();
    Ok(fold_partitions(&parts, kind)?.to_string())
}
