//! `roughgroup`: build groups, compute rough approximations in quotient
//! groups, check the nested-quotient maps, run the statement suite and hunt
//! strictness witnesses.
//!
//! Exit codes: 0 success, 1 a verification failure or unmet expectation,
//! 2 bad input.

mod report;

use std::io::{ErrorKind, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use roughgroup::catalog::{all_small, build_all, standard_corpus, Builtin};
use roughgroup::group_file::GroupSpec;
use roughgroup::homomorphism::theorem8_data;
use roughgroup::verifier::{hunt, run_suite, HuntProperty, Statement};
use roughgroup::{builtin_group, ApproximationSpace, ElementSet, Execution, FiniteGroup};
use serde::Serialize;

use report::{ApproxOutput, ClassifyOutput, GroupSummary, HuntOutput, Render, Thm8Output};

#[derive(Parser)]
#[command(name = "roughgroup", version, about = "Rough approximations in quotient groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, normal subgroups and conjugacy classes of a group.
    Group {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Lower and upper approximations of H/N in G/N.
    Approx {
        #[command(flatten)]
        subject: SubjectArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rough-subgroup classification of H/N.
    Classify {
        #[command(flatten)]
        subject: SubjectArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Maps between the lower approximations for N ⊆ M ⊆ H.
    Thm8 {
        #[command(flatten)]
        group: GroupArg,
        /// Inner normal subgroup.
        #[arg(long)]
        n: String,
        /// Outer normal subgroup containing N.
        #[arg(long)]
        m: String,
        /// Subgroup containing M.
        #[arg(long)]
        h: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run statement checks over a corpus.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated statement ids, `all` or `examples`.
        #[arg(long, default_value = "all")]
        statements: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search a corpus for instances where a non-equality is strict.
    Hunt {
        #[arg(long)]
        property: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Print at most this many witnesses.
        #[arg(long)]
        limit: Option<usize>,
        /// Exit 1 unless witnesses were (`some`) or were not (`none`) found.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Group file (JSON) or catalog name such as `symmetric4`.
    #[arg(long, alias = "builtin")]
    group: String,
}

#[derive(Args)]
struct SubjectArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Normal subgroup N as comma-separated labels or a JSON list.
    #[arg(long)]
    normal: String,
    /// Subset H ⊇ N.
    #[arg(long)]
    subset: String,
}

#[derive(Args)]
struct CorpusArgs {
    /// Comma-separated catalog names; defaults to the standard corpus.
    #[arg(long, conflicts_with = "all_small")]
    corpus: Option<String>,
    /// Every catalog group up to this order.
    #[arg(long)]
    all_small: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Some,
    None,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Group { group, out } => {
            let g = load_group(&group.group)?;
            emit(&GroupSummary::of(&g)?, out.format)?;
            Ok(true)
        }
        Command::Approx { subject, out } => {
            let (g, space, h) = load_subject(&subject)?;
            let hn = space.project(&h)?;
            emit(&ApproxOutput::of(&g, &space, &space.report(&hn)?), out.format)?;
            Ok(true)
        }
        Command::Classify { subject, out } => {
            let (_, space, h) = load_subject(&subject)?;
            let hn = space.project(&h)?;
            emit(&ClassifyOutput::of(&space.report(&hn)?), out.format)?;
            Ok(true)
        }
        Command::Thm8 { group, n, m, h, out } => {
            let g = load_group(&group.group)?;
            let (n, m, h) = (parse_set(&g, &n)?, parse_set(&g, &m)?, parse_set(&g, &h)?);
            let data = theorem8_data(&g, &n, &m, &h)?;
            emit(&Thm8Output::of(&g, &data), out.format)?;
            Ok(true)
        }
        Command::Verify { corpus, statements, seed, sequential, out } => {
            let groups = load_corpus(&corpus)?;
            let statements = Statement::parse_list(&statements)?;
            let exec = if sequential { Execution::Sequential } else { Execution::Parallel };
            let report = run_suite(&groups, &statements, exec, seed)?;
            emit(&report, out.format)?;
            Ok(report.is_success())
        }
        Command::Hunt { property, corpus, limit, expect, seed, out } => {
            let property: HuntProperty = property.parse()?;
            let groups = load_corpus(&corpus)?;
            let found = hunt(property, &groups, Execution::Parallel, seed)?;
            let total = found.len();
            let shown = found.into_iter().take(limit.unwrap_or(usize::MAX)).collect();
            emit(&HuntOutput { property: property.to_string(), total, witnesses: shown }, out.format)?;
            Ok(match expect {
                Some(Expect::Some) => total > 0,
                Some(Expect::None) => total == 0,
                None => true,
            })
        }
    }
}

fn emit<T: Serialize + Render>(value: &T, format: Format) -> Result<(), Failure> {
    let text = match format {
        Format::Json => report::to_json(value)? + "\n",
        Format::Text => value.render(),
    };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn load_group(arg: &str) -> Result<FiniteGroup, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{arg}: {e}")))?;
        let spec = GroupSpec::from_json(&text)?;
        let g = spec.build()?;
        if matches!(spec, GroupSpec::Builtin { .. }) {
            return Ok(g);
        }
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
        return Ok(g.renamed(stem));
    }
    Ok(builtin_group(arg)?)
}

fn load_corpus(args: &CorpusArgs) -> Result<Vec<FiniteGroup>, Failure> {
    let list: Vec<Builtin> = match (&args.corpus, args.all_small) {
        (_, Some(max)) => all_small(max),
        (Some(names), None) => {
            return split_labels(names)
                .iter()
                .map(|name| load_group(name))
                .collect();
        }
        (None, None) => standard_corpus(),
    };
    Ok(build_all(&list)?)
}

fn load_subject(args: &SubjectArgs) -> Result<(FiniteGroup, ApproximationSpace, ElementSet), Failure> {
    let g = load_group(&args.group.group)?;
    let n = parse_set(&g, &args.normal)?;
    let h = parse_set(&g, &args.subset)?;
    let space = ApproximationSpace::from_normal(&g, &n)?;
    Ok((g, space, h))
}

/// Labels separated by commas outside parentheses, or a JSON string list.
fn split_labels(text: &str) -> Vec<String> {
    let text = text.trim();
    if text.starts_with('[') {
        if let Ok(list) = serde_json::from_str::<Vec<String>>(text) {
            return list;
        }
    }
    let text = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text);
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_owned()).filter(|s| !s.is_empty()).collect()
}

fn parse_set(g: &FiniteGroup, text: &str) -> Result<ElementSet, Failure> {
    Ok(g.parse_set(&split_labels(text))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_lists() {
        assert_eq!(split_labels("I, (12)(34),(13)(24)"), ["I", "(12)(34)", "(13)(24)"]);
        assert_eq!(split_labels(r#"["1","-1"]"#), ["1", "-1"]);
        assert_eq!(split_labels("{(0,1),(1,0)}"), ["(0,1)", "(1,0)"]);
        assert!(split_labels("").is_empty());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
