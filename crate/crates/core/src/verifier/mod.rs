//! Exhaustive (or seeded-sampled) checking of every approximation law over
//! a corpus of small groups, golden reproductions of worked examples, and
//! hunts for instances where an inclusion is strict or an equality breaks.

mod checks;
mod golden;
mod hunt;
mod instances;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;
use crate::set::ElementSet;

pub use hunt::{hunt, HuntProperty};
pub use instances::{GroupContext, Instance};

/// Named sets (labels) backing a verdict.
pub type Witness = BTreeMap<String, Vec<String>>;

const FAILURES_KEPT: usize = 20;

/// A checkable statement. Ids follow the numbering of the results they
/// encode, e.g. `Prop2.3`, `Thm8.1`, `FinalCor.2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Lemma1,
    Lemma10,
    Prop2(u8),
    Prop5(u8),
    Cor12,
    Lemma6,
    Thm3(u8),
    Prop4,
    DefRoughSubgroup,
    Cor14(u8),
    Thm19,
    Prop20,
    Cor17(u8),
    Thm8(u8),
    FinalCor(u8),
    Example13,
    Example22,
    ExampleQ8,
    ExampleA4,
}

/// What the H-part of an instance ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Any,
    Subgroup,
    NormalSubgroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Any,
    Nested,
    Subgroups,
}

/// Hypothesis shape of a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `N` alone.
    Normal,
    /// `N ⊆ H`.
    Single(Subject),
    /// `N ⊆ H1, H2`.
    Pair(PairKind),
    /// `N ⊆ M ⊆ H`.
    Nested(Subject),
    /// `N, M ⊆ H` with no relation between `N` and `M`.
    Joint(Subject),
    /// A fixed worked example.
    Golden,
}

impl Statement {
    /// Every law; excludes the worked examples.
    pub fn properties() -> Vec<Statement> {
        use Statement::*;
        let mut out = vec![Lemma1, Lemma10];
        out.extend((1..=7).map(Prop2));
        out.extend([Prop5(1), Prop5(2), Cor12, Lemma6, Thm3(1), Thm3(2), Prop4, DefRoughSubgroup]);
        out.extend((1..=5).map(Cor14));
        out.extend([Thm19, Prop20]);
        out.extend((1..=4).map(Cor17));
        out.extend((1..=4).map(Thm8));
        out.extend((1..=3).map(FinalCor));
        out
    }

    pub fn examples() -> Vec<Statement> {
        use Statement::*;
        vec![Example13, Example22, ExampleQ8, ExampleA4]
    }

    /// Comma-separated ids; `all` expands to every law, `examples` to the
    /// worked examples.
    pub fn parse_list(s: &str) -> Result<Vec<Statement>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => out.extend(Statement::properties()),
                "examples" => out.extend(Statement::examples()),
                _ => out.push(part.parse()?),
            }
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|s| seen.insert(*s));
        if out.is_empty() {
            return Err(Error::UnknownStatement(s.to_owned()));
        }
        Ok(out)
    }

    pub fn shape(self) -> Shape {
        use Statement::*;
        match self {
            Lemma1 => Shape::Normal,
            Prop2(1) | DefRoughSubgroup => Shape::Single(Subject::Any),
            Prop4 => Shape::Single(Subject::Subgroup),
            Lemma6 => Shape::Single(Subject::NormalSubgroup),
            Lemma10 | Prop2(6) | Prop2(7) => Shape::Pair(PairKind::Nested),
            Cor14(1..=3) => Shape::Pair(PairKind::Subgroups),
            Prop2(_) | Prop5(_) | Cor12 | Thm3(_) => Shape::Pair(PairKind::Any),
            Thm19 => Shape::Nested(Subject::Any),
            Thm8(_) => Shape::Nested(Subject::Subgroup),
            Cor17(_) => Shape::Joint(Subject::Any),
            Prop20 | Cor14(_) | FinalCor(_) => Shape::Joint(Subject::Subgroup),
            Example13 | Example22 | ExampleQ8 | ExampleA4 => Shape::Golden,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Statement::*;
        match self {
            Lemma1 => write!(f, "Lemma1"),
            Lemma10 => write!(f, "Lemma10"),
            Prop2(k) => write!(f, "Prop2.{k}"),
            Prop5(k) => write!(f, "Prop5.{k}"),
            Cor12 => write!(f, "Cor12"),
            Lemma6 => write!(f, "Lemma6"),
            Thm3(k) => write!(f, "Thm3.{k}"),
            Prop4 => write!(f, "Prop4"),
            DefRoughSubgroup => write!(f, "DefRoughSubgroup"),
            Cor14(k) => write!(f, "Cor14.{k}"),
            Thm19 => write!(f, "Thm19"),
            Prop20 => write!(f, "Prop20"),
            Cor17(k) => write!(f, "Cor17.{k}"),
            Thm8(k) => write!(f, "Thm8.{k}"),
            FinalCor(k) => write!(f, "FinalCor.{k}"),
            Example13 => write!(f, "Example13"),
            Example22 => write!(f, "Example22"),
            ExampleQ8 => write!(f, "ExampleQ8"),
            ExampleA4 => write!(f, "ExampleA4"),
        }
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::properties()
            .into_iter()
            .chain(Statement::examples())
            .find(|st| st.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownStatement(s.to_owned()))
    }
}

/// Outcome of one check. `Strict` is a pass where an inclusion is proper
/// (or an optional stronger reading fails); it carries the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Strict(Witness),
    Fail(Witness),
    NotApplicable,
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Pass => VerdictKind::Pass,
            Verdict::Strict(_) => VerdictKind::Strict,
            Verdict::Fail(_) => VerdictKind::Fail,
            Verdict::NotApplicable => VerdictKind::NotApplicable,
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    /// Conjunction: failure wins, then strictness.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail(mut a), Fail(b)) => {
                a.extend(b);
                Fail(a)
            }
            (Fail(a), _) | (_, Fail(a)) => Fail(a),
            (Strict(mut a), Strict(b)) => {
                a.extend(b);
                Strict(a)
            }
            (Strict(a), _) | (_, Strict(a)) => Strict(a),
            (NotApplicable, NotApplicable) => NotApplicable,
            _ => Pass,
        }
    }

    fn into_parts(self) -> (VerdictKind, Witness) {
        match self {
            Verdict::Strict(w) => (VerdictKind::Strict, w),
            Verdict::Fail(w) => (VerdictKind::Fail, w),
            v => (v.kind(), Witness::new()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    Pass,
    Strict,
    Fail,
    NotApplicable,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Pass => "pass",
            VerdictKind::Strict => "strict",
            VerdictKind::Fail => "fail",
            VerdictKind::NotApplicable => "not-applicable",
        })
    }
}

/// One (statement, instance) result with its sets spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub statement: String,
    pub group: String,
    #[serde(rename = "N")]
    pub n: Vec<String>,
    #[serde(rename = "H1", default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<Vec<String>>,
    #[serde(rename = "H2", default, skip_serializing_if = "Option::is_none")]
    pub h2: Option<Vec<String>>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<String>>,
    pub verdict: VerdictKind,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: Witness,
}

impl CheckReport {
    pub(crate) fn new(g: &FiniteGroup, statement: Statement, inst: &Instance, verdict: Verdict) -> Self {
        let labels = |s: &Option<ElementSet>| s.as_ref().map(|s| g.set_labels(s));
        let (verdict, witness) = verdict.into_parts();
        CheckReport {
            statement: statement.to_string(),
            group: g.name().to_owned(),
            n: g.set_labels(&inst.n),
            h1: labels(&inst.h1),
            h2: labels(&inst.h2),
            m: labels(&inst.m),
            verdict,
            witness,
        }
    }
}

/// Aggregate for one statement over the whole corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementSummary {
    pub statement: String,
    pub instances: usize,
    pub pass: usize,
    pub strict: usize,
    pub fail: usize,
    pub not_applicable: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_strict: Option<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<CheckReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl StatementSummary {
    fn new(statement: Statement) -> Self {
        StatementSummary {
            statement: statement.to_string(),
            instances: 0,
            pass: 0,
            strict: 0,
            fail: 0,
            not_applicable: 0,
            first_strict: None,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, report: impl FnOnce(Verdict) -> CheckReport, verdict: Verdict) {
        self.instances += 1;
        match verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Strict(_) => {
                self.strict += 1;
                if self.first_strict.is_none() {
                    self.first_strict = Some(report(verdict));
                }
            }
            Verdict::Fail(_) => {
                self.fail += 1;
                if self.failures.len() < FAILURES_KEPT {
                    self.failures.push(report(verdict));
                }
            }
        }
    }

    fn merge(&mut self, other: StatementSummary) {
        self.instances += other.instances;
        self.pass += other.pass;
        self.strict += other.strict;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
        if self.first_strict.is_none() {
            self.first_strict = other.first_strict;
        }
        let room = FAILURES_KEPT.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.elapsed += other.elapsed;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub corpus: Vec<String>,
    pub seed: u64,
    pub statements: Vec<StatementSummary>,
    pub total_instances: usize,
    pub total_failures: usize,
}

impl SuiteReport {
    pub fn is_success(&self) -> bool {
        self.total_failures == 0
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.statements.iter().flat_map(|s| s.failures.first()).next()
    }

    pub fn summary(&self, statement: Statement) -> Option<&StatementSummary> {
        let id = statement.to_string();
        self.statements.iter().find(|s| s.statement == id)
    }
}

/// Run `statements` over every group of `corpus`. Work is split into
/// (statement, group, N[, M]) units, evaluated under `exec`, and merged back
/// in unit order, so the report does not depend on the execution mode.
pub fn run_suite(
    corpus: &[FiniteGroup],
    statements: &[Statement],
    exec: Execution,
    seed: u64,
) -> Result<SuiteReport> {
    let contexts = exec
        .map(corpus, |g| GroupContext::with(g, exec))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut units = Vec::new();
    for &st in statements {
        for (gi, ctx) in contexts.iter().enumerate() {
            for unit in ctx.units(st) {
                units.push((st, gi, unit));
            }
        }
    }
    let tallies = exec.map(&units, |&(st, gi, unit)| {
        let ctx = &contexts[gi];
        let start = Instant::now();
        let mut tally = StatementSummary::new(st);
        for inst in ctx.unit_instances(st, unit, seed) {
            let verdict = ctx.evaluate(st, &inst);
            tally.record(|v| CheckReport::new(&ctx.group, st, &inst, v), verdict);
        }
        tally.elapsed = start.elapsed();
        tally
    });
    let mut summaries: Vec<StatementSummary> =
        statements.iter().map(|&st| StatementSummary::new(st)).collect();
    for ((st, _, _), tally) in units.iter().zip(tallies) {
        let i = statements.iter().position(|s| s == st).expect("unit statement listed");
        summaries[i].merge(tally);
    }
    Ok(SuiteReport {
        corpus: corpus.iter().map(|g| g.name().to_owned()).collect(),
        seed,
        total_instances: summaries.iter().map(|s| s.instances).sum(),
        total_failures: summaries.iter().map(|s| s.fail).sum(),
        statements: summaries,
    })
}

/// Every instance of `statement`'s shape in `g`, in canonical order.
pub fn enumerate_instances(g: &FiniteGroup, statement: Statement, seed: u64) -> Result<Vec<Instance>> {
    let ctx = GroupContext::new(g)?;
    Ok(ctx.instances(statement, seed))
}

/// Check a single instance; it must match the statement's shape.
pub fn check(g: &FiniteGroup, statement: Statement, inst: &Instance) -> Result<CheckReport> {
    GroupContext::new(g)?.check(statement, inst)
}
