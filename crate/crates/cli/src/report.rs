//! Output records and their text rendering. JSON output goes through
//! `serde_json::Value`, so keys come out sorted and re-rendering parsed
//! output reproduces it exactly.

use std::fmt::Write;

use roughgroup::homomorphism::{HomReport, Theorem8Data};
use roughgroup::verifier::{CheckReport, SuiteReport};
use roughgroup::{ApproximationSpace, FiniteGroup, RoughClassification, RoughPairReport};
use serde::{Deserialize, Serialize};

pub trait Render {
    fn render(&self) -> String;
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    serde_json::to_string_pretty(&serde_json::to_value(value)?)
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

/// Left-aligned columns, two spaces apart.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(line, "{cell:<w$}  ");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn field(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<12}{value}");
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub elements: Vec<String>,
    pub subgroup_count: usize,
    pub normal_subgroups: Vec<Vec<String>>,
    pub class_sizes: Vec<usize>,
}

impl GroupSummary {
    pub fn of(g: &FiniteGroup) -> roughgroup::Result<Self> {
        Ok(GroupSummary {
            name: g.name().to_owned(),
            order: g.order(),
            abelian: g.is_abelian(),
            elements: g.labels().to_vec(),
            subgroup_count: g.all_subgroups()?.len(),
            normal_subgroups: g.normal_subgroups()?.iter().map(|s| g.set_labels(s)).collect(),
            class_sizes: g.conjugacy_classes().iter().map(|c| c.len()).collect(),
        })
    }
}

impl Render for GroupSummary {
    fn render(&self) -> String {
        let mut out = String::new();
        field(&mut out, "group", &self.name);
        field(&mut out, "order", self.order);
        field(&mut out, "abelian", self.abelian);
        field(&mut out, "elements", self.elements.join(" "));
        field(&mut out, "subgroups", self.subgroup_count);
        field(&mut out, "classes", format!("{:?}", self.class_sizes));
        let _ = writeln!(out, "normal subgroups ({}):", self.normal_subgroups.len());
        let rows: Vec<Vec<String>> = self
            .normal_subgroups
            .iter()
            .map(|s| vec![format!("  order {}", s.len()), braces(s)])
            .collect();
        out.push_str(&table(&rows));
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ApproxOutput {
    pub group: String,
    pub normal: Vec<String>,
    pub quotient: Vec<String>,
    pub classes: Vec<Vec<String>>,
    #[serde(flatten)]
    pub pair: RoughPairReport,
}

impl ApproxOutput {
    pub fn of(g: &FiniteGroup, space: &ApproximationSpace, pair: &RoughPairReport) -> Self {
        let q = space.group();
        ApproxOutput {
            group: g.name().to_owned(),
            normal: g.set_labels(space.quotient.normal()),
            quotient: q.labels().to_vec(),
            classes: space.classes().iter().map(|c| q.set_labels(c)).collect(),
            pair: pair.clone(),
        }
    }
}

impl Render for ApproxOutput {
    fn render(&self) -> String {
        let mut out = String::new();
        field(&mut out, "group", &self.group);
        field(&mut out, "N", braces(&self.normal));
        field(&mut out, "G/N", braces(&self.quotient));
        let classes: Vec<String> = self.classes.iter().map(|c| braces(c)).collect();
        field(&mut out, "classes", classes.join(" "));
        field(&mut out, "H/N", braces(&self.pair.subject));
        field(&mut out, "lower", braces(&self.pair.lower));
        field(&mut out, "upper", braces(&self.pair.upper));
        field(&mut out, "rough", self.pair.is_rough);
        out.push_str(&flags(&self.pair.flags));
        out
    }
}

fn flags(c: &RoughClassification) -> String {
    let mut out = String::new();
    field(&mut out, "lower", format!("subgroup={} normal={}", c.lower_is_subgroup, c.lower_is_normal));
    field(&mut out, "upper", format!("subgroup={} normal={}", c.upper_is_subgroup, c.upper_is_normal));
    let labels = if c.labels.is_empty() { "none".to_owned() } else { c.labels.join(", ") };
    field(&mut out, "kinds", labels);
    out
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub subject: Vec<String>,
    #[serde(flatten)]
    pub classification: RoughClassification,
}

impl ClassifyOutput {
    pub fn of(pair: &RoughPairReport) -> Self {
        ClassifyOutput { subject: pair.subject.clone(), classification: pair.flags.clone() }
    }
}

impl Render for ClassifyOutput {
    fn render(&self) -> String {
        let mut out = String::new();
        field(&mut out, "H/N", braces(&self.subject));
        field(&mut out, "rough", self.classification.is_rough);
        out.push_str(&flags(&self.classification));
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Thm8Output {
    pub group: String,
    #[serde(rename = "K")]
    pub k: Vec<String>,
    #[serde(rename = "T")]
    pub t: Vec<String>,
    pub psi1: HomReport,
    pub psi2: HomReport,
    pub phi: HomReport,
    #[serde(rename = "M/N")]
    pub m_mod_n: Vec<String>,
    pub k_mod_m_to_t_mod_m: HomReport,
}

impl Thm8Output {
    pub fn of(g: &FiniteGroup, d: &Theorem8Data) -> Self {
        Thm8Output {
            group: g.name().to_owned(),
            k: g.set_labels(&d.k),
            t: g.set_labels(&d.t),
            psi1: d.psi1.report(),
            psi2: d.psi2.report(),
            phi: d.phi.report(),
            m_mod_n: d.phi.source().set_labels(&d.phi_expected_kernel),
            k_mod_m_to_t_mod_m: d.k_mod_m_to_t_mod_m.report(),
        }
    }
}

impl Render for Thm8Output {
    fn render(&self) -> String {
        let mut out = String::new();
        field(&mut out, "group", &self.group);
        field(&mut out, "K", braces(&self.k));
        field(&mut out, "T", braces(&self.t));
        let rows: Vec<Vec<String>> = [
            ("psi1", &self.psi1),
            ("psi2", &self.psi2),
            ("phi", &self.phi),
            ("K/M→T/M", &self.k_mod_m_to_t_mod_m),
        ]
        .iter()
        .map(|(name, h)| {
            vec![
                name.to_string(),
                format!("{} → {}", h.source, h.target),
                format!("onto={}", h.surjective),
                format!("kernel {}", braces(&h.kernel)),
            ]
        })
        .collect();
        out.push_str(&table(&rows));
        field(&mut out, "M/N", braces(&self.m_mod_n));
        out
    }
}

fn check_lines(out: &mut String, r: &CheckReport) {
    let _ = writeln!(out, "  {} in {}: {}", r.statement, r.group, r.verdict);
    let sets = [("N", Some(&r.n)), ("M", r.m.as_ref()), ("H1", r.h1.as_ref()), ("H2", r.h2.as_ref())];
    for (name, s) in sets {
        if let Some(s) = s {
            let _ = writeln!(out, "    {name:<4}{}", braces(s));
        }
    }
    for (k, v) in &r.witness {
        let _ = writeln!(out, "    {k}: {}", braces(v));
    }
}

impl Render for SuiteReport {
    fn render(&self) -> String {
        let mut rows = vec![["statement", "instances", "pass", "strict", "fail", "n/a"].map(String::from).to_vec()];
        for s in &self.statements {
            rows.push(vec![
                s.statement.clone(),
                s.instances.to_string(),
                s.pass.to_string(),
                s.strict.to_string(),
                s.fail.to_string(),
                s.not_applicable.to_string(),
            ]);
        }
        let mut out = format!("corpus: {}\nseed: {}\n", self.corpus.join(", "), self.seed);
        out.push_str(&table(&rows));
        let failures: Vec<&CheckReport> = self.statements.iter().flat_map(|s| &s.failures).collect();
        if !failures.is_empty() {
            out.push_str("failures:\n");
            for r in failures {
                check_lines(&mut out, r);
            }
        }
        let _ = writeln!(out, "{} instances, {} failures", self.total_instances, self.total_failures);
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HuntOutput {
    pub property: String,
    pub total: usize,
    pub witnesses: Vec<CheckReport>,
}

impl Render for HuntOutput {
    fn render(&self) -> String {
        let mut out = format!("{}: {} witnesses\n", self.property, self.total);
        for r in &self.witnesses {
            check_lines(&mut out, r);
        }
        if self.witnesses.len() < self.total {
            let _ = writeln!(out, "  ... {} more", self.total - self.witnesses.len());
        }
        out
    }
}
