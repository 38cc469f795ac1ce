use std::fmt;
use std::str::FromStr;

use super::checks::{cor12_equalities, evaluate, included, View};
use super::{CheckReport, GroupContext, Instance, Statement, Verdict, VerdictKind, Witness};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;

/// A non-equality or failing stronger reading to search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HuntProperty {
    /// Subgroup `H ⊇ N` whose upper approximation is not a subgroup.
    UpperNotSubgroup,
    /// `lower(H1/N) ∪ lower(H2/N) ⊊ lower((H1∪H2)/N)`
    LowerUnionStrict,
    /// `upper(H1/N ∩ H2/N) ⊊ upper(H1/N) ∩ upper(H2/N)`
    UpperIntersectionStrict,
    /// `lower(H1/N)·lower(H2/N) ⊊ lower((H1H2)/N)`
    LowerProductStrict,
    /// `upper((H1∩H2)/N) ⊊ upper(H1/N ∩ H2/N)`
    Prop51Strict,
    /// Intersection equalities failing for subjects that are not both subgroups.
    Cor12FailsWithoutSubgroups,
    /// Upper-approximation reading of the fourth equivalent condition failing.
    Prop204UpperReadingFails,
}

impl HuntProperty {
    pub fn all() -> [HuntProperty; 7] {
        use HuntProperty::*;
        [
            UpperNotSubgroup,
            LowerUnionStrict,
            UpperIntersectionStrict,
            LowerProductStrict,
            Prop51Strict,
            Cor12FailsWithoutSubgroups,
            Prop204UpperReadingFails,
        ]
    }

    pub fn name(self) -> &'static str {
        use HuntProperty::*;
        match self {
            UpperNotSubgroup => "upper-not-subgroup",
            LowerUnionStrict => "lower-union-strict",
            UpperIntersectionStrict => "upper-intersection-strict",
            LowerProductStrict => "lower-product-strict",
            Prop51Strict => "prop5-1-strict",
            Cor12FailsWithoutSubgroups => "cor12-fails-without-subgroups",
            Prop204UpperReadingFails => "prop20-4-upper-reading-fails",
        }
    }

    /// Statement whose instance shape the hunt scans.
    fn scan(self) -> Statement {
        use HuntProperty::*;
        match self {
            UpperNotSubgroup => Statement::Prop4,
            LowerUnionStrict => Statement::Prop2(3),
            UpperIntersectionStrict | Prop51Strict => Statement::Prop5(1),
            LowerProductStrict => Statement::Thm3(2),
            Cor12FailsWithoutSubgroups => Statement::Cor12,
            Prop204UpperReadingFails => Statement::Prop20,
        }
    }

    fn verdict_kind(self) -> VerdictKind {
        use HuntProperty::*;
        match self {
            UpperNotSubgroup | Cor12FailsWithoutSubgroups | Prop204UpperReadingFails => VerdictKind::Fail,
            _ => VerdictKind::Strict,
        }
    }

    fn probe(self, ctx: &GroupContext, inst: &Instance) -> Option<Witness> {
        use HuntProperty::*;
        let strict = |v: Verdict| match v {
            Verdict::Strict(w) => Some(w),
            _ => None,
        };
        let v = View::of(ctx, &inst.n);
        let qg = v.qg();
        match self {
            UpperNotSubgroup => {
                let hn = v.proj(&inst.h1?);
                let up = v.upper(&hn);
                (!qg.is_subgroup(&up)).then(|| super::checks::witness([
                    ("H/N", qg.set_labels(&hn)),
                    ("upper(H/N)", qg.set_labels(&up)),
                ]))
            }
            LowerUnionStrict | LowerProductStrict | Prop204UpperReadingFails => {
                strict(evaluate(ctx, self.scan(), inst))
            }
            UpperIntersectionStrict | Prop51Strict => {
                let (h1, h2) = (inst.h1?, inst.h2?);
                let (h1n, h2n) = (v.proj(&h1), v.proj(&h2));
                let a = v.upper_of(&h1.and(&h2));
                let b = v.upper(&h1n.and(&h2n));
                if self == Prop51Strict {
                    strict(included(qg, "upper((H1∩H2)/N)", &a, "upper(H1/N∩H2/N)", &b))
                } else {
                    let c = v.upper(&h1n).and(&v.upper(&h2n));
                    strict(included(qg, "upper(H1/N∩H2/N)", &b, "upper(H1/N)∩upper(H2/N)", &c))
                }
            }
            Cor12FailsWithoutSubgroups => {
                let (h1, h2) = (inst.h1?, inst.h2?);
                if ctx.is_subgroup(&h1) && ctx.is_subgroup(&h2) {
                    return None;
                }
                match cor12_equalities(&v, &h1, &h2) {
                    Verdict::Fail(w) => Some(w),
                    _ => None,
                }
            }
        }
    }
}

impl fmt::Display for HuntProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HuntProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HuntProperty::all()
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::UnknownProperty(s.to_owned()))
    }
}

/// Every scanned instance exhibiting `property`, smallest group first, then
/// in enumeration order.
pub fn hunt(property: HuntProperty, corpus: &[FiniteGroup], exec: Execution, seed: u64) -> Result<Vec<CheckReport>> {
    let mut order: Vec<&FiniteGroup> = corpus.iter().collect();
    order.sort_by_key(|g| g.order());
    let contexts = exec
        .map(&order, |g| GroupContext::with(g, exec))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let st = property.scan();
    let units: Vec<_> = contexts
        .iter()
        .enumerate()
        .flat_map(|(gi, ctx)| ctx.units(st).into_iter().map(move |u| (gi, u)))
        .collect();
    let found = exec.map(&units, |&(gi, unit)| {
        let ctx = &contexts[gi];
        ctx.unit_instances(st, unit, seed)
            .into_iter()
            .filter_map(|inst| {
                let w = property.probe(ctx, &inst)?;
                let mut r = CheckReport::new(&ctx.group, st, &inst, Verdict::Pass);
                r.statement = property.name().to_owned();
                r.verdict = property.verdict_kind();
                r.witness = w;
                Some(r)
            })
            .collect::<Vec<_>>()
    });
    Ok(found.into_iter().flatten().collect())
}
