use super::{golden, GroupContext, Instance, Statement, Verdict, Witness};
use crate::approximation::{ApproximationSpace, RoughClassification, RoughPair};
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::homomorphism::{corollary_chain_with, theorem8_with};
use crate::set::ElementSet;

/// One quotient `G/N` seen from the parent group.
pub(super) struct View<'a> {
    pub space: &'a ApproximationSpace,
}

impl<'a> View<'a> {
    pub fn of(ctx: &'a GroupContext, n: &ElementSet) -> Self {
        View { space: ctx.space(n) }
    }

    pub fn qg(&self) -> &FiniteGroup {
        &self.space.quotient.group
    }

    pub fn proj(&self, h: &ElementSet) -> ElementSet {
        self.space.quotient.project_unchecked(h)
    }

    pub fn lower(&self, s: &ElementSet) -> ElementSet {
        self.space.lower_unchecked(s)
    }

    pub fn upper(&self, s: &ElementSet) -> ElementSet {
        self.space.upper_unchecked(s)
    }

    pub fn lower_of(&self, h: &ElementSet) -> ElementSet {
        self.lower(&self.proj(h))
    }

    pub fn upper_of(&self, h: &ElementSet) -> ElementSet {
        self.upper(&self.proj(h))
    }

    pub fn product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        self.qg().product_unchecked(a, b)
    }

    /// Is the coset of parent element `x` in quotient set `s`?
    pub fn holds(&self, s: &ElementSet, x: usize) -> bool {
        s.contains(self.space.quotient.coset_of(x))
    }
}

pub(super) fn witness<const K: usize>(entries: [(&str, Vec<String>); K]) -> Witness {
    entries.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

pub(super) fn note(text: impl Into<String>) -> Vec<String> {
    vec![text.into()]
}

/// `a ⊆ b`, strict when proper.
pub(super) fn included(g: &FiniteGroup, a_name: &str, a: &ElementSet, b_name: &str, b: &ElementSet) -> Verdict {
    if !a.subset_of(b) {
        Verdict::Fail(witness([
            (a_name, g.set_labels(a)),
            (b_name, g.set_labels(b)),
            ("missing", g.set_labels(&a.and_not(b))),
        ]))
    } else if a == b {
        Verdict::Pass
    } else {
        Verdict::Strict(witness([(a_name, g.set_labels(a)), (b_name, g.set_labels(b))]))
    }
}

pub(super) fn equal(g: &FiniteGroup, a_name: &str, a: &ElementSet, b_name: &str, b: &ElementSet) -> Verdict {
    if a == b {
        Verdict::Pass
    } else {
        Verdict::Fail(witness([(a_name, g.set_labels(a)), (b_name, g.set_labels(b))]))
    }
}

fn normal_in(g: &FiniteGroup, name: &str, s: &ElementSet) -> Verdict {
    if g.is_normal(s) {
        Verdict::Pass
    } else {
        let reason = if g.is_subgroup(s) { "not normal" } else { "not a subgroup" };
        Verdict::Fail(witness([(name, g.set_labels(s)), ("reason", note(format!("{reason} in {}", g.name())))]))
    }
}

fn labels_x(g: &FiniteGroup, x: usize) -> Vec<String> {
    vec![g.label(x).to_owned()]
}

pub(super) fn evaluate(ctx: &GroupContext, st: Statement, inst: &Instance) -> Verdict {
    use Statement::*;
    let g = &ctx.group;
    let v = View::of(ctx, &inst.n);
    let qg = v.qg();
    let h1 = inst.h1.unwrap_or(inst.n);
    let h2 = inst.h2.unwrap_or(h1);
    let (h1n, h2n) = (v.proj(&h1), v.proj(&h2));
    match st {
        Lemma1 => lemma1(&v),
        Prop2(1) => {
            let (lo, up) = (v.lower(&h1n), v.upper(&h1n));
            if lo.is_empty() {
                return Verdict::Fail(witness([("lower(H/N)", Vec::new())]));
            }
            included(qg, "lower(H/N)", &lo, "H/N", &h1n).and(included(qg, "H/N", &h1n, "upper(H/N)", &up))
        }
        Prop2(2) => {
            let lhs = v.upper_of(&h1.or(&h2));
            let rhs = v.upper(&h1n).or(&v.upper(&h2n));
            equal(qg, "upper((H1∪H2)/N)", &lhs, "upper(H1/N)∪upper(H2/N)", &rhs)
        }
        Prop2(3) => {
            let lhs = v.lower(&h1n).or(&v.lower(&h2n));
            let rhs = v.lower_of(&h1.or(&h2));
            included(qg, "lower(H1/N)∪lower(H2/N)", &lhs, "lower((H1∪H2)/N)", &rhs)
        }
        Prop2(4) => {
            let lhs = v.upper_of(&h1.or(&h2));
            let rhs = v.upper(&h1n.or(&h2n));
            equal(qg, "upper((H1∪H2)/N)", &lhs, "upper(H1/N∪H2/N)", &rhs)
        }
        Prop2(5) => {
            let lhs = v.lower_of(&h1.or(&h2));
            let rhs = v.lower(&h1n.or(&h2n));
            equal(qg, "lower((H1∪H2)/N)", &lhs, "lower(H1/N∪H2/N)", &rhs)
        }
        Prop2(6) | Prop2(7) => {
            if !h1.subset_of(&h2) {
                return Verdict::NotApplicable;
            }
            if st == Prop2(6) {
                included(qg, "lower(H1/N)", &v.lower(&h1n), "lower(H2/N)", &v.lower(&h2n))
            } else {
                included(qg, "upper(H1/N)", &v.upper(&h1n), "upper(H2/N)", &v.upper(&h2n))
            }
        }
        Lemma10 => {
            if !h1n.subset_of(&h2n) {
                return Verdict::NotApplicable;
            }
            included(qg, "lower(H1/N)", &v.lower(&h1n), "lower(H2/N)", &v.lower(&h2n))
                .and(included(qg, "upper(H1/N)", &v.upper(&h1n), "upper(H2/N)", &v.upper(&h2n)))
        }
        Prop5(1) => {
            let a = v.upper_of(&h1.and(&h2));
            let b = v.upper(&h1n.and(&h2n));
            let c = v.upper(&h1n).and(&v.upper(&h2n));
            included(qg, "upper((H1∩H2)/N)", &a, "upper(H1/N∩H2/N)", &b)
                .and(included(qg, "upper(H1/N∩H2/N)", &b, "upper(H1/N)∩upper(H2/N)", &c))
        }
        Prop5(2) => {
            let a = v.lower_of(&h1.and(&h2));
            let b = v.lower(&h1n.and(&h2n));
            let c = v.lower(&h1n).and(&v.lower(&h2n));
            included(qg, "lower((H1∩H2)/N)", &a, "lower(H1/N∩H2/N)", &b)
                .and(equal(qg, "lower(H1/N∩H2/N)", &b, "lower(H1/N)∩lower(H2/N)", &c))
        }
        Cor12 => {
            if !(ctx.is_subgroup(&h1) && ctx.is_subgroup(&h2)) {
                return Verdict::NotApplicable;
            }
            cor12_equalities(&v, &h1, &h2)
        }
        Lemma6 => {
            let (lo, up) = (v.lower(&h1n), v.upper(&h1n));
            equal(qg, "lower(H/N)", &lo, "H/N", &h1n).and(equal(qg, "H/N", &h1n, "upper(H/N)", &up))
        }
        Thm3(1) => {
            let lhs = v.upper_of(&g.product_unchecked(&h1, &h2));
            let rhs = v.product(&v.upper(&h1n), &v.upper(&h2n));
            included(qg, "upper((H1H2)/N)", &lhs, "upper(H1/N)upper(H2/N)", &rhs)
        }
        Thm3(2) => {
            let lhs = v.product(&v.lower(&h1n), &v.lower(&h2n));
            let rhs = v.lower_of(&g.product_unchecked(&h1, &h2));
            included(qg, "lower(H1/N)lower(H2/N)", &lhs, "lower((H1H2)/N)", &rhs)
        }
        Prop4 => normal_in(qg, "lower(H/N)", &v.lower(&h1n)),
        DefRoughSubgroup => rough_labels(&v, &h1n),
        Cor14(1) => normal_in(qg, "lower(H1/N)lower(H2/N)", &v.product(&v.lower(&h1n), &v.lower(&h2n))),
        Cor14(2) => normal_in(qg, "lower(H1/N)∩lower(H2/N)", &v.lower(&h1n).and(&v.lower(&h2n))),
        Cor14(3) => normal_in(qg, "lower((H1∩H2)/N)", &v.lower_of(&h1.and(&h2))),
        Cor14(4) | Cor14(5) => {
            let m = inst.m.expect("triple");
            let k = if st == Cor14(4) { g.product_unchecked(&inst.n, &m) } else { inst.n.and(&m) };
            let w = View::of(ctx, &k);
            normal_in(w.qg(), "lower(H1/K)", &w.lower_of(&h1))
        }
        Thm19 => thm19(ctx, inst),
        Prop20 => prop20(ctx, inst),
        Cor17(k) => cor17(ctx, inst, k),
        Thm8(k) => {
            let (n, m) = (inst.n, inst.m.expect("triple"));
            clause_verdict(theorem8_with(ctx.space(&n), ctx.space(&m), &h1).map(|_| ()), k)
        }
        FinalCor(k) => {
            let (n, m) = (inst.n, inst.m.expect("triple"));
            let i = n.and(&m);
            let p = g.product_unchecked(&n, &m);
            clause_verdict(
                corollary_chain_with(ctx.space(&i), ctx.space(&n), ctx.space(&p), &h1).map(|_| ()),
                k,
            )
        }
        Example13 | Example22 | ExampleQ8 | ExampleA4 => golden::evaluate(ctx, st),
        Prop2(_) | Prop5(_) | Thm3(_) | Cor14(_) => unreachable!("unknown clause {st}"),
    }
}

/// Equalities that hold once both subjects are subgroups.
pub(super) fn cor12_equalities(v: &View, h1: &ElementSet, h2: &ElementSet) -> Verdict {
    let qg = v.qg();
    let meet = h1.and(h2);
    let split = v.proj(h1).and(&v.proj(h2));
    equal(qg, "upper((H1∩H2)/N)", &v.upper_of(&meet), "upper(H1/N∩H2/N)", &v.upper(&split))
        .and(equal(qg, "lower((H1∩H2)/N)", &v.lower_of(&meet), "lower(H1/N∩H2/N)", &v.lower(&split)))
}

fn lemma1(v: &View) -> Verdict {
    let qg = v.qg();
    let mut strict = None;
    for x1 in 0..qg.order() {
        for x2 in 0..qg.order() {
            let (c1, c2) = (v.space.class_of(x1), v.space.class_of(x2));
            let lhs = v.space.class_of(qg.mul(x1, x2));
            let rhs = v.product(c1, c2);
            let w = || {
                witness([
                    ("x1", labels_x(qg, x1)),
                    ("x2", labels_x(qg, x2)),
                    ("[x1x2]", qg.set_labels(lhs)),
                    ("[x1][x2]", qg.set_labels(&rhs)),
                ])
            };
            if !lhs.subset_of(&rhs) {
                return Verdict::Fail(w());
            }
            if strict.is_none() && *lhs != rhs {
                strict = Some(w());
            }
        }
    }
    strict.map_or(Verdict::Pass, Verdict::Strict)
}

fn rough_labels(v: &View, hn: &ElementSet) -> Verdict {
    let qg = v.qg();
    let pair = RoughPair { subject: *hn, lower: v.lower(hn), upper: v.upper(hn) };
    let c = RoughClassification::of(qg, &pair);
    let rough = pair.lower != pair.upper;
    let up_sub = qg.is_subgroup(&pair.upper);
    let lo_sub = qg.is_subgroup(&pair.lower);
    let up_norm = qg.is_normal(&pair.upper);
    let lo_norm = qg.is_normal(&pair.lower);
    let expected: Vec<&str> = [
        ("upper rough subgroup", up_sub),
        ("upper rough normal subgroup", up_norm),
        ("lower rough subgroup", lo_sub),
        ("lower rough normal subgroup", lo_norm),
        ("rough subgroup", up_sub && lo_sub),
        ("rough normal subgroup", up_norm && lo_norm),
    ]
    .into_iter()
    .filter(|&(_, on)| rough && on)
    .map(|(l, _)| l)
    .collect();
    if c.is_rough == rough && c.labels == expected {
        Verdict::Pass
    } else {
        Verdict::Fail(witness([
            ("labels", c.labels.clone()),
            ("expected", expected.iter().map(|s| s.to_string()).collect()),
        ]))
    }
}

/// Membership table of one parent element across several quotients.
fn membership_witness(g: &FiniteGroup, x: usize, facts: &[(&str, bool)]) -> Witness {
    let mut w = witness([("x", labels_x(g, x))]);
    for (name, holds) in facts {
        w.insert((*name).to_owned(), note(if *holds { "yes" } else { "no" }));
    }
    w
}

fn thm19(ctx: &GroupContext, inst: &Instance) -> Verdict {
    let g = &ctx.group;
    let h = inst.h1.expect("triple");
    let (vn, vm) = (View::of(ctx, &inst.n), View::of(ctx, &inst.m.expect("triple")));
    let (lo_n, lo_m) = (vn.lower_of(&h), vm.lower_of(&h));
    let (up_n, up_m) = (vn.upper_of(&h), vm.upper_of(&h));
    let mut strict = None;
    for x in 0..g.order() {
        let facts = [
            ("xN in lower(H/N)", vn.holds(&lo_n, x)),
            ("xM in lower(H/M)", vm.holds(&lo_m, x)),
            ("xN in upper(H/N)", vn.holds(&up_n, x)),
            ("xM in upper(H/M)", vm.holds(&up_m, x)),
        ];
        let [a, b, c, d] = facts.map(|f| f.1);
        if (a && !b) || (c && !d) {
            return Verdict::Fail(membership_witness(g, x, &facts));
        }
        if strict.is_none() && (a != b || c != d) {
            strict = Some(membership_witness(g, x, &facts));
        }
    }
    strict.map_or(Verdict::Pass, Verdict::Strict)
}

/// The four lower memberships must agree for every `x`. The literal reading
/// with an upper approximation at `N ∩ M` is reported as a strict witness
/// when it differs, never as a failure.
fn prop20(ctx: &GroupContext, inst: &Instance) -> Verdict {
    let g = &ctx.group;
    let h = inst.h1.expect("triple");
    let (n, m) = (inst.n, inst.m.expect("triple"));
    let (i, p) = (n.and(&m), g.product_unchecked(&n, &m));
    let (vn, vm, vp, vi) = (View::of(ctx, &n), View::of(ctx, &m), View::of(ctx, &p), View::of(ctx, &i));
    let (lo_n, lo_m, lo_p, lo_i) = (vn.lower_of(&h), vm.lower_of(&h), vp.lower_of(&h), vi.lower_of(&h));
    let up_i = vi.upper_of(&h);
    let mut strict = None;
    for x in 0..g.order() {
        let facts = [
            ("xN in lower(H/N)", vn.holds(&lo_n, x)),
            ("xM in lower(H/M)", vm.holds(&lo_m, x)),
            ("xNM in lower(H/NM)", vp.holds(&lo_p, x)),
            ("x(N∩M) in lower(H/(N∩M))", vi.holds(&lo_i, x)),
        ];
        let first = facts[0].1;
        if facts.iter().any(|f| f.1 != first) {
            return Verdict::Fail(membership_witness(g, x, &facts));
        }
        let upper_reading = vi.holds(&up_i, x);
        if strict.is_none() && upper_reading != first {
            let mut w = membership_witness(g, x, &facts);
            w.insert("x(N∩M) in upper(H/(N∩M))".into(), note(if upper_reading { "yes" } else { "no" }));
            w.insert("upper reading".into(), note("fails"));
            strict = Some(w);
        }
    }
    strict.map_or(Verdict::Pass, Verdict::Strict)
}

fn cor17(ctx: &GroupContext, inst: &Instance, clause: u8) -> Verdict {
    let g = &ctx.group;
    let h = inst.h1.expect("triple");
    let (n, m) = (inst.n, inst.m.expect("triple"));
    let (i, p) = (n.and(&m), g.product_unchecked(&n, &m));
    if clause <= 2 && !p.subset_of(&h) {
        return Verdict::NotApplicable;
    }
    let (vn, vm, vp, vi) = (View::of(ctx, &n), View::of(ctx, &m), View::of(ctx, &p), View::of(ctx, &i));
    let upper = clause.is_multiple_of(2);
    let approx = |v: &View| if upper { v.upper_of(&h) } else { v.lower_of(&h) };
    let (a_n, a_m, a_p, a_i) = (approx(&vn), approx(&vm), approx(&vp), approx(&vi));
    let kind = if upper { "upper" } else { "lower" };
    let mut strict = None;
    for x in 0..g.order() {
        let facts = [
            (format!("xN in {kind}(H/N)"), vn.holds(&a_n, x)),
            (format!("xM in {kind}(H/M)"), vm.holds(&a_m, x)),
            (format!("xNM in {kind}(H/NM)"), vp.holds(&a_p, x)),
            (format!("x(N∩M) in {kind}(H/(N∩M))"), vi.holds(&a_i, x)),
        ];
        let [on_n, on_m, on_p, on_i] = [facts[0].1, facts[1].1, facts[2].1, facts[3].1];
        let (premise, conclusion) = if clause <= 2 {
            (on_n || on_m, on_p)
        } else {
            (on_i, on_n && on_m)
        };
        let refs: Vec<(&str, bool)> = facts.iter().map(|(k, b)| (k.as_str(), *b)).collect();
        if premise && !conclusion {
            return Verdict::Fail(membership_witness(g, x, &refs));
        }
        if strict.is_none() && conclusion && !premise {
            strict = Some(membership_witness(g, x, &refs));
        }
    }
    strict.map_or(Verdict::Pass, Verdict::Strict)
}

/// Clause `k` passes when construction got past it.
fn clause_verdict(outcome: crate::error::Result<()>, k: u8) -> Verdict {
    match outcome {
        Ok(()) => Verdict::Pass,
        Err(Error::PropertyFailed { clause, detail }) => {
            let failed: u8 = clause.parse().unwrap_or(0);
            if failed > k {
                Verdict::Pass
            } else if failed == k {
                Verdict::Fail(witness([("clause", note(clause)), ("detail", note(detail))]))
            } else {
                Verdict::Fail(witness([
                    ("clause", note(clause)),
                    ("detail", note(format!("unreached: {detail}"))),
                ]))
            }
        }
        Err(e) => Verdict::Fail(witness([("error", note(e.to_string()))])),
    }
}
