//! Worked examples reproduced set by set. Expected values are transcribed
//! verbatim, including unnormalized cycles such as `(3412)`; a mismatch is
//! reported clause by clause with both sides.

use super::checks::{cor12_equalities, note, View};
use super::{GroupContext, Instance, Statement, Verdict, Witness};
use crate::group::FiniteGroup;
use crate::set::ElementSet;
use crate::subsets::Subgroup;

const V4: [&str; 4] = ["I", "(12)(34)", "(13)(24)", "(14)(23)"];

fn group_for(st: Statement) -> &'static str {
    match st {
        Statement::Example13 | Statement::Example22 => "symmetric4",
        Statement::ExampleQ8 => "quaternion8",
        Statement::ExampleA4 => "alternating4",
        _ => "",
    }
}

fn with_n(g: &FiniteGroup, n: &ElementSet, extra: &[&str]) -> Option<ElementSet> {
    Some(n.or(&g.parse_set(extra).ok()?))
}

/// The example's instance when `ctx` is the example's group.
pub(super) fn instance(ctx: &GroupContext, st: Statement) -> Option<Instance> {
    let g = &ctx.group;
    if g.name() != group_for(st) {
        return None;
    }
    match st {
        Statement::Example13 => {
            let n = g.parse_set(&V4).ok()?;
            let h1 = with_n(g, &n, &["(1324)"])?;
            let h2 = with_n(g, &n, &["(3412)", "(1243)"])?;
            Some(Instance::pair(n, h1, h2))
        }
        Statement::Example22 => {
            let n = g.parse_set(&V4).ok()?;
            Some(Instance::single(n, with_n(g, &n, &["(12)", "(34)", "(1324)", "(4231)"])?))
        }
        Statement::ExampleQ8 => {
            let n = g.parse_set(&["1", "-1"]).ok()?;
            Some(Instance::single(n, with_n(g, &n, &["i", "j"])?))
        }
        Statement::ExampleA4 => {
            let n = g.parse_set(&V4).ok()?;
            let h1 = with_n(g, &n, &["(123)", "(124)"])?;
            let h2 = with_n(g, &n, &["(132)", "(142)"])?;
            Some(Instance::pair(n, h1, h2))
        }
        _ => None,
    }
}

struct Golden<'a> {
    g: &'a FiniteGroup,
    v: View<'a>,
    mismatches: Witness,
}

impl<'a> Golden<'a> {
    fn new(ctx: &'a GroupContext, n: &ElementSet) -> Self {
        Golden { g: &ctx.group, v: View::of(ctx, n), mismatches: Witness::new() }
    }

    fn coset(&self, label: &str) -> usize {
        self.v.space.quotient.parse_element(label).expect("example label parses")
    }

    fn mismatch(&mut self, clause: &str, expected: Vec<String>, actual: Vec<String>) {
        self.mismatches.insert(format!("{clause}: expected"), expected);
        self.mismatches.insert(format!("{clause}: actual"), actual);
    }

    fn owned(labels: &[&str]) -> Vec<String> {
        labels.iter().map(|s| s.to_string()).collect()
    }

    /// Quotient set given by coset labels.
    fn cosets(&mut self, clause: &str, expected: &[&str], actual: &ElementSet) {
        let q = &self.v.space.quotient;
        match q.parse_set(expected) {
            Ok(e) if e == *actual => {}
            _ => {
                let actual = self.v.qg().set_labels(actual);
                self.mismatch(clause, Self::owned(expected), actual);
            }
        }
    }

    /// Parent set given by element labels.
    fn elements(&mut self, clause: &str, expected: &[&str], actual: &ElementSet) {
        match self.g.parse_set(expected) {
            Ok(e) if e == *actual => {}
            _ => {
                let actual = self.g.set_labels(actual);
                self.mismatch(clause, Self::owned(expected), actual);
            }
        }
    }

    fn fact(&mut self, clause: &str, expected: bool, actual: bool) {
        if expected != actual {
            self.mismatch(clause, note(expected.to_string()), note(actual.to_string()));
        }
    }

    fn class(&mut self, rep: &str, expected: &[&str]) {
        let c = *self.v.space.class_of(self.coset(rep));
        self.cosets(&format!("[{rep}]"), expected, &c);
    }

    fn finish(self) -> Verdict {
        if self.mismatches.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(self.mismatches)
        }
    }
}

const S4_MOD_V4: [&str; 6] = ["N", "(1234)N", "(1324)N", "(1243)N", "(123)N", "(132)N"];

pub(super) fn evaluate(ctx: &GroupContext, st: Statement) -> Verdict {
    let Some(inst) = instance(ctx, st) else {
        return Verdict::NotApplicable;
    };
    let g = &ctx.group;
    let mut c = Golden::new(ctx, &inst.n);
    let full = c.v.qg().full_set();
    match st {
        Statement::Example13 => {
            let (h1, h2) = (inst.h1.expect("pair"), inst.h2.expect("pair"));
            c.fact("N normal", true, ctx.is_normal(&inst.n));
            let listing: [(&str, [&str; 4]); 5] = [
                ("(3412)N", ["(13)", "(24)", "(2143)", "(3412)"]),
                ("(1324)N", ["(12)", "(34)", "(4231)", "(1324)"]),
                ("(1243)N", ["(14)", "(23)", "(3421)", "(1243)"]),
                ("(123)N", ["(123)", "(134)", "(124)", "(243)"]),
                ("(132)N", ["(132)", "(143)", "(142)", "(234)"]),
            ];
            for (rep, members) in listing {
                let actual = c.v.space.quotient.coset_members(c.coset(rep));
                c.elements(rep, &members, &actual);
            }
            c.fact("|G/N| = 6", true, c.v.qg().order() == 6);
            c.cosets("G/N", &S4_MOD_V4, &full);
            let (h1n, h2n) = (c.v.proj(&h1), c.v.proj(&h2));
            c.cosets("H1/N", &["N", "(1324)N"], &h1n);
            c.cosets("H2/N", &["N", "(3412)N", "(1243)N"], &h2n);
            c.class("(1234)N", &["(1234)N", "(1324)N", "(1243)N"]);
            c.class("(123)N", &["(132)N", "(123)N"]);
            let mut sizes: Vec<usize> = c.v.space.classes().iter().map(ElementSet::len).collect();
            sizes.sort_unstable();
            c.fact("class sizes are 1, 2, 3", true, sizes == [1, 2, 3]);
            let (lo1, lo2) = (c.v.lower(&h1n), c.v.lower(&h2n));
            c.cosets("lower(H1/N)", &["N"], &lo1);
            c.cosets("lower(H2/N)", &["N"], &lo2);
            let prod = c.v.proj(&g.product_unchecked(&h1, &h2));
            let four = ["N", "(1324)N", "(3412)N", "(1243)N"];
            c.cosets("(H1H2)/N", &four, &prod);
            let lo_prod = c.v.lower(&prod);
            c.cosets("lower((H1H2)/N)", &four, &lo_prod);
            let prod_lo = c.v.product(&lo1, &lo2);
            c.cosets("lower(H1/N)lower(H2/N)", &["N"], &prod_lo);
            c.fact("lower(H1/N)lower(H2/N) differs from lower((H1H2)/N)", true, prod_lo != lo_prod);
        }
        Statement::Example22 => {
            let h = inst.h1.expect("single");
            c.fact("H subgroup", true, ctx.is_subgroup(&h));
            c.fact("H normal", false, ctx.is_normal(&h));
            c.fact("|H/N| = 2", true, c.v.proj(&h).len() == 2);
            c.cosets("G/N", &S4_MOD_V4, &full);
            let hn = c.v.proj(&h);
            c.cosets("H/N", &["N", "(1324)N"], &hn);
            c.class("(1234)N", &["(1234)N", "(1324)N", "(1243)N"]);
            c.class("(123)N", &["(132)N", "(123)N"]);
            let up = c.v.upper(&hn);
            c.cosets("upper(H/N)", &["N", "(1234)N", "(1324)N", "(1243)N"], &up);
            c.fact("|upper(H/N)| = 4", true, up.len() == 4);
            c.fact("upper(H/N) subgroup", false, c.v.qg().is_subgroup(&up));
            let lo = c.v.lower(&hn);
            c.cosets("lower(H/N)", &["N"], &lo);
            let sub = Subgroup::new(c.v.qg(), &hn, "H/N").ok();
            let proper_normal = sub.is_some_and(|s| {
                let inner = s.restrict(&lo);
                s.group.is_normal(&inner) && inner.len() < s.group.order() && lo.subset_of(&hn)
            });
            c.fact("lower(H/N) proper normal subgroup of H/N", true, proper_normal);
        }
        Statement::ExampleQ8 => {
            let h = inst.h1.expect("single");
            c.fact("N normal", true, ctx.is_normal(&inst.n));
            c.fact("H subgroup", false, ctx.is_subgroup(&h));
            for (a, b) in [("iN", "-iN"), ("jN", "-jN"), ("kN", "-kN")] {
                c.fact(&format!("{a} = {b}"), true, c.coset(a) == c.coset(b));
            }
            c.cosets("G/N", &["N", "iN", "jN", "kN"], &full);
            let hn = c.v.proj(&h);
            c.cosets("H/N", &["N", "iN", "jN"], &hn);
            for x in ["iN", "jN", "kN"] {
                c.class(x, &[x]);
            }
            c.fact(
                "classes are singletons",
                true,
                c.v.space.classes().iter().all(|k| k.len() == 1),
            );
            let (lo, up) = (c.v.lower(&hn), c.v.upper(&hn));
            c.cosets("lower(H/N)", &["N", "iN", "jN"], &lo);
            c.cosets("upper(H/N)", &["N", "iN", "jN"], &up);
            c.fact("lower(H/N) subgroup", false, c.v.qg().is_subgroup(&lo));
            c.fact("upper(H/N) subgroup", false, c.v.qg().is_subgroup(&up));
        }
        Statement::ExampleA4 => {
            let (h1, h2) = (inst.h1.expect("pair"), inst.h2.expect("pair"));
            c.fact("N normal", true, ctx.is_normal(&inst.n));
            c.fact("H1 subgroup", false, ctx.is_subgroup(&h1));
            c.fact("H2 subgroup", false, ctx.is_subgroup(&h2));
            c.fact("(132)N = (124)N", true, c.coset("(132)N") == c.coset("(124)N"));
            c.fact("(123)N = (142)N", true, c.coset("(123)N") == c.coset("(142)N"));
            c.cosets("G/N", &["N", "(123)N", "(132)N"], &full);
            c.cosets("G/N", &["N", "(142)N", "(124)N"], &full);
            let (h1n, h2n) = (c.v.proj(&h1), c.v.proj(&h2));
            c.cosets("H1/N", &["N", "(123)N", "(132)N"], &h1n);
            c.cosets("H2/N", &["N", "(123)N", "(132)N"], &h2n);
            let meet = h1.and(&h2);
            c.elements("H1∩H2", &V4, &meet);
            let meet_n = c.v.proj(&meet);
            c.cosets("(H1∩H2)/N", &["N"], &meet_n);
            c.cosets("lower((H1∩H2)/N)", &["N"], &c.v.lower(&meet_n));
            c.cosets("upper((H1∩H2)/N)", &["N"], &c.v.upper(&meet_n));
            let split = h1n.and(&h2n);
            c.cosets("H1/N∩H2/N", &["N", "(123)N", "(132)N"], &split);
            c.cosets("lower(H1/N∩H2/N)", &["N", "(123)N", "(132)N"], &c.v.lower(&split));
            c.cosets("upper(H1/N∩H2/N)", &["N", "(123)N", "(132)N"], &c.v.upper(&split));
            c.fact(
                "intersection equalities fail without subgroups",
                true,
                cor12_equalities(&c.v, &h1, &h2).is_failure(),
            );
        }
        _ => return Verdict::NotApplicable,
    }
    c.finish()
}
