//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits nonzero if
//! any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{as_cosets, set, Oracle, Set};
use roughgroup::catalog::{build_all, standard_corpus};
use roughgroup::homomorphism::theorem8_data;
use roughgroup::verifier::{enumerate_instances, hunt, run_suite, CheckReport, HuntProperty, Statement};
use roughgroup::{builtin_group, ApproximationSpace, ElementSet, Execution, FiniteGroup, QuotientGroup};

/// Wall-clock limit for each worked example.
const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
/// Wall-clock limit for the full suite, run on one thread.
const SUITE_LIMIT: Duration = Duration::from_secs(300);
/// Largest order covered by the oracle comparison.
const ORACLE_MAX_ORDER: usize = 16;
const SEED: u64 = 0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{detail} ({took:.2?})"))
}

fn space(g: &FiniteGroup, n: &[&str]) -> (ElementSet, ApproximationSpace) {
    let n = g.parse_set(n).unwrap();
    (n, ApproximationSpace::from_normal(g, &n).unwrap())
}

fn with_n(g: &FiniteGroup, n: &ElementSet, extra: &[&str]) -> ElementSet {
    n.union(&g.parse_set(extra).unwrap()).unwrap()
}

fn expect_cosets(q: &QuotientGroup, what: &str, actual: &ElementSet, expected: &[&str]) -> Result<(), String> {
    let want = q.parse_set(expected).map_err(|e| format!("{what}: {e}"))?;
    ensure(*actual == want, || {
        format!("{what} = {:?}, expected {:?}", q.group.set_labels(actual), expected)
    })
}

const V4: [&str; 4] = ["I", "(12)(34)", "(13)(24)", "(14)(23)"];

fn criterion_1() -> Outcome {
    timed(EXAMPLE_LIMIT, || {
        let g = builtin_group("quaternion8").unwrap();
        let (n, sp) = space(&g, &["1", "-1"]);
        let q = &sp.quotient;
        let h = with_n(&g, &n, &["i", "j"]);
        let hn = q.project(&h).unwrap();
        expect_cosets(q, "H/N", &hn, &["N", "iN", "jN"])?;
        let (lo, up) = (sp.lower(&hn).unwrap(), sp.upper(&hn).unwrap());
        expect_cosets(q, "lower", &lo, &["N", "iN", "jN"])?;
        expect_cosets(q, "upper", &up, &["N", "iN", "jN"])?;
        ensure(!q.group.is_subgroup(&lo) && !q.group.is_subgroup(&up), || "approximation is a subgroup".into())?;
        ensure(sp.classes().iter().all(|c| c.len() == 1), || "a class is not a singleton".into())?;
        let o = Oracle::new(&g);
        let (sn, sh) = (set(&n), set(&h));
        ensure(as_cosets(q, &lo) == o.lower(&sn, &sh) && as_cosets(q, &up) == o.upper(&sn, &sh), || {
            "oracle disagrees".into()
        })?;
        Ok("Q8 / {1,-1}: lower = upper = {N,iN,jN}, neither a subgroup, singleton classes".into())
    })
}

fn criterion_2() -> Outcome {
    timed(EXAMPLE_LIMIT, || {
        let g = builtin_group("symmetric4").unwrap();
        let (n, sp) = space(&g, &V4);
        let q = &sp.quotient;
        let h1 = with_n(&g, &n, &["(1324)"]);
        let h2 = with_n(&g, &n, &["(3412)", "(1243)"]);
        let lower = |h: &ElementSet| sp.lower(&q.project(h).unwrap()).unwrap();
        let mut sizes: Vec<usize> = sp.classes().iter().map(ElementSet::len).collect();
        sizes.sort_unstable();
        ensure(sizes == [1, 2, 3], || format!("class sizes {sizes:?}"))?;
        expect_cosets(q, "lower(H1/N)", &lower(&h1), &["N"])?;
        expect_cosets(q, "lower(H2/N)", &lower(&h2), &["N"])?;
        let prod = g.set_product(&h1, &h2).unwrap();
        let lo_prod = lower(&prod);
        let o = Oracle::new(&g);
        ensure(as_cosets(q, &lo_prod) == o.lower(&set(&n), &set(&prod)), || "oracle disagrees on lower((H1H2)/N)".into())?;
        expect_cosets(q, "lower((H1H2)/N)", &lo_prod, &["N", "(1234)N", "(1324)N", "(1243)N"]).map_err(|e| {
            format!(
                "{e}; |H1H2| = {}, (H1H2)/N = {:?}",
                prod.len(),
                q.group.set_labels(&q.project(&prod).unwrap())
            )
        })?;
        Ok("S4 / V4 products match".into())
    })
}

fn criterion_3() -> Outcome {
    timed(EXAMPLE_LIMIT, || {
        let g = builtin_group("symmetric4").unwrap();
        let (n, sp) = space(&g, &V4);
        let q = &sp.quotient;
        let h = with_n(&g, &n, &["(12)", "(34)", "(1324)", "(4231)"]);
        ensure(g.is_subgroup(&h) && !g.is_normal(&h), || "H should be a non-normal subgroup".into())?;
        let hn = q.project(&h).unwrap();
        let (lo, up) = (sp.lower(&hn).unwrap(), sp.upper(&hn).unwrap());
        ensure(up.len() == 4 && !q.group.is_subgroup(&up), || format!("upper = {:?}", q.group.set_labels(&up)))?;
        expect_cosets(q, "lower", &lo, &["N"])?;
        let sub = roughgroup::Subgroup::new(&q.group, &hn, "H/N").unwrap();
        let inner = sub.restrict(&lo);
        ensure(sub.group.is_normal(&inner) && inner.len() < sub.group.order(), || "lower is not a proper normal subgroup of H/N".into())?;
        let o = Oracle::new(&g);
        let up_o = o.upper(&set(&n), &set(&h));
        ensure(as_cosets(q, &up) == up_o && !o.cosets_form_subgroup(&up_o, &set(&n)), || "oracle disagrees".into())?;
        Ok("S4 / V4, |upper| = 4 not a subgroup, lower = {N} proper normal in H/N".into())
    })
}

fn criterion_4() -> Outcome {
    timed(EXAMPLE_LIMIT, || {
        let g = builtin_group("alternating4").unwrap();
        let (n, sp) = space(&g, &V4);
        let q = &sp.quotient;
        let h1 = with_n(&g, &n, &["(123)", "(124)"]);
        let h2 = with_n(&g, &n, &["(132)", "(142)"]);
        let full = q.group.full_set();
        let (h1n, h2n) = (q.project(&h1).unwrap(), q.project(&h2).unwrap());
        ensure(h1n == full && h2n == full, || "H_i/N is not G/N".into())?;
        ensure(h1.intersection(&h2).unwrap() == n, || "H1 ∩ H2 is not N".into())?;
        let meet = q.project(&h1.intersection(&h2).unwrap()).unwrap();
        let split = h1n.intersection(&h2n).unwrap();
        let exact = |s: &ElementSet| (sp.lower(s).unwrap(), sp.upper(s).unwrap());
        let id = q.group.identity_set();
        ensure(exact(&meet) == (id, id), || "approximations of (H1∩H2)/N are not {N}".into())?;
        ensure(exact(&split) == (full, full), || "approximations of H1/N ∩ H2/N are not G/N".into())?;
        ensure(!g.is_subgroup(&h1) && !g.is_subgroup(&h2), || "H_i should not be subgroups".into())?;
        Ok("A4 / V4: intersection equalities fail for non-subgroups".into())
    })
}

fn criterion_5() -> Outcome {
    timed(SUITE_LIMIT, || {
        let corpus = build_all(&standard_corpus()).unwrap();
        let statements = Statement::properties();
        let report = run_suite(&corpus, &statements, Execution::Sequential, SEED).unwrap();
        let missing: Vec<_> = statements.iter().filter(|s| report.summary(**s).is_none_or(|x| x.instances == 0)).collect();
        ensure(missing.is_empty(), || format!("statements without instances: {missing:?}"))?;
        ensure(report.is_success(), || {
            format!("{} failures, first: {:?}", report.total_failures, report.first_failure())
        })?;
        Ok(format!(
            "{} statements, {} instances over {} groups, 0 failures",
            statements.len(),
            report.total_instances,
            corpus.len()
        ))
    })
}

fn criterion_6() -> Outcome {
    let corpus = build_all(&standard_corpus()).unwrap();
    let mut compared = 0usize;
    for g in corpus.iter().filter(|g| g.order() <= ORACLE_MAX_ORDER) {
        let o = Oracle::new(g);
        let mut seen: BTreeSet<(Set, Set)> = BTreeSet::new();
        let instances = enumerate_instances(g, Statement::Prop2(1), SEED)
            .unwrap()
            .into_iter()
            .chain(enumerate_instances(g, Statement::Prop2(2), SEED).unwrap());
        for inst in instances {
            for h in [inst.h1, inst.h2].into_iter().flatten() {
                if !seen.insert((set(&inst.n), set(&h))) {
                    continue;
                }
                let sp = ApproximationSpace::from_normal(g, &inst.n).unwrap();
                let hn = sp.project(&h).unwrap();
                let (sn, sh) = (set(&inst.n), set(&h));
                let lo = as_cosets(&sp.quotient, &sp.lower(&hn).unwrap());
                let up = as_cosets(&sp.quotient, &sp.upper(&hn).unwrap());
                ensure(lo == o.lower(&sn, &sh) && up == o.upper(&sn, &sh), || {
                    format!("{}: N = {:?}, H = {:?}", g.name(), g.set_labels(&inst.n), g.set_labels(&h))
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} (N, H) pairs agree with the oracle"))
}

fn criterion_7() -> Outcome {
    let corpus = build_all(&standard_corpus()).unwrap();
    let mut count = 0usize;
    for g in &corpus {
        for inst in enumerate_instances(g, Statement::Thm8(1), SEED).unwrap() {
            let (n, m, h) = (inst.n, inst.m.unwrap(), inst.h1.unwrap());
            let where_ = || format!("{} N={:?} M={:?} H={:?}", g.name(), g.set_labels(&n), g.set_labels(&m), g.set_labels(&h));
            let d = theorem8_data(g, &n, &m, &h).map_err(|e| format!("{}: {e}", where_()))?;
            for (name, hom) in [("psi1", &d.psi1), ("psi2", &d.psi2)] {
                let (src, dst) = (Oracle::new(hom.source()), Oracle::new(hom.target()));
                let bijective = hom.map().iter().collect::<BTreeSet<_>>().len() == src.n && src.n == dst.n;
                ensure(bijective && src.is_hom(&dst, hom.map()), || format!("{name} not an isomorphism at {}", where_()))?;
            }
            let (src, dst) = (Oracle::new(d.phi.source()), Oracle::new(d.phi.target()));
            let onto = d.phi.map().iter().collect::<BTreeSet<_>>().len() == dst.n;
            ensure(onto && src.is_hom(&dst, d.phi.map()), || format!("phi not onto at {}", where_()))?;
            let qn = QuotientGroup::new(g, &n).unwrap();
            let mut want: Vec<String> = qn.group.set_labels(&qn.project(&m).unwrap());
            let mut got: Vec<String> = d.phi.source().set_labels(&d.phi.kernel());
            want.sort();
            got.sort();
            ensure(want == got, || format!("ker phi = {got:?}, M/N = {want:?} at {}", where_()))?;
            let iso = &d.k_mod_m_to_t_mod_m;
            let (a, b) = (Oracle::new(iso.source()), Oracle::new(iso.target()));
            ensure(a.n == b.n && a.is_hom(&b, iso.map()) && iso.is_injective(), || format!("K/M vs T/M at {}", where_()))?;
            count += 1;
        }
    }
    ensure(count > 0, || "no instances".into())?;
    Ok(format!("{count} nested instances, all maps verified"))
}

fn has(reports: &[CheckReport], pred: impl Fn(&CheckReport) -> bool) -> bool {
    reports.iter().any(pred)
}

fn criterion_8() -> Outcome {
    let exec = Execution::default();
    let s4 = builtin_group("symmetric4").unwrap();
    let a4 = builtin_group("alternating4").unwrap();
    let sorted = |g: &FiniteGroup, labels: &[&str]| {
        let mut v = g.set_labels(&g.parse_set(labels).unwrap());
        v.sort();
        v
    };
    let same = |g: &FiniteGroup, got: &Option<Vec<String>>, want: &[String]| {
        got.as_ref().is_some_and(|l| {
            let mut l = sorted(g, &l.iter().map(String::as_str).collect::<Vec<_>>());
            l.sort();
            l == want
        })
    };

    let up = hunt(HuntProperty::UpperNotSubgroup, std::slice::from_ref(&s4), exec, SEED).unwrap();
    let h22 = sorted(&s4, &[&V4[..], &["(12)", "(34)", "(1324)", "(4231)"]].concat());
    ensure(has(&up, |r| same(&s4, &r.h1, &h22)), || "upper-not-subgroup misses the S4 subgroup of order 8".into())?;

    let lp = hunt(HuntProperty::LowerProductStrict, std::slice::from_ref(&s4), exec, SEED).unwrap();
    let q = QuotientGroup::new(&s4, &s4.parse_set(&V4).unwrap()).unwrap();
    let at_quotient = |labels: &Option<Vec<String>>| {
        labels.as_ref().map(|l| {
            let h = s4.parse_set(l).unwrap();
            q.project(&h).ok()
        })
    };
    let want1 = q.parse_set(&["N", "(1324)N"]).unwrap();
    let want2 = q.parse_set(&["N", "(3412)N", "(1243)N"]).unwrap();
    ensure(
        has(&lp, |r| {
            s4.parse_set(&r.n).ok() == s4.parse_set(&V4).ok() && at_quotient(&r.h1) == Some(Some(want1)) && at_quotient(&r.h2) == Some(Some(want2))
        }),
        || "lower-product-strict misses the S4 / V4 product pair".into(),
    )?;

    let c12 = hunt(HuntProperty::Cor12FailsWithoutSubgroups, std::slice::from_ref(&a4), exec, SEED).unwrap();
    let h1 = sorted(&a4, &[&V4[..], &["(123)", "(124)"]].concat());
    let h2 = sorted(&a4, &[&V4[..], &["(132)", "(142)"]].concat());
    ensure(has(&c12, |r| same(&a4, &r.h1, &h1) && same(&a4, &r.h2, &h2)), || {
        "cor12-fails-without-subgroups misses the A4 pair".into()
    })?;

    let abelian: Vec<FiniteGroup> = build_all(&standard_corpus())
        .unwrap()
        .into_iter()
        .filter(FiniteGroup::is_abelian)
        .collect();
    let none = hunt(HuntProperty::UpperNotSubgroup, &abelian, exec, SEED).unwrap();
    ensure(none.is_empty(), || format!("{} witnesses over abelian groups", none.len()))?;
    Ok(format!(
        "{} / {} / {} witnesses, none over {} abelian groups",
        up.len(),
        lp.len(),
        c12.len(),
        abelian.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 quaternion example", criterion_1),
        ("2 product example", criterion_2),
        ("3 upper approximation of a subgroup", criterion_3),
        ("4 alternating example", criterion_4),
        ("5 full suite", criterion_5),
        ("6 oracle equivalence", criterion_6),
        ("7 nested quotient maps", criterion_7),
        ("8 strictness witnesses", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
