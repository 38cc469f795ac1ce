use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{golden, CheckReport, PairKind, Shape, Statement, Subject};
use crate::approximation::ApproximationSpace;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// Above this many free cosets, subject unions are sampled.
const FREE_COSET_CAP: usize = 13;
const UNION_SAMPLE: usize = 2000;
/// Arbitrary (non-saturated) supersets of `N` are enumerated for pair
/// statements when at most this many elements lie outside `N`.
const RAW_SPAN: usize = 8;
const PAIR_CAP: usize = 256;
const PAIR_SAMPLE: usize = 4096;

/// One hypothesis instance. Which of `m`, `h1`, `h2` are present depends on
/// the statement's shape; single-subject and triple shapes use `h1` as `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Instance {
    pub n: ElementSet,
    pub m: Option<ElementSet>,
    pub h1: Option<ElementSet>,
    pub h2: Option<ElementSet>,
}

impl Instance {
    pub fn normal(n: ElementSet) -> Self {
        Instance { n, m: None, h1: None, h2: None }
    }

    pub fn single(n: ElementSet, h: ElementSet) -> Self {
        Instance { h1: Some(h), ..Self::normal(n) }
    }

    pub fn pair(n: ElementSet, h1: ElementSet, h2: ElementSet) -> Self {
        Instance { h2: Some(h2), ..Self::single(n, h1) }
    }

    pub fn triple(n: ElementSet, m: ElementSet, h: ElementSet) -> Self {
        Instance { m: Some(m), ..Self::single(n, h) }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Unit {
    pub n: usize,
    pub m: Option<usize>,
}

/// Per-group data shared by every check: the subgroup lattice and one
/// approximation space per normal subgroup.
#[derive(Debug)]
pub struct GroupContext {
    pub group: FiniteGroup,
    pub subgroups: Vec<ElementSet>,
    pub normals: Vec<ElementSet>,
    spaces: Vec<ApproximationSpace>,
    normal_pos: HashMap<ElementSet, usize>,
    subgroup_set: HashSet<ElementSet>,
}

impl GroupContext {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        Self::with(g, Execution::default())
    }

    pub fn with(g: &FiniteGroup, exec: Execution) -> Result<Self> {
        let subgroups = g.all_subgroups_with(exec)?;
        let normals: Vec<ElementSet> = subgroups.iter().copied().filter(|s| g.is_normal(s)).collect();
        let spaces = exec
            .map(&normals, |n| ApproximationSpace::from_normal(g, n))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupContext {
            group: g.clone(),
            normal_pos: normals.iter().enumerate().map(|(i, n)| (*n, i)).collect(),
            subgroup_set: subgroups.iter().copied().collect(),
            subgroups,
            normals,
            spaces,
        })
    }

    /// Space of `G/N`; `n` must be one of the normal subgroups.
    pub fn space(&self, n: &ElementSet) -> &ApproximationSpace {
        &self.spaces[self.normal_pos[n]]
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        self.subgroup_set.contains(s)
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.normal_pos.contains_key(s)
    }

    pub(crate) fn units(&self, st: Statement) -> Vec<Unit> {
        let k = self.normals.len();
        match st.shape() {
            Shape::Golden => {
                if golden::instance(self, st).is_some() {
                    vec![Unit { n: 0, m: None }]
                } else {
                    Vec::new()
                }
            }
            Shape::Normal | Shape::Single(_) | Shape::Pair(_) => {
                (0..k).map(|n| Unit { n, m: None }).collect()
            }
            Shape::Nested(_) => (0..k)
                .flat_map(|n| (0..k).map(move |m| (n, m)))
                .filter(|&(n, m)| self.normals[n].subset_of(&self.normals[m]))
                .map(|(n, m)| Unit { n, m: Some(m) })
                .collect(),
            Shape::Joint(_) => (0..k)
                .flat_map(|n| (0..k).map(move |m| Unit { n, m: Some(m) }))
                .collect(),
        }
    }

    pub fn instances(&self, st: Statement, seed: u64) -> Vec<Instance> {
        self.units(st)
            .into_iter()
            .flat_map(|u| self.unit_instances(st, u, seed))
            .collect()
    }

    pub(crate) fn unit_instances(&self, st: Statement, unit: Unit, seed: u64) -> Vec<Instance> {
        let n = self.normals[unit.n];
        let m = unit.m.map(|i| self.normals[i]);
        let tag = |what: &str| {
            stream_seed(seed, &[self.group.name(), what, &unit.n.to_string(), &format!("{:?}", unit.m)])
        };
        match st.shape() {
            Shape::Golden => golden::instance(self, st).into_iter().collect(),
            Shape::Normal => vec![Instance::normal(n)],
            Shape::Single(Subject::Any) => {
                let mut rng = ChaCha8Rng::seed_from_u64(tag("unions"));
                self.unions(&n, &n, false, &mut rng)
                    .into_iter()
                    .map(|h| Instance::single(n, h))
                    .collect()
            }
            Shape::Single(subject) => self
                .subgroups_over(&n, subject)
                .map(|h| Instance::single(n, h))
                .collect(),
            Shape::Pair(PairKind::Subgroups) => {
                let subs: Vec<_> = self.subgroups_over(&n, Subject::Subgroup).collect();
                all_pairs(&subs, |_, _| true)
                    .map(|(a, b)| Instance::pair(n, a, b))
                    .collect()
            }
            Shape::Pair(kind) => {
                let mut rng = ChaCha8Rng::seed_from_u64(tag("unions"));
                let range = self.unions(&n, &n, true, &mut rng);
                let mut rng = ChaCha8Rng::seed_from_u64(tag("pairs"));
                self.pairs(&range, kind == PairKind::Nested, &mut rng)
                    .into_iter()
                    .map(|(a, b)| Instance::pair(n, a, b))
                    .collect()
            }
            Shape::Nested(subject) | Shape::Joint(subject) => {
                let m = m.expect("triple unit carries M");
                let floor = n.or(&m);
                let hs: Vec<ElementSet> = match subject {
                    Subject::Any => {
                        let mut rng = ChaCha8Rng::seed_from_u64(tag("unions"));
                        self.unions(&n.and(&m), &floor, false, &mut rng)
                    }
                    _ => self.subgroups_over(&floor, subject).collect(),
                };
                hs.into_iter().map(|h| Instance::triple(n, m, h)).collect()
            }
        }
    }

    fn subgroups_over<'a>(&'a self, floor: &'a ElementSet, subject: Subject) -> impl Iterator<Item = ElementSet> + 'a {
        let pool = match subject {
            Subject::NormalSubgroup => &self.normals,
            _ => &self.subgroups,
        };
        pool.iter().copied().filter(move |s| floor.subset_of(s))
    }

    /// Subsets `H ⊇ floor` that are unions of cosets of the normal subgroup
    /// `kernel`, in mask order, or subgroups plus a seeded sample when there
    /// are too many. With `raw`, every superset of `floor` is produced
    /// instead when only a few elements lie outside it.
    fn unions(&self, kernel: &ElementSet, floor: &ElementSet, raw: bool, rng: &mut ChaCha8Rng) -> Vec<ElementSet> {
        let g = &self.group;
        if raw && g.order() - floor.len() <= RAW_SPAN {
            let free: Vec<usize> = (0..g.order()).filter(|&x| !floor.contains(x)).collect();
            return (0u32..1 << free.len())
                .map(|mask| {
                    let mut h = *floor;
                    for (bit, &x) in free.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            h.insert(x);
                        }
                    }
                    h
                })
                .collect();
        }
        let q = &self.space(kernel).quotient;
        let cosets: Vec<ElementSet> = (0..q.order()).map(|c| q.coset_members(c)).collect();
        let free: Vec<usize> = (0..q.order())
            .filter(|&c| !floor.contains(q.rep(c)))
            .collect();
        let build = |chosen: &mut dyn Iterator<Item = usize>| chosen.fold(*floor, |h, c| h.or(&cosets[c]));
        if free.len() <= FREE_COSET_CAP {
            return (0u32..1 << free.len())
                .map(|mask| build(&mut free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &c)| c)))
                .collect();
        }
        let mut seen = HashSet::new();
        let mut out: Vec<ElementSet> = self
            .subgroups_over(floor, Subject::Subgroup)
            .filter(|s| seen.insert(*s))
            .collect();
        for _ in 0..UNION_SAMPLE {
            let picks: Vec<usize> = free.iter().copied().filter(|_| rng.random::<bool>()).collect();
            let h = build(&mut picks.into_iter());
            if seen.insert(h) {
                out.push(h);
            }
        }
        out
    }

    /// Ordered pairs from `range` (restricted to `a ⊆ b` when `nested`):
    /// all of them for small ranges, otherwise every subgroup pair plus a
    /// seeded sample.
    fn pairs(&self, range: &[ElementSet], nested: bool, rng: &mut ChaCha8Rng) -> Vec<(ElementSet, ElementSet)> {
        let fits = |a: &ElementSet, b: &ElementSet| !nested || a.subset_of(b);
        if range.len() <= PAIR_CAP {
            return all_pairs(range, fits).collect();
        }
        let subs: Vec<ElementSet> = range.iter().copied().filter(|s| self.is_subgroup(s)).collect();
        let mut out: Vec<_> = all_pairs(&subs, fits).collect();
        for _ in 0..PAIR_SAMPLE {
            let b = range[rng.random_range(0..range.len())];
            let a = range[rng.random_range(0..range.len())];
            out.push(if nested { (a.and(&b), b) } else { (a, b) });
        }
        out
    }

    pub(crate) fn evaluate(&self, st: Statement, inst: &Instance) -> super::Verdict {
        super::checks::evaluate(self, st, inst)
    }

    /// Validate `inst` against `st`'s hypotheses, then evaluate it.
    pub fn check(&self, st: Statement, inst: &Instance) -> Result<CheckReport> {
        self.validate(st, inst)?;
        Ok(CheckReport::new(&self.group, st, inst, self.evaluate(st, inst)))
    }

    fn validate(&self, st: Statement, inst: &Instance) -> Result<()> {
        let g = &self.group;
        for s in [Some(inst.n), inst.m, inst.h1, inst.h2].iter().flatten() {
            g.check_owns(s)?;
        }
        let subject_ok = |h: &ElementSet, subject: Subject| match subject {
            Subject::Any => true,
            Subject::Subgroup => self.is_subgroup(h),
            Subject::NormalSubgroup => self.is_normal(h),
        };
        let n = inst.n;
        let ok = self.is_normal(&n)
            && match st.shape() {
                Shape::Golden => golden::instance(self, st).is_some_and(|i| i == *inst),
                Shape::Normal => true,
                Shape::Single(subject) => inst
                    .h1
                    .is_some_and(|h| n.subset_of(&h) && subject_ok(&h, subject)),
                Shape::Pair(kind) => match (inst.h1, inst.h2) {
                    (Some(a), Some(b)) => {
                        n.subset_of(&a)
                            && n.subset_of(&b)
                            && match kind {
                                PairKind::Any => true,
                                PairKind::Nested => a.subset_of(&b),
                                PairKind::Subgroups => self.is_subgroup(&a) && self.is_subgroup(&b),
                            }
                    }
                    _ => false,
                },
                Shape::Nested(subject) | Shape::Joint(subject) => match (inst.m, inst.h1) {
                    (Some(m), Some(h)) => {
                        self.is_normal(&m)
                            && n.subset_of(&h)
                            && m.subset_of(&h)
                            && subject_ok(&h, subject)
                            && (matches!(st.shape(), Shape::Joint(_)) || n.subset_of(&m))
                    }
                    _ => false,
                },
            };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(st.to_string()))
        }
    }
}

fn all_pairs<'a>(
    items: &'a [ElementSet],
    keep: impl Fn(&ElementSet, &ElementSet) -> bool + 'a,
) -> impl Iterator<Item = (ElementSet, ElementSet)> + 'a {
    items
        .iter()
        .flat_map(move |a| items.iter().map(move |b| (*a, *b)))
        .filter(move |(a, b)| keep(a, b))
}

/// FNV-1a over the seed and a few tags; stable across platforms and runs.
fn stream_seed(seed: u64, parts: &[&str]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(&seed.to_le_bytes());
    for p in parts {
        eat(p.as_bytes());
        eat(&[0xff]);
    }
    h
}
