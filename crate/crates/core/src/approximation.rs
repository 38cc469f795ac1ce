//! Rough approximations in a quotient group.
//!
//! The universe is `G/N`, and two cosets are equivalent when they are
//! conjugate in `G/N`, i.e. `xN ~ yN` iff `xN = (a·y·a⁻¹)N` for some `a ∈ G`.
//! For a subset `S ⊆ G/N` containing `N`:
//!
//! * lower approximation: `{xN : [xN] ⊆ S}`
//! * upper approximation: `{xN : [xN] ∩ S ≠ ∅}`
//!
//! Both are computed from the precomputed class partition, so each query is
//! a pass over the classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quotient::QuotientGroup;
use crate::set::ElementSet;

/// `(G/N, θ)`: a quotient group together with its conjugacy partition.
#[derive(Debug, Clone)]
pub struct ApproximationSpace {
    pub quotient: QuotientGroup,
    classes: Vec<ElementSet>,
    class_of: Vec<usize>,
}

impl ApproximationSpace {
    pub fn new(quotient: QuotientGroup) -> Self {
        let classes = quotient.group.conjugacy_classes();
        let mut class_of = vec![0; quotient.order()];
        for (id, c) in classes.iter().enumerate() {
            for x in c.iter() {
                class_of[x] = id;
            }
        }
        ApproximationSpace {
            quotient,
            classes,
            class_of,
        }
    }

    /// Space for `G/N`; fails unless `n` is a normal subgroup of `g`.
    pub fn from_normal(g: &FiniteGroup, n: &ElementSet) -> Result<Self> {
        Ok(Self::new(QuotientGroup::new(g, n)?))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.quotient.group
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.quotient.parent
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// `[xN]` for quotient element `x`.
    pub fn class_of(&self, x: usize) -> &ElementSet {
        &self.classes[self.class_of[x]]
    }

    fn check_subject(&self, s: &ElementSet) -> Result<()> {
        self.group().check_owns(s)?;
        if !s.contains(0) {
            return Err(Error::MissingIdentityCoset);
        }
        Ok(())
    }

    pub fn lower(&self, s: &ElementSet) -> Result<ElementSet> {
        self.check_subject(s)?;
        Ok(self.lower_unchecked(s))
    }

    pub fn upper(&self, s: &ElementSet) -> Result<ElementSet> {
        self.check_subject(s)?;
        Ok(self.upper_unchecked(s))
    }

    #[inline]
    pub(crate) fn lower_unchecked(&self, s: &ElementSet) -> ElementSet {
        self.classes
            .iter()
            .filter(|c| c.subset_of(s))
            .fold(self.group().empty_set(), |acc, c| acc.or(c))
    }

    #[inline]
    pub(crate) fn upper_unchecked(&self, s: &ElementSet) -> ElementSet {
        self.classes
            .iter()
            .filter(|c| c.meets(s))
            .fold(self.group().empty_set(), |acc, c| acc.or(c))
    }

    /// `H/N` for a parent subset `H ⊇ N`.
    pub fn project(&self, h: &ElementSet) -> Result<ElementSet> {
        self.quotient.project(h)
    }

    pub fn pair(&self, s: &ElementSet) -> Result<RoughPair> {
        Ok(RoughPair {
            subject: *s,
            lower: self.lower(s)?,
            upper: self.upper(s)?,
        })
    }

    pub fn classify(&self, s: &ElementSet) -> Result<RoughClassification> {
        let pair = self.pair(s)?;
        Ok(RoughClassification::of(self.group(), &pair))
    }

    /// JSON-ready rendering of a pair and its classification.
    pub fn report(&self, s: &ElementSet) -> Result<RoughPairReport> {
        let pair = self.pair(s)?;
        let class = RoughClassification::of(self.group(), &pair);
        let q = self.group();
        Ok(RoughPairReport {
            subject: q.set_labels(&pair.subject),
            lower: q.set_labels(&pair.lower),
            upper: q.set_labels(&pair.upper),
            is_rough: pair.is_rough(),
            flags: class,
        })
    }
}

/// `(lower, upper)` of a subject `H/N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoughPair {
    pub subject: ElementSet,
    pub lower: ElementSet,
    pub upper: ElementSet,
}

impl RoughPair {
    pub fn is_rough(&self) -> bool {
        self.lower != self.upper
    }
}

/// Subgroup/normality flags of both approximations. The raw flags are
/// reported even when the pair is not rough; `labels` only names the
/// rough-subgroup kinds that apply when it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughClassification {
    pub upper_is_subgroup: bool,
    pub upper_is_normal: bool,
    pub lower_is_subgroup: bool,
    pub lower_is_normal: bool,
    pub is_rough: bool,
    pub labels: Vec<String>,
}

impl RoughClassification {
    pub fn of(quotient: &FiniteGroup, pair: &RoughPair) -> Self {
        let upper_is_subgroup = quotient.is_subgroup(&pair.upper);
        let upper_is_normal = upper_is_subgroup && quotient.is_normal(&pair.upper);
        let lower_is_subgroup = quotient.is_subgroup(&pair.lower);
        let lower_is_normal = lower_is_subgroup && quotient.is_normal(&pair.lower);
        let is_rough = pair.is_rough();
        let mut labels = Vec::new();
        if is_rough {
            let kinds = [
                ("upper rough subgroup", upper_is_subgroup),
                ("upper rough normal subgroup", upper_is_normal),
                ("lower rough subgroup", lower_is_subgroup),
                ("lower rough normal subgroup", lower_is_normal),
                ("rough subgroup", upper_is_subgroup && lower_is_subgroup),
                ("rough normal subgroup", upper_is_normal && lower_is_normal),
            ];
            labels = kinds
                .iter()
                .filter(|(_, on)| *on)
                .map(|(l, _)| l.to_string())
                .collect();
        }
        RoughClassification {
            upper_is_subgroup,
            upper_is_normal,
            lower_is_subgroup,
            lower_is_normal,
            is_rough,
            labels,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughPairReport {
    pub subject: Vec<String>,
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub is_rough: bool,
    pub flags: RoughClassification,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_group;

    fn s4_space() -> (FiniteGroup, ElementSet, ApproximationSpace) {
        let s4 = builtin_group("S4").unwrap();
        let v4 = s4.parse_set(&["I", "(12)(34)", "(13)(24)", "(14)(23)"]).unwrap();
        let space = ApproximationSpace::from_normal(&s4, &v4).unwrap();
        (s4, v4, space)
    }

    #[test]
    fn s4_mod_v4_classes() {
        let (_, _, space) = s4_space();
        let q = space.group();
        let labels: Vec<Vec<String>> = space.classes().iter().map(|c| q.set_labels(c)).collect();
        assert_eq!(
            labels,
            vec![
                vec!["N".to_string()],
                vec!["(1234)N".into(), "(1243)N".into(), "(1324)N".into()],
                vec!["(123)N".into(), "(124)N".into()],
            ]
        );
        let c = space.class_of(space.quotient.parse_element("(123)N").unwrap());
        assert!(c.contains(space.quotient.parse_element("(132)N").unwrap()));
    }

    #[test]
    fn abelian_quotients_have_singleton_classes() {
        let a4 = builtin_group("A4").unwrap();
        let v4 = a4.parse_set(&["I", "(12)(34)", "(13)(24)", "(14)(23)"]).unwrap();
        let space = ApproximationSpace::from_normal(&a4, &v4).unwrap();
        assert_eq!(space.classes().len(), 3);
        assert!(space.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn s4_order_eight_subgroup_pair() {
        let (s4, v4, space) = s4_space();
        let h = v4.or(&s4.parse_set(&["(12)", "(34)", "(1324)", "(1423)"]).unwrap());
        let s = space.project(&h).unwrap();
        let pair = space.pair(&s).unwrap();
        let q = space.group();
        assert_eq!(q.set_labels(&pair.lower), ["N"]);
        assert_eq!(q.set_labels(&pair.upper), ["N", "(1234)N", "(1243)N", "(1324)N"]);
        assert!(pair.is_rough());
        let c = space.classify(&s).unwrap();
        assert!(c.lower_is_normal);
        assert!(!c.upper_is_subgroup);
        assert_eq!(c.labels, ["lower rough subgroup", "lower rough normal subgroup"]);
    }

    #[test]
    fn whole_and_identity_subjects() {
        let (_, _, space) = s4_space();
        let q = space.group();
        let full = q.full_set();
        assert_eq!(space.lower(&full).unwrap(), full);
        assert!(!space.pair(&full).unwrap().is_rough());
        let n = q.identity_set();
        assert_eq!(space.upper(&n).unwrap(), n);
        assert_eq!(space.lower(&n).unwrap(), n);
    }

    #[test]
    fn normal_subject_is_exact() {
        let (s4, _, space) = s4_space();
        let a4 = s4.normal_subgroups().unwrap()[2];
        let s = space.project(&a4).unwrap();
        let c = space.classify(&s).unwrap();
        assert!(!c.is_rough);
        assert!(c.labels.is_empty());
        assert!(c.lower_is_normal && c.upper_is_normal);
    }

    #[test]
    fn q8_pair_is_exact_but_not_a_subgroup() {
        let q8 = builtin_group("Q8").unwrap();
        let n = q8.parse_set(&["1", "-1"]).unwrap();
        let space = ApproximationSpace::from_normal(&q8, &n).unwrap();
        let s = space.project(&q8.parse_set(&["1", "-1", "i", "j"]).unwrap()).unwrap();
        let c = space.classify(&s).unwrap();
        assert!(!c.is_rough);
        assert!(!c.lower_is_subgroup && !c.upper_is_subgroup);
        let pair = space.pair(&s).unwrap();
        assert_eq!(pair.lower, s);
        assert_eq!(pair.upper, s);
    }

    #[test]
    fn subject_without_identity_is_rejected() {
        let (_, _, space) = s4_space();
        let s = space.group().set_of([1]);
        assert_eq!(space.lower(&s), Err(Error::MissingIdentityCoset));
        assert_eq!(space.upper(&s), Err(Error::MissingIdentityCoset));
        let other = builtin_group("Z6").unwrap().full_set();
        assert_eq!(space.lower(&other), Err(Error::ParentMismatch));
    }
}
