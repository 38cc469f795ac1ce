//! Subgroup and normality tests, set products, subgroup enumeration and
//! conjugacy classes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// Largest group order the subgroup enumeration (and hence the verifier)
/// accepts.
pub const ENUMERATION_LIMIT: usize = 48;

impl FiniteGroup {
    /// Nonempty, contains the identity, closed under products and inverses.
    /// Sets of another group are never subgroups.
    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        if !self.owns(s) || !s.contains(0) {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        members.iter().all(|&x| s.contains(self.inv(x)))
            && members
                .iter()
                .all(|&x| members.iter().all(|&y| s.contains(self.mul(x, y))))
    }

    /// An element `a` with `a·s·a⁻¹ ≠ s`, if any.
    pub fn normality_witness(&self, s: &ElementSet) -> Option<usize> {
        (0..self.order()).find(|&a| s.iter().any(|x| !s.contains(self.conjugate(a, x))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && self.normality_witness(s).is_none()
    }

    /// `{xy : x ∈ a, y ∈ b}`
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.check_owns(a)?;
        self.check_owns(b)?;
        Ok(self.product_unchecked(a, b))
    }

    pub(crate) fn product_unchecked(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut out = self.empty_set();
        let bs: Vec<usize> = b.iter().collect();
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `{a·x·a⁻¹ : a ∈ G}`
    pub fn conjugacy_class(&self, x: usize) -> ElementSet {
        self.set_of((0..self.order()).map(|a| self.conjugate(a, x)))
    }

    /// Conjugacy classes ordered by smallest member; the identity's class
    /// comes first.
    pub fn conjugacy_classes(&self) -> Vec<ElementSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for x in 0..self.order() {
            if !seen.contains(x) {
                let c = self.conjugacy_class(x);
                seen = seen.or(&c);
                out.push(c);
            }
        }
        out
    }

    /// Every subgroup exactly once, sorted by size then lexicographically.
    pub fn all_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.all_subgroups_with(Execution::default())
    }

    /// Subgroups are grown by repeatedly adjoining a cyclic subgroup to an
    /// already-found one; every subgroup arises from a chain of such
    /// extensions, so the search is complete.
    pub fn all_subgroups_with(&self, exec: Execution) -> Result<Vec<ElementSet>> {
        if self.order() > ENUMERATION_LIMIT {
            return Err(Error::OrderTooLarge {
                order: self.order(),
                limit: ENUMERATION_LIMIT,
            });
        }
        let mut cyclic_gens = Vec::new();
        let mut cyclics = HashSet::new();
        for x in 1..self.order() {
            if cyclics.insert(self.closure_of(&[x])) {
                cyclic_gens.push(x);
            }
        }
        let trivial = self.identity_set();
        let mut found: HashSet<ElementSet> = HashSet::from([trivial]);
        let mut layer: Vec<(ElementSet, Vec<usize>)> = vec![(trivial, Vec::new())];
        while !layer.is_empty() {
            let grown = exec.map(&layer, |(s, gens)| {
                cyclic_gens
                    .iter()
                    .filter(|&&c| !s.contains(c))
                    .map(|&c| {
                        let mut g = gens.clone();
                        g.push(c);
                        (self.closure_of(&g), g)
                    })
                    .collect::<Vec<_>>()
            });
            layer = grown
                .into_iter()
                .flatten()
                .filter(|(t, _)| found.insert(*t))
                .collect();
        }
        let mut out: Vec<ElementSet> = found.into_iter().collect();
        out.sort();
        Ok(out)
    }

    pub fn normal_subgroups(&self) -> Result<Vec<ElementSet>> {
        Ok(self
            .all_subgroups()?
            .into_iter()
            .filter(|s| self.normality_witness(s).is_none())
            .collect())
    }
}

/// A subgroup realised as a group in its own right. Elements keep their
/// parent labels and parent index order, so the identity stays at index 0.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FiniteGroup,
    pub parent: FiniteGroup,
    embedding: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl Subgroup {
    pub fn new(parent: &FiniteGroup, s: &ElementSet, name: impl Into<String>) -> Result<Self> {
        if !parent.is_subgroup(s) {
            return Err(Error::NotSubgroup);
        }
        let embedding: Vec<usize> = s.iter().collect();
        let mut position = vec![None; parent.order()];
        for (i, &x) in embedding.iter().enumerate() {
            position[x] = Some(i);
        }
        let n = embedding.len();
        let pos = |x: usize| position[x].expect("closed under product") as u8;
        let mut table = vec![0u8; n * n];
        for (a, &x) in embedding.iter().enumerate() {
            for (b, &y) in embedding.iter().enumerate() {
                table[a * n + b] = pos(parent.mul(x, y));
            }
        }
        let inverse = embedding.iter().map(|&x| pos(parent.inv(x))).collect();
        let labels = embedding.iter().map(|&x| parent.label(x).to_owned()).collect();
        let group = FiniteGroup::from_parts(name.into(), table, inverse, labels, parent.degree())?;
        Ok(Subgroup {
            group,
            parent: parent.clone(),
            embedding,
            position,
        })
    }

    pub fn to_parent(&self, i: usize) -> usize {
        self.embedding[i]
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.position[x]
    }

    /// The part of a parent set lying in the subgroup, as a subgroup set.
    pub fn restrict(&self, s: &ElementSet) -> ElementSet {
        self.group
            .set_of(s.iter().filter_map(|x| self.position[x]))
    }

    pub fn lift(&self, s: &ElementSet) -> ElementSet {
        self.parent.set_of(s.iter().map(|i| self.embedding[i]))
    }
}
