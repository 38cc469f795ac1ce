//! Coset partitions and quotient groups `G/N`, plus the correspondence
//! between subsets of `G` containing `N` and subsets of `G/N`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::set::ElementSet;

/// Left cosets of a normal subgroup. Cosets are numbered by increasing
/// representative, and each representative is the smallest index in its
/// coset, so coset 0 is `N` itself.
#[derive(Debug, Clone)]
pub struct CosetPartition {
    pub normal: ElementSet,
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
}

impl CosetPartition {
    pub fn new(g: &FiniteGroup, n: &ElementSet) -> Result<Self> {
        g.check_owns(n)?;
        if !g.is_subgroup(n) {
            return Err(Error::NotSubgroup);
        }
        if let Some(a) = g.normality_witness(n) {
            return Err(Error::NotNormal {
                witness: g.label(a).to_owned(),
            });
        }
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::with_capacity(g.order() / n.len());
        for x in 0..g.order() {
            if coset_of[x] == usize::MAX {
                let id = reps.len();
                reps.push(x);
                for m in n.iter() {
                    coset_of[g.mul(x, m)] = id;
                }
            }
        }
        Ok(CosetPartition {
            normal: *n,
            reps,
            coset_of,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// `G/N` as a group, keeping the link back to `G`.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub group: FiniteGroup,
    pub parent: FiniteGroup,
    pub partition: CosetPartition,
}

impl QuotientGroup {
    /// Quotient with cosets labelled `N`, `iN`, `(1324)N`, …
    pub fn new(g: &FiniteGroup, n: &ElementSet) -> Result<Self> {
        Self::named(g, n, "N")
    }

    /// Quotient whose identity coset is labelled `symbol` and whose other
    /// cosets are labelled `<rep>symbol`; compound symbols get parentheses,
    /// e.g. `(123)N(K/N)`.
    pub fn named(g: &FiniteGroup, n: &ElementSet, symbol: &str) -> Result<Self> {
        let partition = CosetPartition::new(g, n)?;
        let k = partition.len();
        let mut table = vec![0u8; k * k];
        for (i, &x) in partition.reps.iter().enumerate() {
            for (j, &y) in partition.reps.iter().enumerate() {
                table[i * k + j] = partition.coset_of[g.mul(x, y)] as u8;
            }
        }
        let inverse = partition
            .reps
            .iter()
            .map(|&x| partition.coset_of[g.inv(x)] as u8)
            .collect();
        let suffix = if symbol.chars().all(char::is_alphanumeric) {
            symbol.to_owned()
        } else {
            format!("({symbol})")
        };
        let labels = partition
            .reps
            .iter()
            .map(|&x| {
                if x == 0 {
                    symbol.to_owned()
                } else {
                    format!("{}{suffix}", g.label(x))
                }
            })
            .collect();
        let group = FiniteGroup::from_parts(
            format!("{}/{}", g.name(), symbol),
            table,
            inverse,
            labels,
            None,
        )?;
        Ok(QuotientGroup {
            group,
            parent: g.clone(),
            partition,
        })
    }

    pub fn normal(&self) -> &ElementSet {
        &self.partition.normal
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Coset (quotient element index) containing parent element `x`.
    #[inline]
    pub fn coset_of(&self, x: usize) -> usize {
        self.partition.coset_of[x]
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.partition.reps[coset]
    }

    /// Members of one coset, as a parent set.
    pub fn coset_members(&self, coset: usize) -> ElementSet {
        let x = self.rep(coset);
        self.parent
            .set_of(self.normal().iter().map(|m| self.parent.mul(x, m)))
    }

    /// `H/N = {hN : h ∈ H}`; requires `N ⊆ H`.
    pub fn project(&self, h: &ElementSet) -> Result<ElementSet> {
        self.parent.check_owns(h)?;
        if !self.normal().subset_of(h) {
            return Err(Error::MissingKernel);
        }
        Ok(self.project_unchecked(h))
    }

    #[inline]
    pub(crate) fn project_unchecked(&self, h: &ElementSet) -> ElementSet {
        let mut out = self.group.empty_set();
        for x in h.iter() {
            out.insert(self.coset_of(x));
        }
        out
    }

    /// Union of the given cosets, as a parent set.
    pub fn lift(&self, s: &ElementSet) -> Result<ElementSet> {
        self.group.check_owns(s)?;
        Ok(self.lift_unchecked(s))
    }

    pub(crate) fn lift_unchecked(&self, s: &ElementSet) -> ElementSet {
        let mut out = self.parent.empty_set();
        for x in 0..self.parent.order() {
            if s.contains(self.coset_of(x)) {
                out.insert(x);
            }
        }
        out
    }

    /// Smallest union of cosets containing `h`.
    pub fn saturate(&self, h: &ElementSet) -> ElementSet {
        self.lift_unchecked(&self.project_unchecked(h))
    }

    /// Parse a quotient element: either its own label (`(1324)N`) or any
    /// parent element label with the quotient's suffix (`(4231)N`, `-iN`),
    /// or a bare parent element label.
    pub fn parse_element(&self, label: &str) -> Result<usize> {
        let label = label.trim();
        if let Ok(i) = self.group.parse_element(label) {
            return Ok(i);
        }
        let ident = self.group.label(0);
        let bare = label.strip_suffix(ident).unwrap_or(label);
        let bare = if ident.chars().all(char::is_alphanumeric) {
            bare
        } else {
            label
                .strip_suffix(&format!("({ident})"))
                .unwrap_or(label)
        };
        self.parent
            .parse_element(bare)
            .map(|x| self.coset_of(x))
            .map_err(|_| Error::UnknownLabel(label.to_owned()))
    }

    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let mut s = self.group.empty_set();
        for l in labels {
            s.insert(self.parse_element(l.as_ref())?);
        }
        Ok(s)
    }
}
