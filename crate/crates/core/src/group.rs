//! Finite groups given by a complete multiplication table.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use crate::error::{Axiom, Error, Result};
use crate::perm::Permutation;
use crate::set::{ElementSet, GroupId, MAX_ORDER};

static NEXT_ID: AtomicU32 = AtomicU32::new(1);

/// A group element viewed through its group: index plus display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub index: usize,
    pub label: String,
}

/// An immutable finite group. Index 0 is always the identity.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    id: GroupId,
    name: String,
    order: usize,
    table: Vec<u8>,
    inverse: Vec<u8>,
    labels: Vec<String>,
    by_label: HashMap<String, usize>,
    // Set for permutation groups, so unnormalised cycle strings can be parsed.
    degree: Option<usize>,
}

impl FiniteGroup {
    /// Build a group from a Cayley table, checking every group axiom.
    ///
    /// `table[a][b]` is the index of `a·b`; index 0 must be the identity.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                limit: MAX_ORDER,
            });
        }
        if let Some(row) = table.iter().position(|r| r.len() != n) {
            return Err(Error::Shape(format!(
                "row {row} has {} entries, expected {n}",
                table[row].len()
            )));
        }
        if labels.len() != n {
            return Err(Error::Shape(format!(
                "{} labels for a table of order {n}",
                labels.len()
            )));
        }
        for (a, row) in table.iter().enumerate() {
            if let Some(b) = row.iter().position(|&x| x >= n) {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Closure,
                    witness: [a, b, row[b]],
                });
            }
        }
        let flat: Vec<u8> = table.iter().flatten().map(|&x| x as u8).collect();
        let mut inverse = vec![0u8; n];
        for a in 0..n {
            if flat[a] as usize != a || flat[a * n] as usize != a {
                return Err(Error::AxiomViolation {
                    axiom: Axiom::Identity,
                    witness: [0, a, a],
                });
            }
        }
        for a in 0..n {
            let row = &flat[a * n..(a + 1) * n];
            match row.iter().position(|&x| x == 0) {
                Some(b) if flat[b * n + a] == 0 => inverse[a] = b as u8,
                _ => {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::Inverse,
                        witness: [a, a, a],
                    })
                }
            }
        }
        let group = Self::from_parts("cayley".into(), flat, inverse, labels, None)?;
        if let Some(w) = group.associativity_witness() {
            return Err(Error::AxiomViolation {
                axiom: Axiom::Associativity,
                witness: w,
            });
        }
        Ok(group)
    }

    /// Assemble a group from a table already known to be a group (quotients,
    /// subgroups, catalog entries). Labels must still be unique.
    pub(crate) fn from_parts(
        name: String,
        table: Vec<u8>,
        inverse: Vec<u8>,
        labels: Vec<String>,
        degree: Option<usize>,
    ) -> Result<Self> {
        let order = labels.len();
        debug_assert_eq!(table.len(), order * order);
        let mut by_label = HashMap::with_capacity(order);
        for (i, l) in labels.iter().enumerate() {
            if by_label.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(FiniteGroup {
            inner: Arc::new(GroupData {
                id: GroupId(NEXT_ID.fetch_add(1, Ordering::Relaxed)),
                name,
                order,
                table,
                inverse,
                labels,
                by_label,
                degree,
            }),
        })
    }

    /// Same group with a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let d = &self.inner;
        FiniteGroup {
            inner: Arc::new(GroupData {
                id: d.id,
                name: name.into(),
                order: d.order,
                table: d.table.clone(),
                inverse: d.inverse.clone(),
                labels: d.labels.clone(),
                by_label: d.by_label.clone(),
                degree: d.degree,
            }),
        }
    }

    /// Closure of a set of permutations under composition.
    ///
    /// Composition applies the right factor first: `(f·g)(x) = f(g(x))`.
    /// Elements are ordered identity first, then by decreasing number of
    /// moved points, then by normalised cycle label, so the indexing does
    /// not depend on which generators were supplied.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let mut elements = vec![identity.clone()];
        seen.insert(identity, ());
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = elements[i].compose(g);
                if !seen.contains_key(&p) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::OrderTooLarge {
                            order: elements.len() + 1,
                            limit: MAX_ORDER,
                        });
                    }
                    seen.insert(p.clone(), ());
                    elements.push(p);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let mut keyed: Vec<(usize, String, Permutation)> = elements
            .into_iter()
            .map(|p| (p.support(), p.cycle_label(), p))
            .collect();
        keyed.sort_by(|a, b| {
            let ia = a.0 == 0;
            let ib = b.0 == 0;
            ib.cmp(&ia).then(b.0.cmp(&a.0)).then_with(|| a.1.cmp(&b.1))
        });
        let n = keyed.len();
        let index: HashMap<&Permutation, usize> =
            keyed.iter().enumerate().map(|(i, k)| (&k.2, i)).collect();
        let mut table = vec![0u8; n * n];
        let mut inverse = vec![0u8; n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&keyed[a].2.compose(&keyed[b].2)] as u8;
            }
            inverse[a] = index[&keyed[a].2.inverse()] as u8;
        }
        let labels = keyed.iter().map(|k| k.1.clone()).collect();
        Self::from_parts(
            format!("perm{degree}"),
            table,
            inverse,
            labels,
            Some(degree),
        )
    }

    pub fn id(&self) -> GroupId {
        self.inner.id
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a] as usize
    }

    /// `a·x·a⁻¹`
    #[inline]
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn element(&self, i: usize) -> GroupElement {
        GroupElement {
            index: i,
            label: self.label(i).to_owned(),
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    /// Multiplication table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.inner.degree
    }

    /// Look up an element by label. Permutation groups also accept any
    /// cycle notation for the element, e.g. `(3412)` for `(1234)`.
    pub fn parse_element(&self, label: &str) -> Result<usize> {
        let label = label.trim();
        if let Some(&i) = self.inner.by_label.get(label) {
            return Ok(i);
        }
        if let Some(degree) = self.inner.degree {
            if let Ok(p) = Permutation::parse_cycles(label, degree) {
                if let Some(&i) = self.inner.by_label.get(&p.cycle_label()) {
                    return Ok(i);
                }
            }
        }
        Err(Error::UnknownLabel(label.to_owned()))
    }

    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.parse_element(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn set_labels(&self, s: &ElementSet) -> Vec<String> {
        s.iter().map(|i| self.label(i).to_owned()).collect()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.id(), self.order())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.id(), self.order())
    }

    pub fn identity_set(&self) -> ElementSet {
        self.set_of([0])
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, items: I) -> ElementSet {
        ElementSet::from_indices(self.id(), self.order(), items)
    }

    pub fn owns(&self, s: &ElementSet) -> bool {
        s.group_id() == self.id()
    }

    pub(crate) fn check_owns(&self, s: &ElementSet) -> Result<()> {
        if self.owns(s) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Least `n ≥ 1` with `xⁿ = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `seeds`.
    pub fn generate_closure(&self, seeds: &ElementSet) -> ElementSet {
        let gens: Vec<usize> = seeds.iter().filter(|&x| x != 0).collect();
        self.closure_of(&gens)
    }

    pub(crate) fn closure_of(&self, gens: &[usize]) -> ElementSet {
        let mut out = self.identity_set();
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !out.contains(y) {
                    out.insert(y);
                    queue.push(y);
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Re-run the full axiom scan; `None` means the table is a group.
    pub fn axiom_violation(&self) -> Option<(Axiom, [usize; 3])> {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Some((Axiom::Identity, [0, a, a]));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Some((Axiom::Inverse, [a, self.inv(a), 0]));
            }
        }
        self.associativity_witness()
            .map(|w| (Axiom::Associativity, w))
    }

    fn associativity_witness(&self) -> Option<[usize; 3]> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name(), self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.table == other.inner.table && self.inner.labels == other.inner.labels
    }
}
