//! Definition-direct reference computations. Everything here works from the
//! raw Cayley table with plain `BTreeSet`s and never calls the library's
//! quotient, class or approximation code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use roughgroup::{ElementSet, FiniteGroup};

pub type Set = BTreeSet<usize>;

pub struct Oracle {
    pub n: usize,
    table: Vec<Vec<usize>>,
    pub e: usize,
    inv: Vec<usize>,
}

impl Oracle {
    pub fn new(g: &FiniteGroup) -> Self {
        let table = g.table();
        let n = table.len();
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .expect("identity");
        let inv = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == e).expect("inverse"))
            .collect();
        Oracle { n, table, e, inv }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_associative(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| (0..self.n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    pub fn is_subgroup(&self, s: &Set) -> bool {
        s.contains(&self.e)
            && s.iter().all(|&x| s.contains(&self.inv(x)))
            && s.iter().all(|&x| s.iter().all(|&y| s.contains(&self.mul(x, y))))
    }

    pub fn is_normal(&self, s: &Set) -> bool {
        self.is_subgroup(s)
            && (0..self.n).all(|a| s.iter().all(|&x| s.contains(&self.mul(self.mul(a, x), self.inv(a)))))
    }

    /// All subgroups by scanning every subset containing the identity.
    pub fn subgroups_by_power_set(&self) -> Vec<Set> {
        assert!(self.n <= 16, "power-set oracle is for tiny groups");
        let others: Vec<usize> = (0..self.n).filter(|&x| x != self.e).collect();
        (0u32..1 << others.len())
            .map(|mask| {
                let mut s: Set = others
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &x)| x)
                    .collect();
                s.insert(self.e);
                s
            })
            .filter(|s| self.is_subgroup(s))
            .collect()
    }

    pub fn coset(&self, x: usize, n: &Set) -> Set {
        n.iter().map(|&m| self.mul(x, m)).collect()
    }

    /// `H/N` as a set of cosets.
    pub fn project(&self, h: &Set, n: &Set) -> BTreeSet<Set> {
        h.iter().map(|&x| self.coset(x, n)).collect()
    }

    /// `{xN : (a x a⁻¹)N ∈ H/N for every a}` by a double loop over `G`.
    pub fn lower(&self, n: &Set, h: &Set) -> BTreeSet<Set> {
        let hn = self.project(h, n);
        (0..self.n)
            .filter(|&x| (0..self.n).all(|a| hn.contains(&self.coset(self.conj(a, x), n))))
            .map(|x| self.coset(x, n))
            .collect()
    }

    /// `{xN : (a x a⁻¹)N ∈ H/N for some a}`
    pub fn upper(&self, n: &Set, h: &Set) -> BTreeSet<Set> {
        let hn = self.project(h, n);
        (0..self.n)
            .filter(|&x| (0..self.n).any(|a| hn.contains(&self.coset(self.conj(a, x), n))))
            .map(|x| self.coset(x, n))
            .collect()
    }

    fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(a, x), self.inv(a))
    }

    /// Is the set of cosets closed under coset multiplication and inverses?
    pub fn cosets_form_subgroup(&self, cosets: &BTreeSet<Set>, n: &Set) -> bool {
        let reps: Vec<usize> = cosets.iter().map(|c| *c.iter().next().unwrap()).collect();
        cosets.contains(n)
            && reps.iter().all(|&x| {
                cosets.contains(&self.coset(self.inv(x), n))
                    && reps.iter().all(|&y| cosets.contains(&self.coset(self.mul(x, y), n)))
            })
    }

    /// Multiplicativity of an index map between two tables.
    pub fn is_hom(&self, target: &Oracle, map: &[usize]) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| map[self.mul(x, y)] == target.mul(map[x], map[y])))
    }
}

pub fn set(s: &ElementSet) -> Set {
    s.iter().collect()
}

/// Quotient-group set (indices into `G/N`) as a set of cosets of `G`.
pub fn as_cosets(q: &roughgroup::QuotientGroup, s: &ElementSet) -> BTreeSet<Set> {
    s.iter().map(|c| set(&q.coset_members(c))).collect()
}

pub fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}
