//! Verified homomorphisms between finite groups, and the maps induced
//! between quotients and between lower approximations.

use serde::{Deserialize, Serialize};

use crate::approximation::ApproximationSpace;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quotient::{CosetPartition, QuotientGroup};
use crate::set::ElementSet;
use crate::subsets::Subgroup;

/// A total map between two groups, checked multiplicative on every pair.
#[derive(Debug, Clone)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::MapShape);
        }
        if let Some((x, y)) = multiplicativity_witness(source, target, &map) {
            return Err(Error::NotHomomorphism {
                x: source.label(x).to_owned(),
                y: source.label(y).to_owned(),
            });
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> ElementSet {
        self.source
            .set_of((0..self.source.order()).filter(|&x| self.map[x] == 0))
    }

    pub fn image(&self) -> ElementSet {
        self.target.set_of(self.map.iter().copied())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if self.target.id() != other.source.id() {
            return Err(Error::ParentMismatch);
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        })
    }

    pub fn report(&self) -> HomReport {
        HomReport {
            source: self.source.name().to_owned(),
            target: self.target.name().to_owned(),
            map: self.map.clone(),
            kernel: self.source.set_labels(&self.kernel()),
            surjective: self.is_surjective(),
        }
    }
}

/// Alias for [`GroupHom::new`].
pub fn make_hom(source: &FiniteGroup, target: &FiniteGroup, map: Vec<usize>) -> Result<GroupHom> {
    GroupHom::new(source, target, map)
}

fn multiplicativity_witness(
    source: &FiniteGroup,
    target: &FiniteGroup,
    map: &[usize],
) -> Option<(usize, usize)> {
    if map.first().is_some_and(|&e| e != 0) {
        return Some((0, 0));
    }
    let n = source.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| map[source.mul(x, y)] != target.mul(map[x], map[y]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
    pub kernel: Vec<String>,
    pub surjective: bool,
}

impl QuotientGroup {
    /// `x ↦ xN`
    pub fn projection(&self) -> GroupHom {
        GroupHom {
            source: self.parent.clone(),
            target: self.group.clone(),
            map: (0..self.parent.order()).map(|x| self.coset_of(x)).collect(),
        }
    }
}

pub fn natural_projection(g: &FiniteGroup, n: &ElementSet) -> Result<GroupHom> {
    Ok(QuotientGroup::new(g, n)?.projection())
}

/// `G/N → G/M, xN ↦ xM` for quotients of the same group with `N ⊆ M`.
pub fn induced_hom(from: &QuotientGroup, to: &QuotientGroup) -> Result<GroupHom> {
    if from.parent.id() != to.parent.id() {
        return Err(Error::ParentMismatch);
    }
    if !from.normal().subset_of(to.normal()) {
        return Err(Error::NotNested);
    }
    let map = from
        .partition
        .reps
        .iter()
        .map(|&x| to.coset_of(x))
        .collect();
    GroupHom::new(&from.group, &to.group, map)
}

pub fn refinement_hom(g: &FiniteGroup, n: &ElementSet, m: &ElementSet) -> Result<GroupHom> {
    let from = QuotientGroup::new(g, n)?;
    let to = QuotientGroup::new(g, m)?;
    induced_hom(&from, &to)
}

/// Brute-force isomorphism search: map a small generating sequence of `a`
/// to elements of matching order in `b`, backtracking on conflicts.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let orders_a: Vec<usize> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let orders_b: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    let (mut sa, mut sb) = (orders_a.clone(), orders_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut by_order: Vec<usize> = (1..a.order()).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(orders_a[x]));
    let mut gens = Vec::new();
    let mut span = a.identity_set();
    for x in by_order {
        if !span.contains(x) {
            gens.push(x);
            span = a.closure_of(&gens);
        }
    }
    let mut images = Vec::with_capacity(gens.len());
    let map = search(a, b, &gens, &orders_a, &orders_b, &mut images)?;
    GroupHom::new(a, b, map).ok()
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    orders_a: &[usize],
    orders_b: &[usize],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        return extend(a, b, &gens[..k], images).filter(|m| m.iter().all(|&y| y != usize::MAX));
    }
    for y in 1..b.order() {
        if orders_b[y] != orders_a[gens[k]] {
            continue;
        }
        images.push(y);
        if extend(a, b, &gens[..=k], images).is_some() {
            if let Some(m) = search(a, b, gens, orders_a, orders_b, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// Extend a generator assignment over the generated subgroup along the
/// Cayley graph; `None` if two paths disagree or two elements collide.
fn extend(a: &FiniteGroup, b: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let fy = b.mul(map[x], img);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn failed(clause: &str, detail: impl Into<String>) -> Error {
    Error::PropertyFailed {
        clause: clause.to_owned(),
        detail: detail.into(),
    }
}

/// Everything built for one `N ⊆ M ⊆ H` instance: `K/N` and `T/M` are the
/// lower approximations of `H/N` and `H/M`, with `K`, `T` their lifts.
#[derive(Debug, Clone)]
pub struct Theorem8Data {
    pub k: ElementSet,
    pub t: ElementSet,
    /// `(G/N)/(K/N) → (G/M)/(T/M)`
    pub psi1: GroupHom,
    /// `(H/N)/(K/N) → (H/M)/(T/M)`
    pub psi2: GroupHom,
    /// `K/N → T/M`
    pub phi: GroupHom,
    /// `M/N` inside the source of `phi`.
    pub phi_expected_kernel: ElementSet,
    pub g_mod_k_to_g_mod_t: GroupHom,
    pub h_mod_k_to_h_mod_t: GroupHom,
    pub k_mod_m_to_t_mod_m: GroupHom,
}

/// Build and verify every map of the `N ⊆ M ⊆ H` construction. A failed
/// verification surfaces as [`Error::PropertyFailed`] naming the clause
/// (`"1"` … `"4"`).
pub fn theorem8_data(
    g: &FiniteGroup,
    n: &ElementSet,
    m: &ElementSet,
    h: &ElementSet,
) -> Result<Theorem8Data> {
    g.check_owns(h)?;
    let space_n = ApproximationSpace::from_normal(g, n)?;
    let space_m = ApproximationSpace::from_normal(g, m)?;
    theorem8_with(&space_n, &space_m, h)
}

/// As [`theorem8_data`], reusing prebuilt spaces for `G/N` and `G/M`.
pub fn theorem8_with(
    space_n: &ApproximationSpace,
    space_m: &ApproximationSpace,
    h: &ElementSet,
) -> Result<Theorem8Data> {
    let (qn, qm) = (&space_n.quotient, &space_m.quotient);
    let g = &qn.parent;
    if qm.parent.id() != g.id() {
        return Err(Error::ParentMismatch);
    }
    let (n, m) = (qn.normal(), qm.normal());
    if !n.subset_of(m) {
        return Err(Error::NotNested);
    }
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroupH);
    }
    if !m.subset_of(h) {
        return Err(Error::PreconditionM);
    }

    let h_n = qn.project_unchecked(h);
    let h_m = qm.project_unchecked(h);
    let k_n = space_n.lower_unchecked(&h_n);
    let t_m = space_m.lower_unchecked(&h_m);
    let k = qn.lift_unchecked(&k_n);
    let t = qm.lift_unchecked(&t_m);
    if !qn.group.is_normal(&k_n) || !qm.group.is_normal(&t_m) {
        return Err(failed("1", "lower approximation is not a normal subgroup"));
    }
    if !(n.subset_of(&k) && k.subset_of(h) && m.subset_of(&t) && t.subset_of(h)) {
        return Err(failed("1", "lifts are not sandwiched between N, M and H"));
    }

    // (1) (G/N)/(K/N) → (G/M)/(T/M)
    let qq_n = QuotientGroup::named(&qn.group, &k_n, "K/N")?;
    let qq_m = QuotientGroup::named(&qm.group, &t_m, "T/M")?;
    let map = qq_n
        .partition
        .reps
        .iter()
        .map(|&c| qq_m.coset_of(qm.coset_of(qn.rep(c))))
        .collect();
    let psi1 = GroupHom::new(&qq_n.group, &qq_m.group, map).map_err(|e| failed("1", e.to_string()))?;
    if !psi1.is_isomorphism() {
        return Err(failed("1", "psi is not bijective"));
    }
    let g_k = QuotientGroup::named(g, &k, "K")?;
    let g_t = QuotientGroup::named(g, &t, "T")?;
    let g_mod_k_to_g_mod_t = find_isomorphism(&g_k.group, &g_t.group)
        .ok_or_else(|| failed("1", "G/K and G/T are not isomorphic"))?;

    // (2) (H/N)/(K/N) → (H/M)/(T/M)
    let sub_hn = Subgroup::new(&qn.group, &h_n, "H/N")?;
    let sub_hm = Subgroup::new(&qm.group, &h_m, "H/M")?;
    let qh_n = QuotientGroup::named(&sub_hn.group, &sub_hn.restrict(&k_n), "K/N")?;
    let qh_m = QuotientGroup::named(&sub_hm.group, &sub_hm.restrict(&t_m), "T/M")?;
    let map = qh_n
        .partition
        .reps
        .iter()
        .map(|&c| {
            let x = qn.rep(sub_hn.to_parent(c));
            sub_hm
                .from_parent(qm.coset_of(x))
                .map(|i| qh_m.coset_of(i))
                .ok_or_else(|| failed("2", "xM outside H/M"))
        })
        .collect::<Result<Vec<_>>>()?;
    let psi2 = GroupHom::new(&qh_n.group, &qh_m.group, map).map_err(|e| failed("2", e.to_string()))?;
    if !psi2.is_isomorphism() {
        return Err(failed("2", "psi is not bijective"));
    }
    let sub_h = Subgroup::new(g, h, "H")?;
    let h_k = QuotientGroup::named(&sub_h.group, &sub_h.restrict(&k), "K")?;
    let h_t = QuotientGroup::named(&sub_h.group, &sub_h.restrict(&t), "T")?;
    let h_mod_k_to_h_mod_t = find_isomorphism(&h_k.group, &h_t.group)
        .ok_or_else(|| failed("2", "H/K and H/T are not isomorphic"))?;

    // (3) K/N → T/M, onto, kernel M/N
    if !m.subset_of(&k) {
        return Err(failed("3", "M is not contained in K"));
    }
    let sub_kn = Subgroup::new(&qn.group, &k_n, "K/N")?;
    let sub_tm = Subgroup::new(&qm.group, &t_m, "T/M")?;
    let map = (0..sub_kn.group.order())
        .map(|i| {
            let x = qn.rep(sub_kn.to_parent(i));
            sub_tm
                .from_parent(qm.coset_of(x))
                .ok_or_else(|| failed("3", format!("{}M is outside T/M", g.label(x))))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi = GroupHom::new(&sub_kn.group, &sub_tm.group, map).map_err(|e| failed("3", e.to_string()))?;
    let phi_expected_kernel = sub_kn.restrict(&qn.project_unchecked(m));
    if !phi.is_surjective() {
        return Err(failed("3", "phi is not onto"));
    }
    if phi.kernel() != phi_expected_kernel {
        return Err(failed(
            "3",
            format!(
                "kernel {:?} differs from M/N {:?}",
                sub_kn.group.set_labels(&phi.kernel()),
                sub_kn.group.set_labels(&phi_expected_kernel)
            ),
        ));
    }

    // (4) K/M ≅ T/M
    let k_m = qm.project_unchecked(&k);
    let sub_km = Subgroup::new(&qm.group, &k_m, "K/M").map_err(|e| failed("4", e.to_string()))?;
    let k_mod_m_to_t_mod_m = find_isomorphism(&sub_km.group, &sub_tm.group)
        .ok_or_else(|| failed("4", "K/M and T/M are not isomorphic"))?;

    Ok(Theorem8Data {
        k,
        t,
        psi1,
        psi2,
        phi,
        phi_expected_kernel,
        g_mod_k_to_g_mod_t,
        h_mod_k_to_h_mod_t,
        k_mod_m_to_t_mod_m,
    })
}

/// Maps between lower approximations for normal `N`, `M` inside a subgroup
/// `H`, with `I = N ∩ M` and `P = NM`.
#[derive(Debug, Clone)]
pub struct CorollaryChain {
    pub intersection: ElementSet,
    pub product: ElementSet,
    /// `lower(H/I) → lower(H/N)`, kernel `N/I`
    pub alpha: GroupHom,
    /// `lower(H/N) → lower(H/P)`, kernel `P/N`
    pub beta: GroupHom,
    /// `lower(H/I) → lower(H/P)`, kernel `P/I`
    pub gamma: GroupHom,
}

pub fn corollary_chain(
    g: &FiniteGroup,
    n: &ElementSet,
    m: &ElementSet,
    h: &ElementSet,
) -> Result<CorollaryChain> {
    g.check_owns(h)?;
    let space_n = ApproximationSpace::from_normal(g, n)?;
    CosetPartition::new(g, m)?;
    let i = n.intersection(m)?;
    let p = g.set_product(n, m)?;
    let space_i = ApproximationSpace::from_normal(g, &i)?;
    let space_p = ApproximationSpace::from_normal(g, &p)?;
    corollary_chain_with(&space_i, &space_n, &space_p, h)
}

/// As [`corollary_chain`], from prebuilt spaces for `G/I`, `G/N`, `G/P`.
pub fn corollary_chain_with(
    space_i: &ApproximationSpace,
    space_n: &ApproximationSpace,
    space_p: &ApproximationSpace,
    h: &ElementSet,
) -> Result<CorollaryChain> {
    let g = space_n.parent();
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroupH);
    }
    let (i, n, p) = (
        *space_i.quotient.normal(),
        *space_n.quotient.normal(),
        *space_p.quotient.normal(),
    );
    if !(i.subset_of(&n) && n.subset_of(&p)) {
        return Err(Error::NotNested);
    }
    if !p.subset_of(h) {
        return Err(Error::PreconditionM);
    }
    let lower_i = LowerGroup::new(space_i, h)?;
    let lower_n = LowerGroup::new(space_n, h)?;
    let lower_p = LowerGroup::new(space_p, h)?;
    let alpha = lower_map(&lower_i, &lower_n, &n, "1")?;
    let beta = lower_map(&lower_n, &lower_p, &p, "2")?;
    let gamma = lower_map(&lower_i, &lower_p, &p, "3")?;
    if alpha.then(&beta)?.map() != gamma.map() {
        return Err(failed("3", "composite differs from the direct map"));
    }
    Ok(CorollaryChain {
        intersection: i,
        product: p,
        alpha,
        beta,
        gamma,
    })
}

struct LowerGroup<'a> {
    space: &'a ApproximationSpace,
    sub: Subgroup,
}

impl<'a> LowerGroup<'a> {
    fn new(space: &'a ApproximationSpace, h: &ElementSet) -> Result<Self> {
        let q = &space.quotient;
        let lower = space.lower_unchecked(&q.project_unchecked(h));
        let name = format!("lower({}/{})", "H", q.group.label(0));
        let sub = Subgroup::new(&q.group, &lower, name)?;
        Ok(LowerGroup { space, sub })
    }
}

/// `x·A ↦ x·B` between lower approximations, checked onto with kernel
/// `B/A` (the target's normal subgroup seen in the source quotient).
fn lower_map(from: &LowerGroup, to: &LowerGroup, kernel_of: &ElementSet, clause: &str) -> Result<GroupHom> {
    let (qf, qt) = (&from.space.quotient, &to.space.quotient);
    let g = &qf.parent;
    let map = (0..from.sub.group.order())
        .map(|i| {
            let x = qf.rep(from.sub.to_parent(i));
            to.sub.from_parent(qt.coset_of(x)).ok_or_else(|| {
                failed(clause, format!("image of {} is outside the target", g.label(x)))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = GroupHom::new(&from.sub.group, &to.sub.group, map).map_err(|e| failed(clause, e.to_string()))?;
    if !hom.is_surjective() {
        return Err(failed(clause, "map is not onto"));
    }
    let expected = from.sub.restrict(&qf.project_unchecked(kernel_of));
    if hom.kernel() != expected {
        return Err(failed(clause, "kernel differs from the expected quotient"));
    }
    Ok(hom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_group;

    #[test]
    fn identity_and_swap() {
        let z3 = builtin_group("Z3").unwrap();
        let id = GroupHom::identity(&z3);
        assert_eq!(id.kernel(), z3.identity_set());
        assert!(id.is_surjective() && id.is_isomorphism());
        assert!(GroupHom::new(&z3, &z3, vec![0, 1, 2]).is_ok());
        assert!(matches!(
            GroupHom::new(&z3, &z3, vec![1, 0, 2]),
            Err(Error::NotHomomorphism { .. })
        ));
        assert!(matches!(GroupHom::new(&z3, &z3, vec![0, 1]), Err(Error::MapShape)));
    }

    #[test]
    fn q8_onto_z2_through_center_quotient() {
        let q8 = builtin_group("Q8").unwrap();
        let n = q8.parse_set(&["1", "-1"]).unwrap();
        let q = QuotientGroup::new(&q8, &n).unwrap();
        let z2 = builtin_group("Z2").unwrap();
        // G/N = {N, iN, jN, kN} ≅ V4; kill jN and kN's difference: N,iN ↦ 0.
        let to_z2 = GroupHom::new(&q.group, &z2, vec![0, 0, 1, 1]).unwrap();
        let composite = q.projection().then(&to_z2).unwrap();
        assert_eq!(q8.set_labels(&composite.kernel()), ["1", "-1", "i", "-i"]);
        assert!(composite.is_surjective());
    }

    #[test]
    fn projections_and_refinements() {
        let s4 = builtin_group("S4").unwrap();
        let normals = s4.normal_subgroups().unwrap();
        let (e, v4, a4) = (normals[0], normals[1], normals[2]);
        let p = natural_projection(&s4, &v4).unwrap();
        assert_eq!(p.kernel(), v4);
        assert!(p.is_surjective());
        assert!(natural_projection(&s4, &e).unwrap().is_isomorphism());
        assert_eq!(natural_projection(&s4, &s4.full_set()).unwrap().kernel(), s4.full_set());

        let r = refinement_hom(&s4, &v4, &a4).unwrap();
        assert_eq!(r.source().order(), 6);
        assert_eq!(r.target().order(), 2);
        assert_eq!(r.kernel().len(), 3);
        assert!(refinement_hom(&s4, &v4, &v4).unwrap().is_isomorphism());
        assert_eq!(refinement_hom(&s4, &a4, &v4).unwrap_err(), Error::NotNested);
        let direct = refinement_hom(&s4, &e, &a4).unwrap();
        assert_eq!(direct.kernel().len(), 12);
    }

    #[test]
    fn isomorphism_search() {
        let v4 = builtin_group("klein4").unwrap();
        let z2z2 = builtin_group("direct_product(cyclic2,cyclic2)").unwrap();
        assert!(find_isomorphism(&z2z2, &v4).unwrap().is_isomorphism());
        let z4 = builtin_group("Z4").unwrap();
        assert!(find_isomorphism(&z4, &v4).is_none());
        let d4 = builtin_group("D4").unwrap();
        let q8 = builtin_group("Q8").unwrap();
        assert!(find_isomorphism(&d4, &q8).is_none());
        let s3 = builtin_group("S3").unwrap();
        let d3 = builtin_group("D3").unwrap();
        assert!(find_isomorphism(&s3, &d3).is_some());
        let s4 = builtin_group("S4").unwrap();
        let quotient = QuotientGroup::new(&s4, &s4.normal_subgroups().unwrap()[1]).unwrap();
        assert!(find_isomorphism(&quotient.group, &s3).is_some());
    }

    #[test]
    fn nested_chain_s4() {
        let s4 = builtin_group("S4").unwrap();
        let normals = s4.normal_subgroups().unwrap();
        let (v4, a4) = (normals[1], normals[2]);
        let d = theorem8_data(&s4, &v4, &a4, &a4).unwrap();
        assert_eq!(d.k, a4);
        assert_eq!(d.t, a4);
        assert_eq!(d.psi1.source().order(), 2);
        assert!(d.psi1.is_isomorphism());
        assert_eq!(d.phi.source().order(), 3);
        assert_eq!(d.phi.target().order(), 1);
        assert_eq!(d.phi.kernel().len(), 3);
        assert_eq!(d.phi.kernel(), d.phi_expected_kernel);

        assert_eq!(theorem8_data(&s4, &a4, &v4, &a4).unwrap_err(), Error::NotNested);
        let h = s4
            .parse_set(&["I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"])
            .unwrap();
        assert_eq!(theorem8_data(&s4, &v4, &a4, &h).unwrap_err(), Error::PreconditionM);
        let not_sub = v4.or(&s4.parse_set(&["(12)"]).unwrap());
        assert_eq!(theorem8_data(&s4, &v4, &v4, &not_sub).unwrap_err(), Error::NotSubgroupH);
    }

    #[test]
    fn nested_chain_degenerate() {
        let s4 = builtin_group("S4").unwrap();
        let v4 = s4.normal_subgroups().unwrap()[1];
        let h = s4
            .parse_set(&["I", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(34)", "(1324)", "(1423)"])
            .unwrap();
        let d = theorem8_data(&s4, &v4, &v4, &h).unwrap();
        assert!(d.phi.is_isomorphism());
        assert_eq!(d.phi.kernel().len(), 1);
        assert_eq!(d.k, d.t);
    }

    #[test]
    fn nested_chain_d4_center() {
        let d4 = builtin_group("D4").unwrap();
        let center = d4.parse_set(&["e", "r^2"]).unwrap();
        let rotations = d4.parse_set(&["e", "r", "r^2", "r^3"]).unwrap();
        let d = theorem8_data(&d4, &d4.identity_set(), &center, &rotations).unwrap();
        assert_eq!(d.k, rotations);
        assert_eq!(d.t, rotations);
        assert_eq!(d.phi.source().set_labels(&d.phi.kernel()), ["N", "r^2N"]);
    }

    #[test]
    fn corollary_chain_examples() {
        let s4 = builtin_group("S4").unwrap();
        let normals = s4.normal_subgroups().unwrap();
        let (v4, a4) = (normals[1], normals[2]);
        let c = corollary_chain(&s4, &v4, &a4, &a4).unwrap();
        assert_eq!(c.intersection, v4);
        assert_eq!(c.product, a4);
        assert!(c.alpha.is_isomorphism());
        assert_eq!(c.beta.kernel().len(), 3);
        assert_eq!(c.gamma.kernel().len(), 3);

        let same = corollary_chain(&s4, &v4, &v4, &a4).unwrap();
        assert!(same.alpha.is_isomorphism() && same.beta.is_isomorphism() && same.gamma.is_isomorphism());

        let z12 = builtin_group("Z12").unwrap();
        let n = z12.parse_set(&["0", "4", "8"]).unwrap();
        let m = z12.parse_set(&["0", "6"]).unwrap();
        let c = corollary_chain(&z12, &n, &m, &z12.full_set()).unwrap();
        // Abelian: every lower approximation is the whole quotient.
        assert_eq!(c.alpha.source().order(), 12);
        assert_eq!(c.alpha.kernel().len(), 3);
        assert_eq!(c.beta.kernel().len(), 2);
        assert_eq!(c.gamma.kernel().len(), 6);
    }
}
