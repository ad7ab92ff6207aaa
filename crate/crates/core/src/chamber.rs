//! Base chambers, triangles of sub-ovoids and the chamber system on G.
//!
//! A chamber `γ(T)` is stored as the element `γ`; its `i`-neighbour is
//! `γ ρ_i`. The point-set triangles are rebuilt only to cross-check this
//! against the geometric adjacency rule.

use std::collections::{HashSet, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::conjugacy::{self, ClassTable};
use crate::error::{Error, Result};
use crate::gf2m::factorize;
use crate::group::{EnumeratedGroup, Fingerprint, GroupElement, Suzuki};
use crate::ovoid::{OvoidPoint, PointId};
use crate::triality::TrialityMap;

#[derive(Clone, Copy, Debug)]
pub struct CensusEntry {
    pub involution: GroupElement,
    /// Order of `ρ τ(ρ)`.
    pub product_order: u64,
}

/// The products `ρ τ(ρ)` over all involutions `ρ` fixing one point.
#[derive(Clone, Debug)]
pub struct Census {
    pub point: PointId,
    pub entries: Vec<CensusEntry>,
}

pub fn product_order_census(group: &Suzuki, tau: &TrialityMap, point: PointId) -> Result<Census> {
    let p = group.ovoid().checked_point(point as u64)?;
    if tau.apply(group, p) == p {
        return Err(Error::BasePointFixed);
    }
    let entries = group
        .involutions_fixing(p)
        .into_iter()
        .map(|rho| {
            let prod = group.mul(&rho, &tau.conjugate(group, &rho));
            CensusEntry {
                involution: rho,
                product_order: group.element_order(&prod),
            }
        })
        .collect();
    Ok(Census { point, entries })
}

impl Census {
    pub fn sorted_orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.entries.iter().map(|e| e.product_order).collect();
        v.sort_unstable();
        v
    }

    pub fn all_odd(&self) -> bool {
        self.entries.iter().all(|e| e.product_order % 2 == 1)
    }

    /// Whether the product orders are exactly the predicted odd class orders.
    pub fn matches_expected(&self, group: &Suzuki) -> bool {
        self.sorted_orders() == conjugacy::expected_odd_order_class_multiset(group.params())
    }

    /// Whether the products lie in pairwise distinct classes.
    pub fn pairwise_non_conjugate(
        &self,
        group: &Suzuki,
        tau: &TrialityMap,
        table: &EnumeratedGroup,
        classes: &ClassTable,
    ) -> bool {
        let ids: HashSet<u32> = self
            .entries
            .iter()
            .map(|e| {
                let prod = group.mul(&e.involution, &tau.conjugate(group, &e.involution));
                classes.class_index(table, &prod)
            })
            .collect();
        ids.len() == self.entries.len()
    }

    /// Involutions whose product has order `m`, by increasing fingerprint.
    pub fn candidates(&self, m: u64) -> Vec<GroupElement> {
        let mut v: Vec<GroupElement> = self
            .entries
            .iter()
            .filter(|e| e.product_order == m)
            .map(|e| e.involution)
            .collect();
        v.sort();
        v
    }

    /// The candidate with the smallest fingerprint.
    pub fn base_involution(&self, group: &Suzuki, m: u64) -> Result<GroupElement> {
        if !conjugacy::is_odd_element_order(group.params(), m) {
            return Err(Error::NotRealizable(m));
        }
        self.candidates(m).first().copied().ok_or(Error::NotRealizable(m))
    }
}

/// An involution `ρ0` fixing `point` with `|ρ0 τ(ρ0)| = m`.
pub fn find_base_involution(group: &Suzuki, tau: &TrialityMap, point: PointId, m: u64) -> Result<GroupElement> {
    product_order_census(group, tau, point)?.base_involution(group, m)
}

/// `ρ_i = τ^i(ρ0)`, `H_i = <ρ_j, ρ_k>` and `O_i` the fixed points of the
/// involutions of `H_i`.
#[derive(Clone, Debug)]
pub struct Triangle {
    pub m: u64,
    pub rho: [GroupElement; 3],
    /// Fixed point of `ρ_i`.
    pub vertices: [PointId; 3],
    /// Sorted by fingerprint.
    pub h: [Vec<GroupElement>; 3],
    /// Sorted point ids.
    pub sub_ovoids: [Vec<PointId>; 3],
    h_sets: [HashSet<Fingerprint>; 3],
}

impl Triangle {
    pub fn build(group: &Suzuki, tau: &TrialityMap, rho0: &GroupElement, vertex: PointId) -> Result<Self> {
        if group.element_order(rho0) != 2 {
            return Err(Error::InvalidBaseInvolution("not an involution".into()));
        }
        if group.apply_id(rho0, vertex) != vertex {
            return Err(Error::InvalidBaseInvolution(format!("does not fix point {vertex}")));
        }
        let rho1 = tau.conjugate(group, rho0);
        let rho = [*rho0, rho1, tau.conjugate(group, &rho1)];
        let v1 = tau.apply_id(group, vertex);
        let vertices = [vertex, v1, tau.apply_id(group, v1)];
        let m = group.element_order(&group.mul(&rho[0], &rho[1]));
        if m.is_multiple_of(2) {
            return Err(Error::InvalidBaseInvolution(format!("product has even order {m}")));
        }
        let mut h: [Vec<GroupElement>; 3] = Default::default();
        let mut sub_ovoids: [Vec<PointId>; 3] = Default::default();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let mut sub = group.closure(&[rho[j], rho[k]], 2 * m as usize)?;
            sub.sort();
            // every involution of H_i is conjugate in H_i to ρ_j
            let mut pts: Vec<PointId> = sub.iter().map(|x| group.apply_id(x, vertices[j])).collect();
            pts.sort_unstable();
            pts.dedup();
            h[i] = sub;
            sub_ovoids[i] = pts;
        }
        let h_sets = [0, 1, 2].map(|i| h[i].iter().map(|x| x.fingerprint()).collect());
        Ok(Triangle {
            m,
            rho,
            vertices,
            h,
            sub_ovoids,
            h_sets,
        })
    }

    pub fn contains(&self, i: usize, g: &GroupElement) -> bool {
        self.h_sets[i].contains(&g.fingerprint())
    }

    pub fn pair_intersection(&self, i: usize, j: usize) -> Vec<PointId> {
        let other = &self.sub_ovoids[j];
        self.sub_ovoids[i]
            .iter()
            .filter(|p| other.binary_search(p).is_ok())
            .copied()
            .collect()
    }

    pub fn triple_intersection(&self) -> Vec<PointId> {
        self.pair_intersection(0, 1)
            .into_iter()
            .filter(|p| self.sub_ovoids[2].binary_search(p).is_ok())
            .collect()
    }

    pub fn is_proper(&self) -> bool {
        self.triple_intersection().is_empty()
    }

    /// Degenerate when two of the sub-ovoids coincide.
    pub fn is_degenerate(&self) -> bool {
        let o = &self.sub_ovoids;
        o[0] == o[1] || o[1] == o[2] || o[0] == o[2]
    }

    /// Whether `H_0 = H_1`, `H_1 = H_2`, `H_0 = H_2`.
    pub fn subgroup_coincidences(&self) -> [bool; 3] {
        [(0, 1), (1, 2), (0, 2)].map(|(i, j)| self.h[i] == self.h[j])
    }

    /// The point-set triangle `γ(T)`.
    pub fn image(&self, group: &Suzuki, g: &GroupElement) -> [Vec<PointId>; 3] {
        self.sub_ovoids.clone().map(|o| map_set(group, g, &o))
    }
}

fn map_set(group: &Suzuki, g: &GroupElement, set: &[PointId]) -> Vec<PointId> {
    let mut v: Vec<PointId> = set.iter().map(|&p| group.apply_id(g, p)).collect();
    v.sort_unstable();
    v
}

fn preserves(group: &Suzuki, g: &GroupElement, set: &[PointId]) -> bool {
    set.iter().all(|&p| set.binary_search(&group.apply_id(g, p)).is_ok())
}

/// `ρ_i(c)` read off a point-set triangle: the involution fixing a common
/// point of the `j`- and `k`-edges and stabilizing both edges. `None` unless
/// exactly one such involution exists.
pub fn geometric_rho(group: &Suzuki, sets: &[Vec<PointId>; 3], i: usize) -> Option<GroupElement> {
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let mut found: Vec<GroupElement> = sets[j]
        .iter()
        .filter(|p| sets[k].binary_search(p).is_ok())
        .flat_map(|&p| group.involutions_fixing(group.ovoid().point(p)))
        .filter(|x| preserves(group, x, &sets[j]) && preserves(group, x, &sets[k]))
        .collect();
    found.sort();
    found.dedup();
    match found[..] {
        [r] => Some(r),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyCheck {
    pub chambers: usize,
    pub failures: usize,
}

/// For each chamber `γ` and colour `i`: `ρ_i(γT)` recovered from the point
/// sets equals `γ ρ_i γ^-1`, maps `γρ_i(T)` onto `γ(T)`, agrees with
/// `ρ_i(γρ_i T)`, and does not map `γρ_j(T)` (`j != i`) onto `γ(T)`.
pub fn geometric_adjacency_check(group: &Suzuki, triangle: &Triangle, chambers: &[GroupElement]) -> AdjacencyCheck {
    let mut failures = 0;
    for g in chambers {
        let c1 = triangle.image(group, g);
        for i in 0..3 {
            let j = (i + 1) % 3;
            let gi = group.mul(g, &triangle.rho[i]);
            let c2 = triangle.image(group, &gi);
            let c3 = triangle.image(group, &group.mul(g, &triangle.rho[j]));
            let ok = match (geometric_rho(group, &c1, i), geometric_rho(group, &c2, i)) {
                (Some(r), Some(r2)) => {
                    let moved = |c: &[Vec<PointId>; 3]| c.clone().map(|s| map_set(group, &r, &s));
                    r == group.conj(&triangle.rho[i], g) && r2 == r && moved(&c2) == c1 && moved(&c3) != c1
                }
                _ => false,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    AdjacencyCheck {
        chambers: chambers.len(),
        failures,
    }
}

/// Connected components of a chamber system under a set of colours.
#[derive(Clone, Debug)]
pub struct Cells {
    pub cell_of: Vec<u32>,
    pub sizes: Vec<u32>,
}

/// The thin chamber system on the element table.
#[derive(Clone, Debug)]
pub struct ChamberSystem {
    neighbors: [Vec<u32>; 3],
}

impl ChamberSystem {
    pub fn build(group: &Suzuki, table: &EnumeratedGroup, triangle: &Triangle) -> Result<Self> {
        group.params().require_full_tier()?;
        if triangle.is_degenerate() {
            return Err(Error::DegenerateTriangle);
        }
        let neighbors = triangle.rho.map(|r| table.right_multiplication(group, &r));
        Ok(ChamberSystem { neighbors })
    }

    pub fn len(&self) -> usize {
        self.neighbors[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn neighbor(&self, color: usize, chamber: u32) -> u32 {
        self.neighbors[color][chamber as usize]
    }

    /// Every panel has exactly two chambers.
    pub fn is_thin(&self) -> bool {
        self.neighbors.iter().all(|nb| {
            nb.iter()
                .enumerate()
                .all(|(c, &d)| d as usize != c && nb[d as usize] as usize == c)
        })
    }

    /// Unordered adjacent pairs over all colours.
    pub fn edges(&self) -> Vec<(u32, u32, u8)> {
        let mut out = Vec::with_capacity(3 * self.len() / 2);
        for (color, nb) in self.neighbors.iter().enumerate() {
            for (c, &d) in nb.iter().enumerate() {
                if (c as u32) < d {
                    out.push((c as u32, d, color as u8));
                }
            }
        }
        out
    }

    pub fn cells(&self, colors: &[usize]) -> Cells {
        let n = self.len();
        let mut cell_of = vec![u32::MAX; n];
        let mut sizes = Vec::new();
        for start in 0..n {
            if cell_of[start] != u32::MAX {
                continue;
            }
            let id = sizes.len() as u32;
            cell_of[start] = id;
            let mut size = 1;
            let mut queue = VecDeque::from([start as u32]);
            while let Some(c) = queue.pop_front() {
                for &col in colors {
                    let d = self.neighbor(col, c) as usize;
                    if cell_of[d] == u32::MAX {
                        cell_of[d] = id;
                        size += 1;
                        queue.push_back(d as u32);
                    }
                }
            }
            sizes.push(size);
        }
        Cells { cell_of, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.cells(&[0, 1, 2]).sizes.len() == 1
    }

    /// Left translation by each `x` commutes with every colour pairing.
    pub fn left_translations_commute(&self, group: &Suzuki, table: &EnumeratedGroup, xs: &[GroupElement]) -> bool {
        xs.iter().all(|x| {
            let left: Vec<u32> = table
                .elements()
                .iter()
                .map(|c| table.index_of(&group.mul(x, c)))
                .collect();
            (0..3).all(|i| {
                (0..self.len()).all(|c| left[self.neighbor(i, c as u32) as usize] == self.neighbor(i, left[c]))
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// `m` is prime, so the residual connectedness theorem applies.
    Theorem,
    EmpiricalOnly,
}

pub fn is_prime(m: u64) -> bool {
    matches!(factorize(m)[..], [(_, 1)])
}

pub fn require_prime(m: u64) -> Result<()> {
    if is_prime(m) {
        Ok(())
    } else {
        Err(Error::NonPrimeM(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Parabolic {
    Whole,
    /// Sorted, without repeats.
    Finite(Vec<GroupElement>),
}

impl Parabolic {
    fn product(&self, other: &Parabolic, group: &Suzuki) -> Parabolic {
        match (self, other) {
            (Parabolic::Finite(a), Parabolic::Finite(b)) => {
                let mut v: Vec<GroupElement> = a.iter().flat_map(|x| b.iter().map(move |y| group.mul(x, y))).collect();
                v.sort();
                v.dedup();
                Parabolic::Finite(v)
            }
            _ => Parabolic::Whole,
        }
    }

    fn intersect(&self, other: &Parabolic) -> Parabolic {
        match (self, other) {
            (Parabolic::Whole, x) | (x, Parabolic::Whole) => x.clone(),
            (Parabolic::Finite(a), Parabolic::Finite(b)) => {
                Parabolic::Finite(a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect())
            }
        }
    }
}

/// `G^(J)` for a subset `J` of `{0,1,2}` given as a bitmask.
fn parabolic(group: &Suzuki, triangle: &Triangle, mask: u8) -> Parabolic {
    let e = group.identity();
    match mask.count_ones() {
        0 => Parabolic::Finite(vec![e]),
        1 => {
            let i = mask.trailing_zeros() as usize;
            let mut v = vec![e, triangle.rho[i]];
            v.sort();
            Parabolic::Finite(v)
        }
        2 => {
            let missing = (!mask & 7).trailing_zeros() as usize;
            Parabolic::Finite(triangle.h[missing].clone())
        }
        _ => Parabolic::Whole,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualConnectedness {
    pub triples: usize,
    /// Failing `(J, K, L)` as bitmasks.
    pub failures: Vec<[u8; 3]>,
    pub claim: Claim,
}

/// `G^(L) ∩ G^(J)G^(K) = G^(L∩J)G^(L∩K)` for all 512 triples of subsets.
pub fn check_residual_connectedness(group: &Suzuki, triangle: &Triangle) -> ResidualConnectedness {
    let subgroups: Vec<Parabolic> = (0..8).map(|m| parabolic(group, triangle, m)).collect();
    let mut products = Vec::with_capacity(64);
    for j in 0..8 {
        for k in 0..8 {
            products.push(subgroups[j].product(&subgroups[k], group));
        }
    }
    let prod = |j: u8, k: u8| &products[(j * 8 + k) as usize];
    let mut failures = Vec::new();
    for j in 0..8u8 {
        for k in 0..8u8 {
            for l in 0..8u8 {
                let lhs = subgroups[l as usize].intersect(prod(j, k));
                if &lhs != prod(l & j, l & k) {
                    failures.push([j, k, l]);
                }
            }
        }
    }
    ResidualConnectedness {
        triples: 512,
        failures,
        claim: if is_prime(triangle.m) {
            Claim::Theorem
        } else {
            Claim::EmpiricalOnly
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FtRotation {
    pub rotation: usize,
    /// `|H_{r+2} H_r|`
    pub product_size: usize,
    /// `|H_{r+1} ∩ H_{r+2} H_r|`
    pub intersection_size: usize,
    /// The intersection is `{e, ρ_r, ρ_{r+2}, ρ_r ρ_{r+2}}`.
    pub holds: bool,
}

pub fn flag_transitivity_products(group: &Suzuki, triangle: &Triangle) -> [FtRotation; 3] {
    [0, 1, 2].map(|r| {
        let (a, b) = ((r + 1) % 3, (r + 2) % 3);
        let hb = Parabolic::Finite(triangle.h[b].clone());
        let hr = Parabolic::Finite(triangle.h[r].clone());
        let Parabolic::Finite(prod) = hb.product(&hr, group) else {
            unreachable!()
        };
        let inter: Vec<GroupElement> = prod.iter().filter(|x| triangle.contains(a, x)).copied().collect();
        let (x, y) = (triangle.rho[r], triangle.rho[b]);
        let mut expected = vec![group.identity(), x, y, group.mul(&x, &y)];
        expected.sort();
        FtRotation {
            rotation: r,
            product_size: prod.len(),
            intersection_size: inter.len(),
            holds: inter == expected,
        }
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCount {
    pub checked: usize,
    pub violations: usize,
}

/// For `ω` fixing `p` and distinct `ζ, ζ'` fixing `q != p`, `ωζ` and `ωζ'`
/// are never conjugate. Exhaustive over the involutions at `p` and `q`.
pub fn lemma_conjugacy_full(
    group: &Suzuki,
    table: &EnumeratedGroup,
    classes: &ClassTable,
    p: OvoidPoint,
    q: OvoidPoint,
) -> LemmaCount {
    let a = group.involutions_fixing(p);
    let b = group.involutions_fixing(q);
    let mut count = LemmaCount::default();
    for w in &a {
        for (i, z) in b.iter().enumerate() {
            for z2 in &b[i + 1..] {
                count.checked += 1;
                if classes.are_conjugate(table, &group.mul(w, z), &group.mul(w, z2)) {
                    count.violations += 1;
                }
            }
        }
    }
    count
}

/// The same statement on random configurations, using the table-free
/// conjugacy test.
pub fn lemma_conjugacy_sampled<R: Rng + ?Sized>(group: &Suzuki, rng: &mut R, samples: usize) -> LemmaCount {
    let n = group.ovoid().len();
    let q = group.field().q() as usize;
    let mut count = LemmaCount::default();
    for _ in 0..samples {
        let pi = rng.gen_range(0..n) as PointId;
        let qi = loop {
            let x = rng.gen_range(0..n) as PointId;
            if x != pi {
                break x;
            }
        };
        let a = group.involutions_fixing(group.ovoid().point(pi));
        let b = group.involutions_fixing(group.ovoid().point(qi));
        let w = a[rng.gen_range(0..q - 1)];
        let i = rng.gen_range(0..q - 1);
        let j = (i + rng.gen_range(1..q - 1)) % (q - 1);
        count.checked += 1;
        if conjugacy::conjugate_by_sweep(group, &group.mul(&w, &b[i]), &group.mul(&w, &b[j])) {
            count.violations += 1;
        }
    }
    count
}

/// Elements preserving `{p0, p1, p2}` setwise, built from pair transporters
/// and two-point stabilizers for each of the six possible images.
pub fn triple_set_stabilizer(group: &Suzuki, pts: [OvoidPoint; 3]) -> Vec<GroupElement> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for s in PERMS {
        let (a, b, c) = (pts[s[0]], pts[s[1]], pts[s[2]]);
        let t = group.pair_transporter(pts[0], pts[1], a, b).expect("distinct points");
        for x in group.two_point_stabilizer(a, b) {
            let g = group.mul(&x, &t);
            if group.apply(&g, pts[2]) == c {
                out.push(g);
            }
        }
    }
    out.sort();
    out
}

/// The same stabilizer by a sweep over the element table.
pub fn triple_set_stabilizer_sweep(group: &Suzuki, table: &EnumeratedGroup, pts: [OvoidPoint; 3]) -> Vec<GroupElement> {
    table
        .elements()
        .iter()
        .filter(|g| pts.iter().all(|&p| pts.contains(&group.apply(g, p))))
        .copied()
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizerCheck {
    pub normalizer_order: usize,
    /// Pairs of involutions of `N_G(K)` generating a dihedral group of
    /// order `2m`.
    pub dihedral_pairs: usize,
    /// Such pairs whose dihedral group misses `K`.
    pub violations: usize,
    /// Whether `H_1`, which contains `K`, lies in `N_G(K)`.
    pub containing_subgroup_normalizes: bool,
}

/// For `K = <ρ0 ρ2>` in `H_1`: a dihedral group of order `2m` generated by
/// involutions of `N_G(K)` contains `K`.
pub fn normalizer_lemma(group: &Suzuki, table: &EnumeratedGroup, triangle: &Triangle) -> NormalizerCheck {
    let k = group.mul(&triangle.rho[0], &triangle.rho[2]);
    let kset: HashSet<Fingerprint> = (0..triangle.m).map(|n| group.pow(&k, n).fingerprint()).collect();
    let normalizer: Vec<GroupElement> = table
        .elements()
        .iter()
        .filter(|g| kset.contains(&group.conj(&k, g).fingerprint()))
        .copied()
        .collect();
    let nset: HashSet<Fingerprint> = normalizer.iter().map(|g| g.fingerprint()).collect();
    let involutions: Vec<&GroupElement> = normalizer.iter().filter(|g| group.element_order(g) == 2).collect();
    let mut check = NormalizerCheck {
        normalizer_order: normalizer.len(),
        containing_subgroup_normalizes: triangle.h[1].iter().all(|x| nset.contains(&x.fingerprint())),
        ..Default::default()
    };
    for (i, u) in involutions.iter().enumerate() {
        for v in &involutions[i + 1..] {
            let uv = group.mul(u, v);
            if group.element_order(&uv) == triangle.m {
                check.dihedral_pairs += 1;
                if !kset.contains(&uv.fingerprint()) {
                    check.violations += 1;
                }
            }
        }
    }
    check
}

/// Group, triality, base point, census and triangle for one `(e, m)`.
#[derive(Debug)]
pub struct Construction {
    pub group: Suzuki,
    pub tau: TrialityMap,
    pub point: PointId,
    pub census: Census,
    /// All involutions at `point` with product order `m`.
    pub candidates: Vec<GroupElement>,
    pub triangle: Triangle,
}

impl Construction {
    /// `point = None` picks the first point moved by `τ`.
    pub fn new(e: u32, m: u64, point: Option<PointId>) -> Result<Self> {
        let group = Suzuki::with_e(e)?;
        let tau = TrialityMap::new(group.field().params())?;
        let point = point.unwrap_or_else(|| tau.default_base_point(&group));
        let census = product_order_census(&group, &tau, point)?;
        let rho0 = census.base_involution(&group, m)?;
        let candidates = census.candidates(m);
        let triangle = Triangle::build(&group, &tau, &rho0, point)?;
        Ok(Construction {
            group,
            tau,
            point,
            census,
            candidates,
            triangle,
        })
    }

    pub fn rho(&self) -> &[GroupElement; 3] {
        &self.triangle.rho
    }

    pub fn m(&self) -> u64 {
        self.triangle.m
    }
}
