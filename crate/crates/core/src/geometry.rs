//! The coset geometry `Γ(G, (H_0, H_1, H_2))`.
//!
//! Elements of type `i` are right cosets `H_i γ`, named by their member with
//! the smallest fingerprint. `H_i γ` and `H_j δ` are incident when `i != j`
//! and `γ δ^-1 ∈ H_i H_j`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chamber::{ChamberSystem, Triangle};
use crate::error::{Error, Result};
use crate::gf2m::FieldElement;
use crate::group::{EnumeratedGroup, Fingerprint, GroupElement, Prim, Suzuki};
use crate::ovoid::OvoidPoint;
use crate::triality::TrialityMap;

/// A right coset `H_ty · rep` with canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub ty: u8,
    pub rep: GroupElement,
}

impl Coset {
    /// `t<type>_<i>_<j>_<k>`.
    pub fn label(&self) -> String {
        format!("t{}_{}", self.ty, self.rep.label())
    }
}

/// `H_ty g` with its canonical representative.
pub fn canonical_coset(group: &Suzuki, triangle: &Triangle, ty: usize, g: &GroupElement) -> Coset {
    let rep = triangle.h[ty]
        .iter()
        .map(|h| group.mul(h, g))
        .min()
        .expect("nonempty subgroup");
    Coset { ty: ty as u8, rep }
}

pub fn coset_members(group: &Suzuki, triangle: &Triangle, c: &Coset) -> Vec<GroupElement> {
    let mut v: Vec<GroupElement> = triangle.h[c.ty as usize].iter().map(|h| group.mul(h, &c.rep)).collect();
    v.sort();
    v
}

/// Incidence by the product sets `H_i H_j`; needs no element table.
#[derive(Clone, Debug)]
pub struct IncidenceOracle {
    products: [[HashSet<Fingerprint>; 3]; 3],
}

impl IncidenceOracle {
    pub fn new(group: &Suzuki, triangle: &Triangle) -> Self {
        let mut products: [[HashSet<Fingerprint>; 3]; 3] = Default::default();
        for (i, row) in products.iter_mut().enumerate() {
            for (j, set) in row.iter_mut().enumerate() {
                if i != j {
                    *set = triangle.h[i]
                        .iter()
                        .flat_map(|a| triangle.h[j].iter().map(move |b| group.mul(a, b).fingerprint()))
                        .collect();
                }
            }
        }
        IncidenceOracle { products }
    }

    /// `|H_i H_j|`.
    pub fn product_size(&self, i: usize, j: usize) -> usize {
        self.products[i][j].len()
    }

    pub fn incident(&self, group: &Suzuki, a: &Coset, b: &Coset) -> bool {
        if a.ty == b.ty {
            return false;
        }
        let x = group.mul(&a.rep, &group.inv(&b.rep));
        self.products[a.ty as usize][b.ty as usize].contains(&x.fingerprint())
    }

    /// Cosets of type `ty` incident to `c`: those meeting it.
    pub fn neighbors(&self, group: &Suzuki, triangle: &Triangle, c: &Coset, ty: usize) -> Vec<Coset> {
        if ty == c.ty as usize {
            return Vec::new();
        }
        let set: BTreeSet<Coset> = coset_members(group, triangle, c)
            .iter()
            .map(|x| canonical_coset(group, triangle, ty, x))
            .collect();
        set.into_iter().collect()
    }
}

/// Length of a shortest cycle, `None` for a forest.
pub fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let cycle = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(cycle, |b| b.min(cycle)));
                }
            }
        }
    }
    best
}

fn is_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !std::mem::replace(&mut seen[v], true) {
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// A rank-2 residue as a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Residue {
    pub sizes: [usize; 2],
    pub edges: usize,
    pub connected: bool,
    /// Half the girth of the incidence graph.
    pub gonality: Option<usize>,
}

fn rank2_residue(left: usize, right: usize, edges: &[(usize, usize)]) -> Rank2Residue {
    let mut adj = vec![Vec::new(); left + right];
    for &(a, b) in edges {
        adj[a].push(left + b);
        adj[left + b].push(a);
    }
    Rank2Residue {
        sizes: [left, right],
        edges: edges.len(),
        connected: is_connected(&adj),
        gonality: girth(&adj).map(|g| g / 2),
    }
}

/// Residue of a single coset, computed from the oracle alone.
pub fn local_residue(group: &Suzuki, triangle: &Triangle, oracle: &IncidenceOracle, c: &Coset) -> Rank2Residue {
    let i = c.ty as usize;
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let a = oracle.neighbors(group, triangle, c, j);
    let b = oracle.neighbors(group, triangle, c, k);
    let mut edges = Vec::new();
    for (x, cx) in a.iter().enumerate() {
        for (y, cy) in b.iter().enumerate() {
            if oracle.incident(group, cx, cy) {
                edges.push((x, y));
            }
        }
    }
    rank2_residue(a.len(), b.len(), &edges)
}

/// Number of elements of the third type incident to both members of an
/// incident pair, computed from the oracle alone.
pub fn local_flag_extensions(
    group: &Suzuki,
    triangle: &Triangle,
    oracle: &IncidenceOracle,
    a: &Coset,
    b: &Coset,
) -> usize {
    let k = 3 - a.ty as usize - b.ty as usize;
    oracle
        .neighbors(group, triangle, a, k)
        .iter()
        .filter(|c| oracle.incident(group, b, c))
        .count()
}

/// The materialized geometry. Elements are numbered globally, type by type.
#[derive(Clone, Debug)]
pub struct IncidenceGeometry {
    per_type: usize,
    /// Coset id of each table element, per type.
    coset_of: [Vec<u32>; 3],
    /// Table indices of the members of each coset, per type.
    members: [Vec<Vec<u32>>; 3],
    /// Sorted global neighbour ids.
    adjacency: Vec<Vec<u32>>,
}

impl IncidenceGeometry {
    pub fn build(group: &Suzuki, table: &EnumeratedGroup, triangle: &Triangle) -> Result<Self> {
        group.params().require_full_tier()?;
        let n = table.len();
        let per_type = n / triangle.h[0].len();
        let mut coset_of: [Vec<u32>; 3] = Default::default();
        let mut members: [Vec<Vec<u32>>; 3] = Default::default();
        for i in 0..3 {
            let mut assigned = vec![false; n];
            let mut cosets: Vec<Vec<u32>> = Vec::with_capacity(per_type);
            for (idx, g) in table.elements().iter().enumerate() {
                if assigned[idx] {
                    continue;
                }
                let mut mem: Vec<u32> = triangle.h[i].iter().map(|h| table.index_of(&group.mul(h, g))).collect();
                mem.sort_by_key(|&x| table.element(x).fingerprint());
                for &x in &mem {
                    assigned[x as usize] = true;
                }
                cosets.push(mem);
            }
            cosets.sort_by_key(|mem| table.element(mem[0]).fingerprint());
            let mut of = vec![0u32; n];
            for (c, mem) in cosets.iter().enumerate() {
                for &x in mem {
                    of[x as usize] = c as u32;
                }
            }
            coset_of[i] = of;
            members[i] = cosets;
        }
        let mut adjacency = vec![Vec::new(); 3 * per_type];
        for i in 0..3 {
            for (c, mem) in members[i].iter().enumerate() {
                let mut nb: Vec<u32> = Vec::new();
                for j in (0..3).filter(|&j| j != i) {
                    nb.extend(mem.iter().map(|&x| (j * per_type) as u32 + coset_of[j][x as usize]));
                }
                nb.sort_unstable();
                nb.dedup();
                adjacency[i * per_type + c] = nb;
            }
        }
        Ok(IncidenceGeometry {
            per_type,
            coset_of,
            members,
            adjacency,
        })
    }

    pub fn per_type(&self) -> usize {
        self.per_type
    }

    pub fn len(&self) -> usize {
        3 * self.per_type
    }

    pub fn is_empty(&self) -> bool {
        self.per_type == 0
    }

    pub fn type_of(&self, x: u32) -> usize {
        x as usize / self.per_type
    }

    pub fn global(&self, ty: usize, coset: u32) -> u32 {
        (ty * self.per_type) as u32 + coset
    }

    /// Global id of `H_ty g`.
    pub fn element_of(&self, table: &EnumeratedGroup, ty: usize, g: &GroupElement) -> u32 {
        self.global(ty, self.coset_of[ty][table.index_of(g) as usize])
    }

    /// Table indices of the members, smallest fingerprint first.
    pub fn members(&self, x: u32) -> &[u32] {
        let ty = self.type_of(x);
        &self.members[ty][x as usize - ty * self.per_type]
    }

    pub fn coset(&self, table: &EnumeratedGroup, x: u32) -> Coset {
        Coset {
            ty: self.type_of(x) as u8,
            rep: *table.element(self.members(x)[0]),
        }
    }

    pub fn neighbors(&self, x: u32) -> &[u32] {
        &self.adjacency[x as usize]
    }

    pub fn incident(&self, x: u32, y: u32) -> bool {
        self.adjacency[x as usize].binary_search(&y).is_ok()
    }

    /// Incident pairs `x < y`.
    pub fn incident_pairs(&self) -> Vec<(u32, u32)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(x, nb)| nb.iter().filter(move |&&y| (x as u32) < y).map(move |&y| (x as u32, y)))
            .collect()
    }

    fn neighbors_of_type(&self, x: u32, ty: usize) -> impl Iterator<Item = u32> + '_ {
        let lo = (ty * self.per_type) as u32;
        let hi = lo + self.per_type as u32;
        self.neighbors(x).iter().copied().filter(move |&y| y >= lo && y < hi)
    }

    /// Elements incident to every member of a flag.
    pub fn residue(&self, flag: &[u32]) -> Result<Vec<u32>> {
        for (a, &x) in flag.iter().enumerate() {
            for &y in &flag[a + 1..] {
                if !self.incident(x, y) {
                    return Err(Error::NotAFlag);
                }
            }
        }
        let Some(&first) = flag.first() else {
            return Ok((0..self.len() as u32).collect());
        };
        Ok(self
            .neighbors(first)
            .iter()
            .copied()
            .filter(|&y| flag.iter().all(|&x| self.incident(x, y)))
            .collect())
    }

    /// The residue of a single element as a bipartite graph.
    pub fn rank2_residue(&self, x: u32) -> Result<Rank2Residue> {
        let res = self.residue(&[x])?;
        let i = self.type_of(x);
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let a: Vec<u32> = res.iter().copied().filter(|&y| self.type_of(y) == j).collect();
        let b: Vec<u32> = res.iter().copied().filter(|&y| self.type_of(y) == k).collect();
        let mut edges = Vec::new();
        for (s, &u) in a.iter().enumerate() {
            for (t, &v) in b.iter().enumerate() {
                if self.incident(u, v) {
                    edges.push((s, t));
                }
            }
        }
        Ok(rank2_residue(a.len(), b.len(), &edges))
    }

    /// Distinct gonalities over the residues of the type-`i` elements, which
    /// label the diagram edge between the other two types.
    pub fn diagram(&self) -> Diagram {
        let mut labels: [BTreeSet<usize>; 3] = Default::default();
        let mut all_connected = true;
        for x in 0..self.len() as u32 {
            let r = self.rank2_residue(x).expect("single element is a flag");
            all_connected &= r.connected;
            labels[self.type_of(x)].insert(r.gonality.unwrap_or(0));
        }
        Diagram {
            labels: labels.map(|s| s.into_iter().collect()),
            residues_connected: all_connected,
        }
    }

    /// All pairwise incident triples `(x0, x1, x2)` with `x_i` of type `i`.
    pub fn chambers(&self) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for x in 0..self.per_type as u32 {
            for y in self.neighbors_of_type(x, 1) {
                for z in self.neighbors_of_type(x, 2) {
                    if self.incident(y, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    /// Chamber count, regularity of `G` on chambers and thinness.
    pub fn flag_transitivity_check(&self, table: &EnumeratedGroup) -> FlagTransitivity {
        let chambers = self.chambers();
        // a chamber (H_0 x, H_1 x, H_2 x) meets in exactly the element x
        let mut hit = vec![false; table.len()];
        let mut regular = true;
        for ch in &chambers {
            let common: Vec<u32> = self
                .members(ch[0])
                .iter()
                .copied()
                .filter(|g| self.members(ch[1]).contains(g) && self.members(ch[2]).contains(g))
                .collect();
            match common[..] {
                [g] if !std::mem::replace(&mut hit[g as usize], true) => {}
                _ => regular = false,
            }
        }
        regular &= hit.iter().all(|&h| h);
        let mut extension_counts = BTreeSet::new();
        for (x, y) in self.incident_pairs() {
            let k = 3 - self.type_of(x) - self.type_of(y);
            let n = self.neighbors_of_type(x, k).filter(|&z| self.incident(y, z)).count();
            extension_counts.insert(n);
        }
        FlagTransitivity {
            chambers: chambers.len(),
            regular,
            thin: extension_counts.iter().eq([2].iter()),
            extension_counts: extension_counts.into_iter().collect(),
        }
    }

    /// Compare the materialized incidence with the oracle, on all incident
    /// pairs and on random pairs, and check that incident cosets meet in
    /// exactly two elements and others in none.
    pub fn oracle_agreement<R: Rng + ?Sized>(
        &self,
        group: &Suzuki,
        table: &EnumeratedGroup,
        oracle: &IncidenceOracle,
        rng: &mut R,
        samples: usize,
    ) -> OracleAgreement {
        let mut out = OracleAgreement::default();
        let check = |x: u32, y: u32, out: &mut OracleAgreement| {
            out.pairs += 1;
            let inc = self.incident(x, y);
            let (cx, cy) = (self.coset(table, x), self.coset(table, y));
            let by_oracle = oracle.incident(group, &cx, &cy);
            let symmetric = inc == self.incident(y, x) && by_oracle == oracle.incident(group, &cy, &cx);
            let meet = self.members(x).iter().filter(|g| self.members(y).contains(g)).count();
            let same_type = self.type_of(x) == self.type_of(y);
            let meet_ok = if same_type {
                x == y || meet == 0
            } else {
                meet == if inc { 2 } else { 0 }
            };
            if !(symmetric && inc == by_oracle && meet_ok) {
                out.disagreements += 1;
            }
        };
        for (x, y) in self.incident_pairs() {
            check(x, y, &mut out);
        }
        let n = self.len() as u32;
        for _ in 0..samples {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            check(x, y, &mut out);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    /// `labels[i]`: gonalities on the edge opposite type `i`.
    pub labels: [Vec<usize>; 3],
    pub residues_connected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagTransitivity {
    pub chambers: usize,
    pub regular: bool,
    pub thin: bool,
    /// Distinct numbers of chambers through an incident pair.
    pub extension_counts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleAgreement {
    pub pairs: usize,
    pub disagreements: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correspondence {
    pub cells_per_type: [usize; 3],
    pub cell_sizes_ok: bool,
    /// `γ H_i -> H_i γ^-1` is a bijection from `i`-objects onto type-`i` cosets.
    pub bijective: bool,
    /// Cells meet exactly when the cosets are incident.
    pub incidence_matches: bool,
}

/// Build `Γ(C)` from the chamber system and compare with the coset geometry.
pub fn geometry_from_chamber_system(
    group: &Suzuki,
    table: &EnumeratedGroup,
    cs: &ChamberSystem,
    geo: &IncidenceGeometry,
) -> Correspondence {
    let inverse = table.inversion(group);
    let mut cells_per_type = [0; 3];
    let mut cell_sizes_ok = true;
    let mut bijective = true;
    let mut cell_to_global: [Vec<u32>; 3] = Default::default();
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let cells = cs.cells(&[j, k]);
        cells_per_type[i] = cells.sizes.len();
        cell_sizes_ok &= cells.sizes.iter().all(|&s| s as usize == geo.members(0).len());
        let mut map = vec![u32::MAX; cells.sizes.len()];
        for (c, &cell) in cells.cell_of.iter().enumerate() {
            let target = geo.global(i, geo.coset_of[i][inverse[c] as usize]);
            let slot = &mut map[cell as usize];
            if *slot == u32::MAX {
                *slot = target;
            } else if *slot != target {
                bijective = false;
            }
        }
        let distinct: HashSet<u32> = map.iter().copied().collect();
        bijective &= distinct.len() == geo.per_type() && map.len() == geo.per_type();
        cell_to_global[i] = map;
    }
    let cell_of: [Vec<u32>; 3] = [0, 1, 2].map(|i| cs.cells(&[(i + 1) % 3, (i + 2) % 3]).cell_of);
    let mut meeting: HashSet<(u32, u32)> = HashSet::new();
    for c in 0..cs.len() {
        let g = [0, 1, 2].map(|i| cell_to_global[i][cell_of[i][c] as usize]);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            meeting.insert((g[a], g[b]));
        }
    }
    let incident: HashSet<(u32, u32)> = geo.incident_pairs().into_iter().collect();
    Correspondence {
        cells_per_type,
        cell_sizes_ok,
        bijective,
        incidence_matches: meeting == incident,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationCheck {
    pub elements_checked: usize,
    pub pairs_checked: usize,
    pub well_defined: bool,
    pub preserves_incidence: bool,
    /// `τ(H_i) = H_{i+1}` for each `i`.
    pub permutes_subgroups: bool,
    pub order: u32,
}

fn permutes_subgroups(group: &Suzuki, triangle: &Triangle, tau: &TrialityMap) -> bool {
    (0..3).all(|i| {
        let mut img: Vec<GroupElement> = triangle.h[i].iter().map(|x| tau.conjugate(group, x)).collect();
        img.sort();
        img == triangle.h[(i + 1) % 3]
    })
}

/// `H_i γ -> H_{i+1} τ(γ)` on the materialized geometry.
pub fn triality_correlation(
    group: &Suzuki,
    table: &EnumeratedGroup,
    triangle: &Triangle,
    tau: &TrialityMap,
    geo: &IncidenceGeometry,
) -> CorrelationCheck {
    let n = geo.len();
    let mut image = vec![0u32; n];
    let mut well_defined = true;
    for x in 0..n as u32 {
        let ty = (geo.type_of(x) + 1) % 3;
        let imgs: HashSet<u32> = geo
            .members(x)
            .iter()
            .map(|&g| geo.element_of(table, ty, &tau.conjugate(group, table.element(g))))
            .collect();
        well_defined &= imgs.len() == 1;
        image[x as usize] = *imgs.iter().min().expect("nonempty");
    }
    let pairs = geo.incident_pairs();
    let preserves_incidence = pairs
        .iter()
        .all(|&(x, y)| geo.incident(image[x as usize], image[y as usize]));
    let mut power: Vec<u32> = (0..n as u32).collect();
    let mut order = 0;
    for k in 1..=6 {
        power = power.iter().map(|&x| image[x as usize]).collect();
        if power.iter().enumerate().all(|(x, &y)| x as u32 == y) {
            order = k;
            break;
        }
    }
    CorrelationCheck {
        elements_checked: n,
        pairs_checked: pairs.len(),
        well_defined,
        preserves_incidence,
        permutes_subgroups: permutes_subgroups(group, triangle, tau),
        order,
    }
}

/// The same checks on random cosets and random incident pairs, through the
/// oracle.
pub fn triality_correlation_sampled<R: Rng + ?Sized>(
    group: &Suzuki,
    triangle: &Triangle,
    tau: &TrialityMap,
    oracle: &IncidenceOracle,
    rng: &mut R,
    samples: usize,
) -> CorrelationCheck {
    let image = |c: &Coset, g: &GroupElement| {
        canonical_coset(group, triangle, (c.ty as usize + 1) % 3, &tau.conjugate(group, g))
    };
    let mut check = CorrelationCheck {
        well_defined: true,
        preserves_incidence: true,
        permutes_subgroups: permutes_subgroups(group, triangle, tau),
        order: 3,
        ..Default::default()
    };
    for _ in 0..samples {
        let ty = rng.gen_range(0..3usize);
        let c = canonical_coset(group, triangle, ty, &group.random_element(rng));
        let imgs: HashSet<Coset> = coset_members(group, triangle, &c)
            .iter()
            .map(|g| image(&c, g))
            .collect();
        check.elements_checked += 1;
        check.well_defined &= imgs.len() == 1;
        let img = image(&c, &c.rep);
        let img2 = image(&img, &img.rep);
        let img3 = image(&img2, &img2.rep);
        if img3 != c || img == c {
            check.order = 0;
        }
        // an incident partner: H_j δ with γ δ^-1 ∈ H_i H_j
        let tj = (ty + 1 + rng.gen_range(0..2)) % 3;
        let a = triangle.h[ty][rng.gen_range(0..triangle.h[ty].len())];
        let b = triangle.h[tj][rng.gen_range(0..triangle.h[tj].len())];
        let delta = group.mul(&group.inv(&group.mul(&a, &b)), &c.rep);
        let d = canonical_coset(group, triangle, tj, &delta);
        check.pairs_checked += 1;
        let dimg = image(&d, &d.rep);
        check.preserves_incidence &= oracle.incident(group, &c, &d) && oracle.incident(group, &img, &dimg);
    }
    check
}

/// All six permutations of `{0,1,2}`, as image lists.
pub const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

pub fn is_transposition(p: &[u8; 3]) -> bool {
    p.iter().enumerate().filter(|&(i, &x)| i as u8 == x).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityRow {
    /// Frobenius exponent.
    pub t: u32,
    pub perm: [u8; 3],
    /// Size of the family searched.
    pub searched: u64,
    /// Fingerprints of all `g` with `g Φ^t(ρ_i) g^-1 = ρ_perm[i]`.
    pub solutions: Vec<Fingerprint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualitySearch {
    pub rows: Vec<DualityRow>,
}

impl DualitySearch {
    pub fn total_solutions(&self) -> usize {
        self.rows.iter().map(|r| r.solutions.len()).sum()
    }

    /// Solutions that transpose two types: dualities.
    pub fn dualities(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| is_transposition(&r.perm))
            .map(|r| r.solutions.len())
            .sum()
    }

    /// Solutions fixing every type, i.e. automorphisms of `G` preserving the
    /// triangle.
    pub fn type_preserving(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.perm == [0, 1, 2])
            .map(|r| r.solutions.len())
            .sum()
    }

    /// `(t, perm)` cells with a solution.
    pub fn solvable_cells(&self) -> Vec<(u32, [u8; 3])> {
        self.rows
            .iter()
            .filter(|r| !r.solutions.is_empty())
            .map(|r| (r.t, r.perm))
            .collect()
    }

    /// `|Aut Γ|` and `|Cor Γ|` when every correlation comes from an
    /// automorphism of `G` mapping the triangle to itself up to types.
    pub fn correlation_orders(&self, group_order: u128) -> (u128, u128) {
        (
            group_order * self.type_preserving() as u128,
            group_order * self.total_solutions() as u128,
        )
    }
}

/// `b` with `ρ = T(0, b)` for an involution fixing `U`.
fn centre_parameter(group: &Suzuki, rho: &GroupElement) -> FieldElement {
    match group.apply(rho, OvoidPoint::Affine(FieldElement::ZERO, FieldElement::ZERO)) {
        OvoidPoint::Affine(_, b) => b,
        OvoidPoint::Infinity => unreachable!("involution fixing U moves (0,0) off U"),
    }
}

/// Some `g` with `g x g^-1 = y` for involutions `x`, `y` fixing `p`, `q`.
fn involution_transporter(
    group: &Suzuki,
    x: &GroupElement,
    p: OvoidPoint,
    y: &GroupElement,
    q: OvoidPoint,
) -> GroupElement {
    let (up, uq) = (group.to_point(p), group.to_point(q));
    let b1 = centre_parameter(group, &group.conj(x, &group.inv(&up)));
    let b2 = centre_parameter(group, &group.conj(y, &group.inv(&uq)));
    let f = group.field();
    let lambda = group.theta_plus_one_root(f.mul(b2, f.recip(b1)));
    let d = group.torus_element(lambda).expect("nonzero");
    group.mul(&group.mul(&uq, &d), &group.inv(&up))
}

fn search_cell(group: &Suzuki, triangle: &Triangle, t: u32, perm: [u8; 3]) -> DualityRow {
    let f = group.field();
    let o = group.ovoid();
    let frob_point = |p: OvoidPoint| match p {
        OvoidPoint::Infinity => p,
        OvoidPoint::Affine(x, y) => OvoidPoint::Affine(f.automorphism(x, t), f.automorphism(y, t)),
    };
    let src_rho = triangle.rho.map(|r| group.field_conjugate(&r, t));
    let src_pts = triangle.vertices.map(|v| frob_point(o.point(v)));
    let dst_rho = perm.map(|p| triangle.rho[p as usize]);
    let dst_pts = perm.map(|p| o.point(triangle.vertices[p as usize]));
    let g1 = involution_transporter(group, &src_rho[0], src_pts[0], &dst_rho[0], dst_pts[0]);
    // every solution is c g1 with c centralizing dst_rho[0]: c = u T(a,b) u^-1
    let u = group.to_point(dst_pts[0]);
    let u_inv = group.inv(&u);
    let x1 = group.apply(&u_inv, group.apply(&g1, src_pts[1]));
    let y1 = group.apply(&u_inv, dst_pts[1]);
    let q = f.q();
    let mut solutions = Vec::new();
    for k in 0..q * q {
        let (a, b) = (FieldElement::new(k / q), FieldElement::new(k % q));
        if group.apply_prim(Prim::Translation(a, b), x1) != y1 {
            continue;
        }
        let c = group.mul(&group.mul(&u, &group.translation(a, b)), &u_inv);
        let g = group.mul(&c, &g1);
        if (0..3).all(|i| group.conj(&src_rho[i], &g) == dst_rho[i]) {
            solutions.push(g.fingerprint());
        }
    }
    DualityRow {
        t,
        perm,
        searched: q * q,
        solutions,
    }
}

/// For every Frobenius power `t` and permutation `π`, all `g` with
/// `g Φ^t(ρ_i) g^-1 = ρ_π(i)`. Cells run in parallel.
pub fn duality_search(group: &Suzuki, triangle: &Triangle) -> DualitySearch {
    let degree = group.field().degree();
    let cells: Vec<(u32, [u8; 3])> = (0..degree)
        .flat_map(|t| PERMUTATIONS.iter().map(move |&p| (t, p)))
        .collect();
    let rows = cells
        .par_iter()
        .map(|&(t, p)| search_cell(group, triangle, t, p))
        .collect();
    DualitySearch { rows }
}
