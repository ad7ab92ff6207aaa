//! Reference implementations used to cross-check the library: schoolbook
//! field arithmetic, the ovoid point maps written out from their formulas,
//! and Sz(8) as an explicit permutation group.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

pub type Perm = Vec<u16>;

/// GF(2^n) by shift-and-add multiplication.
#[derive(Clone, Copy, Debug)]
pub struct Gf {
    pub n: u32,
    pub modulus: u64,
    pub e: u32,
}

impl Gf {
    pub fn new(n: u32, modulus: u64) -> Self {
        Gf {
            n,
            modulus,
            e: (n - 1) / 2,
        }
    }

    pub fn q(&self) -> u64 {
        1 << self.n
    }

    pub fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let mut r = 0;
        while b != 0 {
            if b & 1 == 1 {
                r ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.n & 1 == 1 {
                a ^= self.modulus;
            }
        }
        r
    }

    pub fn pow(&self, a: u64, mut k: u64) -> u64 {
        let (mut base, mut acc) = (a, 1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.q() - 2)
    }

    /// `x -> x^(2^s)`
    pub fn frob(&self, x: u64, s: u32) -> u64 {
        (0..s).fold(x, |acc, _| self.mul(acc, acc))
    }

    pub fn theta(&self, x: u64) -> u64 {
        self.frob(x, self.e + 1)
    }

    /// `xy + x^(θ+2) + y^θ`
    pub fn z(&self, x: u64, y: u64) -> u64 {
        self.mul(x, y) ^ self.mul(self.theta(x), self.mul(x, x)) ^ self.theta(y)
    }

    /// Multiplicative order by trial over the divisors of `q - 1`.
    pub fn order(&self, a: u64) -> u64 {
        let n = self.q() - 1;
        (1..=n).find(|&d| n.is_multiple_of(d) && self.pow(a, d) == 1).unwrap()
    }
}

/// Points are `0` for `U` and `1 + x q + y` for `(x, y)`.
#[derive(Clone, Copy, Debug)]
pub enum Pt {
    U,
    A(u64, u64),
}

impl Gf {
    pub fn point(&self, i: usize) -> Pt {
        if i == 0 {
            Pt::U
        } else {
            let k = i as u64 - 1;
            Pt::A(k / self.q(), k % self.q())
        }
    }

    pub fn index(&self, p: Pt) -> usize {
        match p {
            Pt::U => 0,
            Pt::A(x, y) => (1 + x * self.q() + y) as usize,
        }
    }

    pub fn points(&self) -> usize {
        (self.q() * self.q() + 1) as usize
    }

    /// Homogeneous coordinates `(1 : z : x : y)`, `U = (0 : 1 : 0 : 0)`.
    pub fn projective(&self, p: Pt) -> [u64; 4] {
        match p {
            Pt::U => [0, 1, 0, 0],
            Pt::A(x, y) => [1, self.z(x, y), x, y],
        }
    }

    /// Membership of a projective point in the ovoid.
    pub fn on_ovoid(&self, c: [u64; 4]) -> bool {
        if c[0] == 0 {
            return c[1] != 0 && c[2] == 0 && c[3] == 0;
        }
        let i = self.inv(c[0]);
        let (z, x, y) = (self.mul(c[1], i), self.mul(c[2], i), self.mul(c[3], i));
        z == self.z(x, y)
    }

    pub fn translate(&self, a: u64, b: u64, p: Pt) -> Pt {
        match p {
            Pt::U => Pt::U,
            Pt::A(x, y) => Pt::A(x ^ a, y ^ b ^ self.mul(self.theta(a), x)),
        }
    }

    pub fn torus(&self, l: u64, p: Pt) -> Pt {
        match p {
            Pt::U => Pt::U,
            Pt::A(x, y) => Pt::A(self.mul(l, x), self.mul(self.mul(self.theta(l), l), y)),
        }
    }

    pub fn swap(&self, p: Pt) -> Pt {
        match p {
            Pt::U => Pt::A(0, 0),
            Pt::A(0, 0) => Pt::U,
            Pt::A(x, y) => {
                let zi = self.inv(self.z(x, y));
                Pt::A(self.mul(y, zi), self.mul(x, zi))
            }
        }
    }

    pub fn frobenius(&self, s: u32, p: Pt) -> Pt {
        match p {
            Pt::U => Pt::U,
            Pt::A(x, y) => Pt::A(self.frob(x, s), self.frob(y, s)),
        }
    }

    pub fn perm_of(&self, f: impl Fn(Pt) -> Pt) -> Perm {
        (0..self.points())
            .map(|i| self.index(f(self.point(i))) as u16)
            .collect()
    }
}

pub fn compose(g: &Perm, h: &Perm) -> Perm {
    h.iter().map(|&p| g[p as usize]).collect()
}

pub fn inverse(g: &Perm) -> Perm {
    let mut out = vec![0u16; g.len()];
    for (i, &p) in g.iter().enumerate() {
        out[p as usize] = i as u16;
    }
    out
}

pub fn identity(n: usize) -> Perm {
    (0..n as u16).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn perm_order(g: &[u16]) -> u64 {
    let mut seen = vec![false; g.len()];
    let mut order = 1;
    for s in 0..g.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = g[x] as usize;
            len += 1;
        }
        if len > 0 {
            order = order / gcd(order, len) * len;
        }
    }
    order
}

/// `x g x^-1`
pub fn conj(g: &Perm, x: &Perm) -> Perm {
    compose(&compose(x, g), &inverse(x))
}

/// Closure under right multiplication by the generators.
pub fn closure(gens: &[Perm], n: usize) -> Vec<Perm> {
    let id = identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    out
}

/// Sz(q) as a permutation group on the ovoid, from `T(1,0)`, `D(λ)` and `W`.
pub struct PermGroup {
    pub gf: Gf,
    pub elements: Vec<Perm>,
    pub index: HashMap<Perm, u32>,
}

impl PermGroup {
    pub fn new(gf: Gf) -> Self {
        let lambda = (1..gf.q()).find(|&l| gf.order(l) == gf.q() - 1).unwrap();
        let gens = vec![
            gf.perm_of(|p| gf.translate(1, 0, p)),
            gf.perm_of(|p| gf.torus(lambda, p)),
            gf.perm_of(|p| gf.swap(p)),
        ];
        let elements = closure(&gens, gf.points());
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        PermGroup { gf, elements, index }
    }

    pub fn sz8() -> Self {
        PermGroup::new(Gf::new(3, 0b1011))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn idx(&self, g: &Perm) -> usize {
        self.index[g] as usize
    }

    /// Right cosets `H g`: coset id of every element.
    pub fn right_cosets(&self, h: &[Perm]) -> (Vec<u32>, usize) {
        let mut coset_of = vec![u32::MAX; self.len()];
        let mut count = 0;
        for (i, g) in self.elements.iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            for x in h {
                coset_of[self.idx(&compose(x, g))] = count;
            }
            count += 1;
        }
        (coset_of, count as usize)
    }
}

/// The base involution, derived from scratch: the involution at the first
/// point moved by the Frobenius whose product with its Frobenius image has
/// order `m`.
pub fn base_rhos(g: &PermGroup, m: u64) -> (usize, Vec<Perm>, [Perm; 3]) {
    let gf = g.gf;
    let k = gf.n / 3;
    let tau = gf.perm_of(|p| gf.frobenius(k, p));
    let point = (0..gf.points()).find(|&p| tau[p] as usize != p).unwrap();
    let involutions: Vec<Perm> = g
        .elements
        .iter()
        .filter(|x| x[point] as usize == point && perm_order(x) == 2)
        .cloned()
        .collect();
    let rho0 = involutions
        .iter()
        .find(|r| perm_order(&compose(r, &conj(r, &tau))) == m)
        .unwrap()
        .clone();
    let rho1 = conj(&rho0, &tau);
    let rho2 = conj(&rho1, &tau);
    (point, involutions, [rho0, rho1, rho2])
}

/// Girth of a simple graph by BFS from every vertex.
pub fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let c = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

/// The coset geometry of `(G; H_0, H_1, H_2)` with `H_i = <ρ_j, ρ_k>`,
/// built from explicit coset intersections.
pub struct CosetGeometry {
    pub h: [Vec<Perm>; 3],
    pub coset_of: [Vec<u32>; 3],
    pub per_type: [usize; 3],
    /// `incident[i][j]`: for each type-`i` coset, the incident type-`j` cosets.
    pub incident: [[Vec<Vec<u32>>; 3]; 3],
}

impl CosetGeometry {
    pub fn new(g: &PermGroup, rho: &[Perm; 3]) -> Self {
        let n = g.gf.points();
        let h = [0, 1, 2].map(|i| closure(&[rho[(i + 1) % 3].clone(), rho[(i + 2) % 3].clone()], n));
        let cosets = [0, 1, 2].map(|i| g.right_cosets(&h[i]));
        let per_type = [cosets[0].1, cosets[1].1, cosets[2].1];
        let coset_of = cosets.map(|c| c.0);
        let mut incident: [[Vec<Vec<u32>>; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let mut sets = vec![HashSet::new(); per_type[i]];
                for x in 0..g.len() {
                    sets[coset_of[i][x] as usize].insert(coset_of[j][x]);
                }
                incident[i][j] = sets
                    .into_iter()
                    .map(|s| {
                        let mut v: Vec<u32> = s.into_iter().collect();
                        v.sort_unstable();
                        v
                    })
                    .collect();
            }
        }
        CosetGeometry {
            h,
            coset_of,
            per_type,
            incident,
        }
    }

    pub fn is_incident(&self, i: usize, a: u32, j: usize, b: u32) -> bool {
        self.incident[i][j][a as usize].binary_search(&b).is_ok()
    }

    /// Triples of pairwise incident elements, one of each type.
    pub fn chamber_count(&self) -> usize {
        let mut count = 0;
        for a in 0..self.per_type[0] as u32 {
            for &b in &self.incident[0][1][a as usize] {
                for &c in &self.incident[0][2][a as usize] {
                    count += self.is_incident(1, b, 2, c) as usize;
                }
            }
        }
        count
    }

    /// Gonality of the residue of the type-`i` element `a`.
    pub fn residue_gonality(&self, i: usize, a: u32) -> Option<usize> {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let left = &self.incident[i][j][a as usize];
        let right = &self.incident[i][k][a as usize];
        let mut adj = vec![Vec::new(); left.len() + right.len()];
        for (x, &b) in left.iter().enumerate() {
            for (y, &c) in right.iter().enumerate() {
                if self.is_incident(j, b, k, c) {
                    adj[x].push(left.len() + y);
                    adj[left.len() + y].push(x);
                }
            }
        }
        girth(&adj).map(|g| g / 2)
    }
}

/// Union-find orbit count of the group generated by `perms` on `0..n`.
pub fn orbit_count(n: usize, perms: &[Vec<u32>]) -> (usize, Vec<usize>) {
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for perm in perms {
        for (x, &y) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let distinct: HashSet<usize> = roots.iter().copied().collect();
    (distinct.len(), roots)
}
