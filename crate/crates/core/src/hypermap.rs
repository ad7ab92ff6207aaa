//! Regular hypermaps of type `(m,m,m)`.
//!
//! Flags are group elements and `r_i` is right multiplication by `ρ_i`.
//! Hypervertices, hyperedges and hyperfaces are the orbits of `<r1,r2>`,
//! `<r2,r0>` and `<r0,r1>`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::chamber::{Cells, ChamberSystem, Triangle};
use crate::error::Result;
use crate::geometry::DualitySearch;
use crate::gf2m::FieldParams;
use crate::group::{lcm, EnumeratedGroup, GroupElement, GroupParams, Suzuki};
use crate::triality::TrialityMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaBeta {
    pub alpha: u64,
    pub beta: u64,
    /// Whichever of `α`, `β` is `2 mod 3`.
    pub selected: u64,
}

pub fn alpha_beta(params: &FieldParams) -> AlphaBeta {
    let g = GroupParams::new(params.q, params.r);
    let selected = if g.alpha % 3 == 2 { g.alpha } else { g.beta };
    AlphaBeta {
        alpha: g.alpha,
        beta: g.beta,
        selected,
    }
}

/// The colour pairs generating vertex, edge and face orbits.
pub const ORBIT_COLORS: [[usize; 2]; 3] = [[1, 2], [2, 0], [0, 1]];

#[derive(Clone, Debug)]
pub struct Hypermap {
    flags: ChamberSystem,
}

fn permutation_order(perm: &[u32]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

impl Hypermap {
    /// Requires full tier and a non-degenerate triangle.
    pub fn build(group: &Suzuki, table: &EnumeratedGroup, triangle: &Triangle) -> Result<Self> {
        Ok(Hypermap {
            flags: ChamberSystem::build(group, table, triangle)?,
        })
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    pub fn r(&self, i: usize, flag: u32) -> u32 {
        self.flags.neighbor(i, flag)
    }

    pub fn is_involutory(&self) -> bool {
        (0..3).all(|i| (0..self.flag_count() as u32).all(|f| self.r(i, self.r(i, f)) == f))
    }

    /// `(|r1 r2|, |r2 r0|, |r0 r1|)` as permutations of the flags.
    pub fn type_triple(&self) -> [u64; 3] {
        ORBIT_COLORS.map(|[a, b]| {
            let perm: Vec<u32> = (0..self.flag_count() as u32).map(|f| self.r(a, self.r(b, f))).collect();
            permutation_order(&perm)
        })
    }

    /// Orbits of `<r_a, r_b>`.
    pub fn orbits(&self, kind: usize) -> Cells {
        self.flags.cells(&ORBIT_COLORS[kind])
    }

    /// Numbers of hypervertices, hyperedges and hyperfaces.
    pub fn counts(&self) -> [usize; 3] {
        [0, 1, 2].map(|k| self.orbits(k).sizes.len())
    }

    /// The monodromy group is transitive on flags.
    pub fn is_connected(&self) -> bool {
        self.flags.is_connected()
    }

    /// Left multiplication by each `x` commutes with `r0, r1, r2`.
    pub fn left_action_commutes(&self, group: &Suzuki, table: &EnumeratedGroup, xs: &[GroupElement]) -> bool {
        self.flags.left_translations_commute(group, table, xs)
    }

    pub fn edges(&self) -> Vec<(u32, u32, u8)> {
        self.flags.edges()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationReport {
    /// `τ` maps vertices to edges, edges to faces and faces to vertices.
    pub cyclic_operation: bool,
    /// `τ^3` is the identity on flags.
    pub cube_identity: bool,
    /// Automorphisms of `G` swapping two of the `ρ_i` and fixing the third.
    pub dualities: usize,
}

/// Whether `f` maps the blocks of `from` bijectively onto the blocks of `to`.
fn maps_partition(f: &[u32], from: &Cells, to: &Cells) -> bool {
    let mut image: HashMap<u32, u32> = HashMap::new();
    for (x, &b) in from.cell_of.iter().enumerate() {
        let target = to.cell_of[f[x] as usize];
        if *image.entry(b).or_insert(target) != target {
            return false;
        }
    }
    let mut targets: Vec<u32> = image.values().copied().collect();
    targets.sort_unstable();
    targets.dedup();
    targets.len() == to.sizes.len() && image.len() == from.sizes.len()
}

pub fn hypermap_operation_search(
    group: &Suzuki,
    table: &EnumeratedGroup,
    tau: &TrialityMap,
    map: &Hypermap,
    search: &DualitySearch,
) -> OperationReport {
    let f: Vec<u32> = table
        .elements()
        .iter()
        .map(|g| table.index_of(&tau.conjugate(group, g)))
        .collect();
    let orbits = [0, 1, 2].map(|k| map.orbits(k));
    let cyclic_operation = (0..3).all(|k| maps_partition(&f, &orbits[k], &orbits[(k + 1) % 3]));
    let cube_identity = (0..f.len()).all(|x| f[f[f[x] as usize] as usize] as usize == x);
    OperationReport {
        cyclic_operation,
        cube_identity,
        dualities: search.dualities(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::Construction;
    use crate::geometry::duality_search;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn alpha_beta_values() {
        let p = FieldParams::for_e(1).unwrap();
        assert_eq!(
            alpha_beta(&p),
            AlphaBeta {
                alpha: 13,
                beta: 5,
                selected: 5
            }
        );
        let p = FieldParams::for_e(4).unwrap();
        assert_eq!(
            alpha_beta(&p),
            AlphaBeta {
                alpha: 545,
                beta: 481,
                selected: 545
            }
        );
        for e in 1..=15 {
            let p = FieldParams::for_e(e).unwrap();
            let ab = alpha_beta(&p);
            assert_eq!(ab.alpha * ab.beta, p.q * p.q + 1);
            assert_eq!((ab.alpha % 3 == 2) as u8 + (ab.beta % 3 == 2) as u8, 1);
            assert_eq!((p.q * p.q + 1) % 5, 0);
        }
    }

    #[test]
    fn permutation_orders() {
        assert_eq!(permutation_order(&[1, 2, 0, 4, 3]), 6);
        assert_eq!(permutation_order(&[0, 1]), 1);
    }

    #[test]
    fn hypermap_sz8() {
        let c = Construction::new(1, 5, None).unwrap();
        let table = c.group.enumerate().unwrap();
        let h = Hypermap::build(&c.group, &table, &c.triangle).unwrap();
        assert_eq!(h.flag_count(), 29120);
        assert!(h.is_involutory());
        assert_eq!(h.type_triple(), [5, 5, 5]);
        assert_eq!(h.counts(), [2912; 3]);
        assert!(h.is_connected());
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let xs: Vec<_> = (0..3).map(|_| c.group.random_element(&mut rng)).collect();
        assert!(h.left_action_commutes(&c.group, &table, &xs));
        let search = duality_search(&c.group, &c.triangle);
        let ops = hypermap_operation_search(&c.group, &table, &c.tau, &h, &search);
        assert_eq!(
            ops,
            OperationReport {
                cyclic_operation: true,
                cube_identity: true,
                dualities: 0
            }
        );
    }

    #[test]
    fn order_thirteen_hypermap() {
        let c = Construction::new(1, 13, None).unwrap();
        assert!(!c.triangle.is_degenerate());
        let table = c.group.enumerate().unwrap();
        let h = Hypermap::build(&c.group, &table, &c.triangle).unwrap();
        assert_eq!(h.type_triple(), [13, 13, 13]);
        assert_eq!(h.counts(), [1120; 3]);
    }
}
