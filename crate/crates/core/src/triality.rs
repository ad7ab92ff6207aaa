//! The order-3 outer automorphism `x -> x^(2^k)`, `k = (2e+1)/3`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::FieldParams;
use crate::group::{EnumeratedGroup, GroupElement, Suzuki};
use crate::ovoid::{OvoidPoint, PointId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialityMap {
    /// `k` or `2k`.
    pub exponent: u32,
    pub degree: u32,
}

impl TrialityMap {
    /// The canonical triality, exponent `k`.
    pub fn new(params: &FieldParams) -> Result<Self> {
        let k = params.triality_exponent.ok_or(Error::NoTriality(params.degree))?;
        let t = TrialityMap {
            exponent: k,
            degree: params.degree,
        };
        debug_assert_eq!((3 * t.exponent) % t.degree, 0);
        Ok(t)
    }

    /// `τ^n`.
    pub fn power(&self, n: u32) -> TrialityMap {
        TrialityMap {
            exponent: (self.exponent * n) % self.degree,
            degree: self.degree,
        }
    }

    pub fn inverse(&self) -> TrialityMap {
        self.power(2)
    }

    pub fn apply(&self, group: &Suzuki, p: OvoidPoint) -> OvoidPoint {
        match p {
            OvoidPoint::Infinity => p,
            OvoidPoint::Affine(x, y) => {
                let f = group.field();
                OvoidPoint::Affine(f.automorphism(x, self.exponent), f.automorphism(y, self.exponent))
            }
        }
    }

    pub fn apply_id(&self, group: &Suzuki, p: PointId) -> PointId {
        let o = group.ovoid();
        o.index_of(self.apply(group, o.point(p)))
    }

    /// `τ g τ^-1`.
    pub fn conjugate(&self, group: &Suzuki, g: &GroupElement) -> GroupElement {
        group.field_conjugate(g, self.exponent)
    }

    /// Points fixed by `τ`: `U` and the affine points over `GF(2^k)`.
    pub fn fixed_points(&self, group: &Suzuki) -> Vec<PointId> {
        (0..group.ovoid().len() as PointId)
            .filter(|&p| self.apply_id(group, p) == p)
            .collect()
    }

    /// `2^(2k) + 1`.
    pub fn expected_fixed_point_count(&self) -> u64 {
        let k = self.degree / 3;
        (1u64 << (2 * k)) + 1
    }

    /// The first point in canonical order that `τ` moves.
    pub fn default_base_point(&self, group: &Suzuki) -> PointId {
        (0..group.ovoid().len() as PointId)
            .find(|&p| self.apply_id(group, p) != p)
            .expect("τ is not the identity")
    }
}

/// Elements `g` whose inner automorphism agrees with `τ` on every generator
/// of the table. An empty result shows `τ` is outer.
pub fn inner_realizations(group: &Suzuki, table: &EnumeratedGroup, tau: &TrialityMap) -> Vec<GroupElement> {
    let targets: Vec<(GroupElement, GroupElement)> = table
        .generators()
        .iter()
        .map(|s| (*s, tau.conjugate(group, s)))
        .collect();
    table
        .elements()
        .iter()
        .filter(|g| targets.iter().all(|(s, t)| group.conj(s, g) == *t))
        .copied()
        .collect()
}
