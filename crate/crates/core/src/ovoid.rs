//! The Suzuki-Tits ovoid in PG(3, q).
//!
//! Points are `U = (0:1:0:0)` together with the affine points `(1:z:x:y)`
//! satisfying `z = xy + x^(θ+2) + y^θ`. They are indexed canonically:
//! `U` first, then `(x, y)` ordered by the bit patterns of `x` then `y`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement};

/// Canonical index of an ovoid point.
pub type PointId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OvoidPoint {
    Infinity,
    Affine(FieldElement, FieldElement),
}

impl std::fmt::Display for OvoidPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OvoidPoint::Infinity => write!(f, "U"),
            OvoidPoint::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

#[derive(Debug)]
pub struct Ovoid {
    field: Field,
}

impl Ovoid {
    pub fn new(field: Field) -> Self {
        Ovoid { field }
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Number of points, `q^2 + 1`.
    pub fn len(&self) -> u64 {
        let q = self.field.q();
        q * q + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The derived coordinate `z = xy + x^(θ+2) + y^θ`.
    #[inline]
    pub fn z(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let f = &self.field;
        let x_theta = f.theta(x);
        let x_theta2 = f.mul(x_theta, f.square(x));
        f.add(f.add(f.mul(x, y), x_theta2), f.theta(y))
    }

    #[inline]
    pub fn index_of(&self, p: OvoidPoint) -> PointId {
        match p {
            OvoidPoint::Infinity => 0,
            OvoidPoint::Affine(x, y) => (1 + x.bits() * self.field.q() + y.bits()) as PointId,
        }
    }

    #[inline]
    pub fn point(&self, id: PointId) -> OvoidPoint {
        if id == 0 {
            return OvoidPoint::Infinity;
        }
        let q = self.field.q();
        let k = id as u64 - 1;
        OvoidPoint::Affine(FieldElement::new(k / q), FieldElement::new(k % q))
    }

    pub fn checked_point(&self, id: u64) -> Result<OvoidPoint> {
        if id >= self.len() {
            return Err(Error::InvalidPoint(id));
        }
        Ok(self.point(id as PointId))
    }

    /// All points in canonical order.
    pub fn points(&self) -> impl Iterator<Item = OvoidPoint> + '_ {
        (0..self.len() as PointId).map(move |i| self.point(i))
    }

    /// Homogeneous coordinates `(X0:X1:X2:X3)` of a point.
    pub fn to_projective(&self, p: OvoidPoint) -> [FieldElement; 4] {
        match p {
            OvoidPoint::Infinity => [
                FieldElement::ZERO,
                FieldElement::ONE,
                FieldElement::ZERO,
                FieldElement::ZERO,
            ],
            OvoidPoint::Affine(x, y) => [FieldElement::ONE, self.z(x, y), x, y],
        }
    }

    /// Whether `(X0:X1:X2:X3)` lies on the ovoid.
    pub fn projective_membership(&self, coords: [FieldElement; 4]) -> Result<bool> {
        Ok(self.from_projective(coords)?.is_some())
    }

    /// The ovoid point with these homogeneous coordinates, if any.
    pub fn from_projective(&self, coords: [FieldElement; 4]) -> Result<Option<OvoidPoint>> {
        let [x0, x1, x2, x3] = coords;
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::AllZeroCoordinates);
        }
        let f = &self.field;
        if x0.is_zero() {
            let at_u = x2.is_zero() && x3.is_zero();
            return Ok(at_u.then_some(OvoidPoint::Infinity));
        }
        let inv = f.recip(x0);
        let (x, y, z) = (f.mul(x2, inv), f.mul(x3, inv), f.mul(x1, inv));
        Ok((z == self.z(x, y)).then_some(OvoidPoint::Affine(x, y)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ovoid(degree: u32) -> Ovoid {
        Ovoid::new(Field::with_degree(degree).unwrap())
    }

    #[test]
    fn point_counts() {
        assert_eq!(ovoid(3).len(), 65);
        assert_eq!(ovoid(3).points().count(), 65);
        assert_eq!(ovoid(9).len(), 262_145);
    }

    #[test]
    fn canonical_ordering() {
        let o = ovoid(3);
        assert_eq!(o.point(0), OvoidPoint::Infinity);
        assert_eq!(o.point(1), OvoidPoint::Affine(FieldElement::ZERO, FieldElement::ZERO));
        assert_eq!(o.point(2), OvoidPoint::Affine(FieldElement::ZERO, FieldElement::ONE));
        let pts: Vec<_> = o.points().collect();
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(o.index_of(*p) as usize, i);
        }
        assert!(matches!(o.checked_point(65), Err(Error::InvalidPoint(65))));
    }

    #[test]
    fn membership_examples() {
        let o = ovoid(3);
        let el = FieldElement::new;
        assert!(o.projective_membership([el(0), el(1), el(0), el(0)]).unwrap());
        assert!(o.projective_membership([el(1), el(0), el(0), el(0)]).unwrap());
        assert!(o.projective_membership([el(1), el(5), el(2), el(0)]).unwrap());
        assert!(!o.projective_membership([el(1), el(4), el(2), el(0)]).unwrap());
        assert!(!o.projective_membership([el(0), el(1), el(1), el(0)]).unwrap());
        assert!(matches!(
            o.projective_membership([el(0); 4]),
            Err(Error::AllZeroCoordinates)
        ));
        // scaling a representative keeps it on the ovoid
        let f = o.field();
        for p in o.points() {
            let c = o.to_projective(p);
            let s = el(3);
            let scaled = c.map(|v| f.mul(v, s));
            assert_eq!(o.from_projective(scaled).unwrap(), Some(p));
        }
    }

    #[test]
    fn z_vanishes_only_at_origin() {
        for d in [3, 5, 9] {
            let o = ovoid(d);
            let zeros = o
                .points()
                .filter(|p| matches!(p, OvoidPoint::Affine(x, y) if o.z(*x, *y).is_zero()))
                .count();
            assert_eq!(zeros, 1, "degree {d}");
        }
    }
}
