//! Conjugacy classes.
//!
//! On the full tier the class partition is computed by breadth-first
//! conjugation from each unassigned element. Without a table, two elements
//! can still be compared with [`conjugate_by_sweep`], which canonicalizes
//! the element on the triangle `(P, gP, g²P)` for every point `P`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::gf2m::FieldElement;
use crate::group::{EnumeratedGroup, Fingerprint, GroupElement, GroupParams, Suzuki};
use crate::ovoid::OvoidPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    /// Table index of the first member in enumeration order.
    pub representative: u32,
    pub size: u32,
    pub order: u64,
}

/// The class partition of an enumerated group.
#[derive(Clone, Debug)]
pub struct ClassTable {
    class_of: Vec<u32>,
    classes: Vec<ConjugacyClass>,
}

impl ClassTable {
    pub fn build(group: &Suzuki, table: &EnumeratedGroup) -> Self {
        let gens: Vec<(GroupElement, GroupElement)> = table.generators().iter().map(|s| (*s, group.inv(s))).collect();
        let n = table.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut size = 1u32;
            let mut queue = VecDeque::from([start as u32]);
            while let Some(i) = queue.pop_front() {
                let g = table.element(i);
                for (s, s_inv) in &gens {
                    let c = group.mul(&group.mul(s, g), s_inv);
                    let j = table.index_of(&c) as usize;
                    if class_of[j] == u32::MAX {
                        class_of[j] = id;
                        size += 1;
                        queue.push_back(j as u32);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: start as u32,
                size,
                order: group.element_order(table.element(start as u32)),
            });
        }
        ClassTable { class_of, classes }
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_index(&self, table: &EnumeratedGroup, g: &GroupElement) -> u32 {
        self.class_of[table.index_of(g) as usize]
    }

    pub fn are_conjugate(&self, table: &EnumeratedGroup, g: &GroupElement, h: &GroupElement) -> bool {
        self.class_index(table, g) == self.class_index(table, h)
    }

    /// Sorted orders of the nontrivial classes of odd order.
    pub fn odd_order_class_orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .classes
            .iter()
            .map(|c| c.order)
            .filter(|&o| o > 1 && o % 2 == 1)
            .collect();
        v.sort_unstable();
        v
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n)
        .take_while(|d| d * d <= n)
        .filter(|&d| n.is_multiple_of(d))
        .collect();
    let mirrored: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&d| d * d != n).collect();
    out.extend(mirrored);
    out
}

fn euler_phi(n: u64) -> u64 {
    crate::gf2m::factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Predicted sorted orders of the `q-1` nontrivial odd-order classes: each
/// divisor `d > 1` of `q-1` contributes `φ(d)/2` classes, each divisor of
/// `α` or `β` contributes `φ(d)/4`.
pub fn expected_odd_order_class_multiset(params: &GroupParams) -> Vec<u64> {
    let mut out = Vec::new();
    for (n, share) in [(params.q - 1, 2), (params.alpha, 4), (params.beta, 4)] {
        for d in divisors(n).into_iter().filter(|&d| d > 1) {
            out.extend(std::iter::repeat_n(d, (euler_phi(d) / share) as usize));
        }
    }
    out.sort_unstable();
    out
}

/// Whether `m` is the order of some odd-order element: `m` odd and dividing
/// one of `q-1`, `α`, `β`.
pub fn is_odd_element_order(params: &GroupParams, m: u64) -> bool {
    m % 2 == 1 && [params.q - 1, params.alpha, params.beta].iter().any(|n| n % m == 0)
}

/// Canonical conjugate of `g` relative to the triangle `(p, g p, g² p)`:
/// the unique conjugate `k = y g y^-1` with `y p = U`, `y g p = (0,0)` and
/// `y g² p` normalized by the torus to `(1, *)` or `(0, 1)`.
///
/// Returns `None` when `p, g p, g² p` are not distinct.
pub fn triangle_key(group: &Suzuki, g: &GroupElement, p: OvoidPoint) -> Option<Fingerprint> {
    let gp = group.apply(g, p);
    let ggp = group.apply(g, gp);
    if gp == p || ggp == p {
        return None;
    }
    let origin = OvoidPoint::Affine(FieldElement::ZERO, FieldElement::ZERO);
    let x = group.pair_transporter(p, gp, OvoidPoint::Infinity, origin).ok()?;
    let OvoidPoint::Affine(rx, ry) = group.apply(&x, ggp) else {
        return None;
    };
    let f = group.field();
    let lambda = if !rx.is_zero() {
        f.recip(rx)
    } else {
        group.theta_plus_one_root(f.recip(ry))
    };
    let d = group.torus_element(lambda).ok()?;
    let y = group.mul(&d, &x);
    Some(group.conj(g, &y).fingerprint())
}

/// Conjugacy test that needs no element table: `O(q²)` group operations.
pub fn conjugate_by_sweep(group: &Suzuki, g: &GroupElement, h: &GroupElement) -> bool {
    let (og, oh) = (group.element_order(g), group.element_order(h));
    if og != oh {
        return false;
    }
    if og <= 2 {
        // a single class of involutions
        return true;
    }
    let ovoid = group.ovoid();
    let Some(target) = ovoid.points().find_map(|p| triangle_key(group, h, p)) else {
        return false;
    };
    ovoid.points().any(|p| triangle_key(group, g, p) == Some(target))
}
