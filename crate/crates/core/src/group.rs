//! The Suzuki group Sz(q) acting on the ovoid.
//!
//! The group is generated by three families of point maps:
//!
//! * translations `T(a,b)`: `(x,y) -> (x+a, y+b+a^θ x)`, fixing `U`;
//! * torus elements `D(λ)`: `(x,y) -> (λx, λ^(θ+1) y)`, fixing `U` and `(0,0)`;
//! * the involution `W`, the coordinate swap `X0<->X1, X2<->X3`, which
//!   exchanges `U` and `(0,0)` and sends `(x,y)` to `(y/z, x/z)`.
//!
//! Products compose right to left: `(g*h)(P) = g(h(P))`.
//!
//! Only the identity fixes three ovoid points, so an element is determined by
//! its images of the base points `U`, `(0,0)`, `(0,1)` (its fingerprint).
//! Every element is stored in the canonical factorization
//! `T(a,b) D(λ)` (when it fixes `U`) or `T(a,b) W T(c,d) D(λ)` (otherwise),
//! which is recovered from the fingerprint after each product. Words therefore
//! never grow and a product costs a constant number of field operations.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{Field, FieldElement as Fe};
use crate::ovoid::{Ovoid, OvoidPoint, PointId};

/// Images of the three base points, a complete identity key for elements.
pub type Fingerprint = [PointId; 3];

/// Default bound on |G| for full enumeration.
pub const DEFAULT_TIER_THRESHOLD: u128 = 1_000_000;

/// A primitive point map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Prim {
    Translation(Fe, Fe),
    Torus(Fe),
    W,
    /// `x -> x^(2^s)` on both coordinates. Only meaningful inside balanced
    /// conjugation pairs; a lone field automorphism is not in the group.
    FieldAuto(u32),
}

/// Generator families accepted by [`Suzuki::make_generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    Translation(Fe, Fe),
    Torus(Fe),
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NormalForm {
    /// `T(a,b) D(λ)`
    Borel { a: Fe, b: Fe, lambda: Fe },
    /// `T(a,b) W T(c,d) D(λ)`
    Big { a: Fe, b: Fe, c: Fe, d: Fe, lambda: Fe },
}

/// An element of Sz(q). Equality, ordering and hashing go through the
/// fingerprint.
#[derive(Clone, Copy, Debug)]
pub struct GroupElement {
    form: NormalForm,
    fp: Fingerprint,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.fp == other.fp
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.fp.hash(state)
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.fp.cmp(&other.fp)
    }
}

impl GroupElement {
    #[inline]
    pub fn fingerprint(&self) -> Fingerprint {
        self.fp
    }

    pub fn is_identity(&self) -> bool {
        self.fp == [0, 1, 2]
    }

    /// Canonical word, applied right to left.
    pub fn word(&self) -> Vec<Prim> {
        match self.form {
            NormalForm::Borel { a, b, lambda } => {
                vec![Prim::Translation(a, b), Prim::Torus(lambda)]
            }
            NormalForm::Big { a, b, c, d, lambda } => vec![
                Prim::Translation(a, b),
                Prim::W,
                Prim::Translation(c, d),
                Prim::Torus(lambda),
            ],
        }
    }

    /// `t<type>`-free textual label of the fingerprint, `i_j_k`.
    pub fn label(&self) -> String {
        format!("{}_{}_{}", self.fp[0], self.fp[1], self.fp[2])
    }
}

/// Arithmetic facts about Sz(q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupParams {
    pub q: u64,
    /// `q + 2^(e+1) + 1`
    pub alpha: u64,
    /// `q - 2^(e+1) + 1`
    pub beta: u64,
    /// `(q^2+1) q^2 (q-1)`, saturating for very large `q`.
    pub order: u128,
    pub tier_threshold: u128,
}

impl GroupParams {
    pub fn new(q: u64, r: u64) -> Self {
        let q128 = q as u128;
        GroupParams {
            q,
            alpha: q + r + 1,
            beta: q - r + 1,
            order: (q128 * q128 + 1).saturating_mul(q128 * q128).saturating_mul(q128 - 1),
            tier_threshold: DEFAULT_TIER_THRESHOLD,
        }
    }

    /// Whether full enumeration is permitted.
    pub fn full_tier_allowed(&self) -> bool {
        self.order <= self.tier_threshold
    }

    pub fn require_full_tier(&self) -> Result<()> {
        if self.full_tier_allowed() {
            Ok(())
        } else {
            Err(Error::TierExceeded {
                order: self.order,
                threshold: self.tier_threshold,
            })
        }
    }
}

/// Sz(q) together with its ovoid.
#[derive(Debug)]
pub struct Suzuki {
    ovoid: Ovoid,
    params: GroupParams,
    /// Inverse of `θ+1` modulo `q-1`.
    theta_plus_one_inv: u64,
    base: [OvoidPoint; 3],
}

impl Suzuki {
    pub fn new(field: Field) -> Self {
        let p = *field.params();
        let n = (p.q - 1) as i128;
        let theta_plus_one_inv = mod_inverse((p.r + 1) as i128, n).expect("θ+1 is invertible modulo q-1") as u64;
        let base = [
            OvoidPoint::Infinity,
            OvoidPoint::Affine(Fe::ZERO, Fe::ZERO),
            OvoidPoint::Affine(Fe::ZERO, Fe::ONE),
        ];
        Suzuki {
            ovoid: Ovoid::new(field),
            params: GroupParams::new(p.q, p.r),
            theta_plus_one_inv,
            base,
        }
    }

    pub fn with_e(e: u32) -> Result<Self> {
        Ok(Self::new(Field::with_e(e)?))
    }

    #[inline]
    pub fn field(&self) -> &Field {
        self.ovoid.field()
    }

    #[inline]
    pub fn ovoid(&self) -> &Ovoid {
        &self.ovoid
    }

    #[inline]
    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn set_tier_threshold(&mut self, threshold: u128) {
        self.params.tier_threshold = threshold;
    }

    pub fn order(&self) -> u128 {
        self.params.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            form: NormalForm::Borel {
                a: Fe::ZERO,
                b: Fe::ZERO,
                lambda: Fe::ONE,
            },
            fp: [0, 1, 2],
        }
    }

    // ---- primitive maps -------------------------------------------------

    #[inline]
    fn translate(&self, a: Fe, b: Fe, p: OvoidPoint) -> OvoidPoint {
        match p {
            OvoidPoint::Infinity => p,
            OvoidPoint::Affine(x, y) => {
                let f = self.field();
                let y2 = f.add(f.add(y, b), f.mul(f.theta(a), x));
                OvoidPoint::Affine(f.add(x, a), y2)
            }
        }
    }

    #[inline]
    fn torus(&self, lambda: Fe, p: OvoidPoint) -> OvoidPoint {
        match p {
            OvoidPoint::Infinity => p,
            OvoidPoint::Affine(x, y) => {
                let f = self.field();
                let l_theta1 = f.mul(f.theta(lambda), lambda);
                OvoidPoint::Affine(f.mul(lambda, x), f.mul(l_theta1, y))
            }
        }
    }

    #[inline]
    fn swap(&self, p: OvoidPoint) -> OvoidPoint {
        match p {
            OvoidPoint::Infinity => OvoidPoint::Affine(Fe::ZERO, Fe::ZERO),
            OvoidPoint::Affine(x, y) if x.is_zero() && y.is_zero() => OvoidPoint::Infinity,
            OvoidPoint::Affine(x, y) => {
                let f = self.field();
                let zi = f.recip(self.ovoid.z(x, y));
                OvoidPoint::Affine(f.mul(y, zi), f.mul(x, zi))
            }
        }
    }

    #[inline]
    fn field_auto(&self, s: u32, p: OvoidPoint) -> OvoidPoint {
        match p {
            OvoidPoint::Infinity => p,
            OvoidPoint::Affine(x, y) => {
                let f = self.field();
                OvoidPoint::Affine(f.automorphism(x, s), f.automorphism(y, s))
            }
        }
    }

    #[inline]
    pub fn apply_prim(&self, prim: Prim, p: OvoidPoint) -> OvoidPoint {
        match prim {
            Prim::Translation(a, b) => self.translate(a, b, p),
            Prim::Torus(l) => self.torus(l, p),
            Prim::W => self.swap(p),
            Prim::FieldAuto(s) => self.field_auto(s, p),
        }
    }

    /// Evaluate a word right to left.
    pub fn apply_word(&self, word: &[Prim], p: OvoidPoint) -> OvoidPoint {
        word.iter().rev().fold(p, |acc, &prim| self.apply_prim(prim, acc))
    }

    fn prim_inverse(&self, prim: Prim) -> Prim {
        let f = self.field();
        match prim {
            Prim::Translation(a, b) => Prim::Translation(a, f.add(b, f.mul(f.theta(a), a))),
            Prim::Torus(l) => Prim::Torus(f.recip(l)),
            Prim::W => Prim::W,
            Prim::FieldAuto(s) => {
                let d = f.degree();
                Prim::FieldAuto((d - s % d) % d)
            }
        }
    }

    // ---- elements -------------------------------------------------------

    #[inline]
    pub fn apply(&self, g: &GroupElement, p: OvoidPoint) -> OvoidPoint {
        match g.form {
            NormalForm::Borel { a, b, lambda } => self.translate(a, b, self.torus(lambda, p)),
            NormalForm::Big { a, b, c, d, lambda } => {
                let p = self.torus(lambda, p);
                let p = self.translate(c, d, p);
                let p = self.swap(p);
                self.translate(a, b, p)
            }
        }
    }

    #[inline]
    pub fn apply_id(&self, g: &GroupElement, p: PointId) -> PointId {
        self.ovoid.index_of(self.apply(g, self.ovoid.point(p)))
    }

    /// Recover the canonical factorization from the images of the base points.
    fn element_from_images(&self, imgs: [OvoidPoint; 3]) -> GroupElement {
        let f = self.field();
        let fp = imgs.map(|p| self.ovoid.index_of(p));
        let split = |p1: OvoidPoint, p2: OvoidPoint| -> (Fe, Fe, Fe) {
            let (OvoidPoint::Affine(a, b), OvoidPoint::Affine(_, y2)) = (p1, p2) else {
                unreachable!("stabilizer of U moves (0,0) or (0,1) to U")
            };
            let mu = f.add(y2, b);
            (a, b, f.pow(mu, self.theta_plus_one_inv))
        };
        let form = match imgs[0] {
            OvoidPoint::Infinity => {
                let (a, b, lambda) = split(imgs[1], imgs[2]);
                NormalForm::Borel { a, b, lambda }
            }
            OvoidPoint::Affine(a, b) => {
                // h = W T(a,b)^-1 g fixes U
                let t_inv = self.prim_inverse(Prim::Translation(a, b));
                let back = |p| self.swap(self.apply_prim(t_inv, p));
                let (c, d, lambda) = split(back(imgs[1]), back(imgs[2]));
                NormalForm::Big { a, b, c, d, lambda }
            }
        };
        GroupElement { form, fp }
    }

    /// The element represented by a word. Field automorphisms must cancel out.
    pub fn from_word(&self, word: &[Prim]) -> Result<GroupElement> {
        let d = self.field().degree();
        let total: u32 = word
            .iter()
            .filter_map(|p| match p {
                Prim::FieldAuto(s) => Some(s % d),
                _ => None,
            })
            .sum();
        if !total.is_multiple_of(d) {
            return Err(Error::UnbalancedFieldAuto);
        }
        for p in word {
            if let Prim::Torus(l) = p {
                if l.is_zero() {
                    return Err(Error::ZeroTorusParameter);
                }
            }
        }
        Ok(self.element_from_images(self.base.map(|p| self.apply_word(word, p))))
    }

    /// A generator, checked to permute the ovoid: exhaustively when the
    /// group is small enough for full enumeration, on 1000 points otherwise.
    pub fn make_generator(&self, kind: Generator) -> Result<GroupElement> {
        let prim = match kind {
            Generator::Translation(a, b) => Prim::Translation(a, b),
            Generator::Torus(l) => {
                if l.is_zero() {
                    return Err(Error::ZeroTorusParameter);
                }
                Prim::Torus(l)
            }
            Generator::W => Prim::W,
        };
        let n = self.ovoid.len();
        let ids: Vec<PointId> = if self.params.full_tier_allowed() {
            (0..n as PointId).collect()
        } else {
            (0..1000u64).map(|i| ((i * 2_654_435_761) % n) as PointId).collect()
        };
        let inv = self.prim_inverse(prim);
        for &id in &ids {
            let p = self.ovoid.point(id);
            let img = self.apply_prim(prim, p);
            let on = self.ovoid.from_projective(self.ovoid.to_projective(img))?;
            if on != Some(img) || self.apply_prim(inv, img) != p {
                return Err(Error::OvoidNotPreserved(format!("{kind:?} at point {id}")));
            }
        }
        if ids.len() as u64 == n {
            let mut seen = vec![false; n as usize];
            for &id in &ids {
                let img = self.ovoid.index_of(self.apply_prim(prim, self.ovoid.point(id)));
                if std::mem::replace(&mut seen[img as usize], true) {
                    return Err(Error::OvoidNotPreserved(format!("{kind:?} not injective")));
                }
            }
        }
        self.from_word(&[prim])
    }

    pub fn translation(&self, a: Fe, b: Fe) -> GroupElement {
        self.element_from_images(self.base.map(|p| self.translate(a, b, p)))
    }

    pub fn torus_element(&self, lambda: Fe) -> Result<GroupElement> {
        if lambda.is_zero() {
            return Err(Error::ZeroTorusParameter);
        }
        Ok(self.element_from_images(self.base.map(|p| self.torus(lambda, p))))
    }

    pub fn w(&self) -> GroupElement {
        self.element_from_images(self.base.map(|p| self.swap(p)))
    }

    /// `g*h`, i.e. apply `h` first.
    #[inline]
    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let imgs = h.fp.map(|id| self.apply(g, self.ovoid.point(id)));
        self.element_from_images(imgs)
    }

    pub fn inv(&self, g: &GroupElement) -> GroupElement {
        let word: Vec<Prim> = g.word().into_iter().rev().map(|p| self.prim_inverse(p)).collect();
        self.element_from_images(self.base.map(|p| self.apply_word(&word, p)))
    }

    /// `x g x^-1`.
    pub fn conj(&self, g: &GroupElement, x: &GroupElement) -> GroupElement {
        self.mul(&self.mul(x, g), &self.inv(x))
    }

    pub fn pow(&self, g: &GroupElement, mut n: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = *g;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// Conjugate `g` by the field automorphism `x -> x^(2^s)`.
    pub fn field_conjugate(&self, g: &GroupElement, s: u32) -> GroupElement {
        let d = self.field().degree();
        let s = s % d;
        let s_inv = (d - s) % d;
        let imgs = self.base.map(|p| {
            let p = self.field_auto(s_inv, p);
            self.field_auto(s, self.apply(g, p))
        });
        self.element_from_images(imgs)
    }

    /// Least `n >= 1` with `g^n = 1`: the lcm of the cycle lengths of the base
    /// points.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        let limit = self.ovoid.len();
        let mut order = 1u64;
        for start in self.base {
            let mut p = self.apply(g, start);
            let mut len = 1u64;
            while p != start {
                p = self.apply(g, p);
                len += 1;
                assert!(len <= limit, "cycle longer than the ovoid");
            }
            order = lcm(order, len);
        }
        order
    }

    /// All fixed points, by a sweep over the ovoid.
    pub fn fixed_points(&self, g: &GroupElement) -> Vec<PointId> {
        (0..self.ovoid.len() as PointId)
            .filter(|&id| self.apply_id(g, id) == id)
            .collect()
    }

    /// The unique fixed point of an involution (or any element with exactly one).
    pub fn first_fixed_point(&self, g: &GroupElement) -> Option<PointId> {
        (0..self.ovoid.len() as PointId).find(|&id| self.apply_id(g, id) == id)
    }

    /// Full permutation table of `g` on the canonical point order.
    pub fn materialize(&self, g: &GroupElement) -> Vec<PointId> {
        (0..self.ovoid.len() as PointId)
            .map(|id| self.apply_id(g, id))
            .collect()
    }

    /// An element mapping `U` to `p`.
    pub fn to_point(&self, p: OvoidPoint) -> GroupElement {
        match p {
            OvoidPoint::Infinity => self.identity(),
            OvoidPoint::Affine(a, b) => self.from_word(&[Prim::Translation(a, b), Prim::W]).expect("plain word"),
        }
    }

    /// An element mapping `(U, (0,0))` to `(p, q)`.
    fn frame(&self, p: OvoidPoint, q: OvoidPoint) -> GroupElement {
        let u = self.to_point(p);
        let u_inv = self.inv(&u);
        match self.apply(&u_inv, q) {
            OvoidPoint::Affine(c, d) => self.mul(&u, &self.translation(c, d)),
            OvoidPoint::Infinity => unreachable!("q differs from p"),
        }
    }

    /// Some `g` with `g(p) = p2` and `g(q) = q2`, for `p != q`, `p2 != q2`.
    pub fn pair_transporter(
        &self,
        p: OvoidPoint,
        q: OvoidPoint,
        p2: OvoidPoint,
        q2: OvoidPoint,
    ) -> Result<GroupElement> {
        if p == q || p2 == q2 {
            return Err(Error::OvoidNotPreserved("transporter needs distinct points".into()));
        }
        let g1 = self.frame(p, q);
        let g2 = self.frame(p2, q2);
        let g = self.mul(&g2, &self.inv(&g1));
        debug_assert!(self.apply(&g, p) == p2 && self.apply(&g, q) == q2);
        Ok(g)
    }

    /// The `q-1` involutions with unique fixed point `p`, ordered by the
    /// translation parameter.
    pub fn involutions_fixing(&self, p: OvoidPoint) -> Vec<GroupElement> {
        let u = self.to_point(p);
        self.field()
            .elements()
            .skip(1)
            .map(|b| self.conj(&self.translation(Fe::ZERO, b), &u))
            .collect()
    }

    /// The unique `λ` with `λ^(θ+1) = mu`.
    pub fn theta_plus_one_root(&self, mu: Fe) -> Fe {
        self.field().pow(mu, self.theta_plus_one_inv)
    }

    /// The two-point stabilizer `G_{p,q}`, cyclic of order `q-1`.
    pub fn two_point_stabilizer(&self, p: OvoidPoint, q: OvoidPoint) -> Vec<GroupElement> {
        let x = self.frame(p, q);
        self.field()
            .elements()
            .skip(1)
            .map(|l| self.conj(&self.torus_element(l).expect("nonzero"), &x))
            .collect()
    }

    /// Centralizer of the involution(s) fixing `p`: the Sylow 2-subgroup of
    /// the point stabilizer, `q^2` elements, as a lazily generated family.
    pub fn sylow_at(&self, p: OvoidPoint) -> impl Iterator<Item = GroupElement> + '_ {
        let u = self.to_point(p);
        let u_inv = self.inv(&u);
        let q = self.field().q();
        (0..q * q).map(move |k| {
            let t = self.translation(Fe::new(k / q), Fe::new(k % q));
            self.mul(&self.mul(&u, &t), &u_inv)
        })
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElement {
        let q = self.field().q();
        let mut rand_fe = |nonzero: bool| loop {
            let v = Fe::new(rng.gen_range(0..q));
            if !nonzero || !v.is_zero() {
                return v;
            }
        };
        let (a, b, lambda) = (rand_fe(false), rand_fe(false), rand_fe(true));
        let borel = self
            .from_word(&[Prim::Translation(a, b), Prim::Torus(lambda)])
            .expect("plain word");
        let target = rng.gen_range(0..self.ovoid.len()) as PointId;
        self.mul(&self.to_point(self.ovoid.point(target)), &borel)
    }

    /// Closure of `gens` under multiplication, in breadth-first order.
    pub fn closure(&self, gens: &[GroupElement], cap: usize) -> Result<Vec<GroupElement>> {
        let id = self.identity();
        let mut seen: HashSet<Fingerprint> = HashSet::from([id.fp]);
        let mut out = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in gens {
                let h = self.mul(&g, s);
                if seen.insert(h.fp) {
                    if out.len() >= cap {
                        return Err(Error::ClosureTooLarge(cap));
                    }
                    out.push(h);
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }

    /// Generators used for enumeration: `T(1,0)`, `D(ω)` for a primitive
    /// `ω`, and `W`.
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        let f = self.field();
        let omega = f.primitive_element().unwrap_or(Fe::new(2));
        vec![
            self.translation(Fe::ONE, Fe::ZERO),
            self.torus_element(omega).expect("nonzero"),
            self.w(),
        ]
    }

    /// Breadth-first closure over the standard generators. Requires full tier.
    pub fn enumerate(&self) -> Result<EnumeratedGroup> {
        self.params.require_full_tier()?;
        let gens = self.standard_generators();
        let elements = self.closure(&gens, self.params.order as usize + 1)?;
        let index = elements.iter().enumerate().map(|(i, g)| (g.fp, i as u32)).collect();
        Ok(EnumeratedGroup {
            elements,
            index,
            generators: gens,
        })
    }
}

/// The full element table.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    elements: Vec<GroupElement>,
    index: HashMap<Fingerprint, u32>,
    generators: Vec<GroupElement>,
}

impl EnumeratedGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &GroupElement {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, g: &GroupElement) -> u32 {
        self.index[&g.fp]
    }

    pub fn try_index_of(&self, g: &GroupElement) -> Option<u32> {
        self.index.get(&g.fp).copied()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Index table of `i -> index(elements[i] * g)`.
    pub fn right_multiplication(&self, group: &Suzuki, g: &GroupElement) -> Vec<u32> {
        self.elements.iter().map(|x| self.index_of(&group.mul(x, g))).collect()
    }

    /// Index table of `i -> index(elements[i]^-1)`.
    pub fn inversion(&self, group: &Suzuki) -> Vec<u32> {
        self.elements.iter().map(|x| self.index_of(&group.inv(x))).collect()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn mod_inverse(a: i128, n: i128) -> Option<i128> {
    let (mut r0, mut r1) = (n, a.rem_euclid(n));
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (t0, t1) = (t1, t0 - k * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sz8() -> Suzuki {
        Suzuki::with_e(1).unwrap()
    }

    fn fe(v: u64) -> Fe {
        Fe::new(v)
    }

    #[test]
    fn group_params() {
        let g = sz8();
        let p = g.params();
        assert_eq!((p.alpha, p.beta, p.order), (13, 5, 29120));
        assert_eq!(p.alpha * p.beta, 65);
        let g = Suzuki::with_e(4).unwrap();
        let p = g.params();
        assert_eq!((p.alpha, p.beta), (545, 481));
        assert_eq!(p.alpha * p.beta, 512 * 512 + 1);
        assert_eq!(p.order, 262_145u128 * 262_144 * 511);
        assert!(!p.full_tier_allowed());
    }

    #[test]
    fn w_example() {
        let g = sz8();
        let w = g.make_generator(Generator::W).unwrap();
        assert_eq!(
            g.apply(&w, OvoidPoint::Affine(fe(2), fe(0))),
            OvoidPoint::Affine(fe(0), fe(4))
        );
        assert_eq!(g.apply(&w, OvoidPoint::Infinity), OvoidPoint::Affine(fe(0), fe(0)));
        assert!(g.mul(&w, &w).is_identity());
    }

    #[test]
    fn generator_examples() {
        let g = sz8();
        let t = g.make_generator(Generator::Translation(fe(0), fe(1))).unwrap();
        assert!(g.mul(&t, &t).is_identity());
        let d = g.make_generator(Generator::Torus(fe(2))).unwrap();
        assert_eq!(g.element_order(&d), 7);
        assert!(matches!(
            g.make_generator(Generator::Torus(Fe::ZERO)),
            Err(Error::ZeroTorusParameter)
        ));
        for a in g.field().elements() {
            for b in g.field().elements() {
                let t = g.translation(a, b);
                assert_eq!(g.apply(&t, OvoidPoint::Infinity), OvoidPoint::Infinity);
                if a.is_zero() && !b.is_zero() {
                    assert_eq!(g.element_order(&t), 2);
                }
            }
        }
    }

    #[test]
    fn torus_order_is_multiplicative_order() {
        let g = sz8();
        let f = g.field();
        for l in f.elements().skip(1) {
            let d = g.torus_element(l).unwrap();
            assert_eq!(g.element_order(&d), f.multiplicative_order(l).unwrap());
        }
    }

    #[test]
    fn translation_closure_law() {
        let g = sz8();
        let f = g.field();
        for a in f.elements() {
            for b in f.elements().step_by(3) {
                for a2 in f.elements() {
                    let b2 = fe(5);
                    let lhs = g.mul(&g.translation(a, b), &g.translation(a2, b2));
                    let cross = f.mul(f.theta(a), a2);
                    let rhs = g.translation(f.add(a, a2), f.add(f.add(b, b2), cross));
                    assert_eq!(lhs, rhs);
                    for p in g.ovoid().points() {
                        assert_eq!(g.apply(&lhs, p), g.apply(&rhs, p));
                    }
                }
            }
        }
    }

    #[test]
    fn product_and_inverse_agree_pointwise() {
        let g = Suzuki::with_e(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = g.random_element(&mut rng);
            let y = g.random_element(&mut rng);
            let xy = g.mul(&x, &y);
            assert!(g.mul(&x, &g.inv(&x)).is_identity());
            for _ in 0..20 {
                let p = g.ovoid().point(rng.gen_range(0..262_145));
                assert_eq!(g.apply(&xy, p), g.apply(&x, g.apply(&y, p)));
            }
            // the canonical word evaluates to the same map
            let rebuilt = g.from_word(&xy.word()).unwrap();
            assert_eq!(rebuilt, xy);
        }
    }

    #[test]
    fn unbalanced_field_automorphism_rejected() {
        let g = sz8();
        assert!(matches!(
            g.from_word(&[Prim::FieldAuto(1), Prim::W]),
            Err(Error::UnbalancedFieldAuto)
        ));
        let conj = g
            .from_word(&[Prim::FieldAuto(1), Prim::Translation(fe(2), fe(3)), Prim::FieldAuto(2)])
            .unwrap();
        assert_eq!(conj, g.translation(fe(4), g.field().frobenius(fe(3))));
    }

    #[test]
    fn enumeration_has_order_29120() {
        let g = sz8();
        let table = g.enumerate().unwrap();
        assert_eq!(table.len(), 29120);
        let fps: HashSet<_> = table.elements().iter().map(|x| x.fingerprint()).collect();
        assert_eq!(fps.len(), 29120);
        let orbit: HashSet<_> = table.elements().iter().map(|x| x.fingerprint()[0]).collect();
        assert_eq!(orbit.len(), 65);
    }

    #[test]
    fn enumeration_refused_above_threshold() {
        let g = Suzuki::with_e(4).unwrap();
        assert!(matches!(g.enumerate(), Err(Error::TierExceeded { .. })));
    }

    #[test]
    fn involutions_fixing_points() {
        let g = sz8();
        for id in [0u32, 1, 17, 64] {
            let p = g.ovoid().point(id);
            let inv = g.involutions_fixing(p);
            assert_eq!(inv.len(), 7);
            let distinct: HashSet<_> = inv.iter().collect();
            assert_eq!(distinct.len(), 7);
            for x in &inv {
                assert_eq!(g.element_order(x), 2);
                assert_eq!(g.fixed_points(x), vec![id]);
            }
        }
        let g = Suzuki::with_e(4).unwrap();
        assert_eq!(g.involutions_fixing(OvoidPoint::Infinity).len(), 511);
    }

    #[test]
    fn pair_transporter_exhaustive_sz8() {
        let g = sz8();
        let pts: Vec<_> = g.ovoid().points().collect();
        let (p2, q2) = (pts[5], pts[40]);
        for &p in &pts {
            for &q in &pts {
                if p == q {
                    continue;
                }
                let t = g.pair_transporter(p, q, p2, q2).unwrap();
                assert_eq!((g.apply(&t, p), g.apply(&t, q)), (p2, q2));
                let s = g.two_point_stabilizer(p2, q2)[2];
                let t2 = g.mul(&s, &t);
                assert_eq!((g.apply(&t2, p), g.apply(&t2, q)), (p2, q2));
            }
        }
        let t = g.pair_transporter(pts[3], pts[9], pts[3], pts[9]).unwrap();
        assert_eq!(g.apply(&t, pts[3]), pts[3]);
        assert!(g.pair_transporter(pts[1], pts[1], pts[2], pts[3]).is_err());
    }

    #[test]
    fn sylow_family_centralizes_involutions() {
        let g = sz8();
        let p = g.ovoid().point(20);
        let inv = g.involutions_fixing(p);
        let fam: Vec<_> = g.sylow_at(p).collect();
        assert_eq!(fam.iter().collect::<HashSet<_>>().len(), 64);
        for s in &fam {
            assert_eq!(g.apply(s, p), p);
            for x in &inv {
                assert_eq!(g.conj(x, s), *x);
            }
        }
    }

    #[test]
    fn materialized_table_matches_word() {
        let g = sz8();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let x = g.random_element(&mut rng);
            let table = g.materialize(&x);
            for (id, &img) in table.iter().enumerate() {
                let p = g.ovoid().point(id as u32);
                assert_eq!(g.ovoid().index_of(g.apply_word(&x.word(), p)), img);
            }
        }
    }

    #[test]
    fn mod_inverse_works() {
        assert_eq!(mod_inverse(5, 7), Some(3));
        assert_eq!(mod_inverse(33, 511), Some(31)); // 33*31 = 1023 = 2*511 + 1
        assert_eq!(mod_inverse(7, 511), None);
    }
}
