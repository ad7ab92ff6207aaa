//! Verification reports.
//!
//! A report runs a named suite of checks against one [`Construction`] and
//! records a status and a JSON object of details per check. Every check that
//! samples gets its own ChaCha8 stream seeded with `seed ^ fnv1a(name)`, so
//! adding or reordering checks does not perturb the others and a report is a
//! pure function of `(e, m, point, suite, tier, seed)`.
//!
//! Wall time is kept on each [`Check`] but never serialized.

use std::cell::OnceCell;
use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chamber::{
    check_residual_connectedness, flag_transitivity_products, geometric_adjacency_check, is_prime,
    lemma_conjugacy_full, lemma_conjugacy_sampled, normalizer_lemma, triple_set_stabilizer,
    triple_set_stabilizer_sweep, ChamberSystem, Claim, Construction,
};
use crate::conjugacy::{conjugate_by_sweep, expected_odd_order_class_multiset, is_odd_element_order, ClassTable};
use crate::error::Result;
use crate::geometry::{
    canonical_coset, duality_search, geometry_from_chamber_system, local_flag_extensions, local_residue,
    triality_correlation, triality_correlation_sampled, Coset, DualitySearch, IncidenceGeometry, IncidenceOracle,
};
use crate::gf2m::FieldElement;
use crate::group::{EnumeratedGroup, GroupElement};
use crate::hypermap::{hypermap_operation_search, Hypermap};
use crate::triality::inner_realizations;

pub const SCHEMA: &str = "ovgeo/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    /// Enumerate the group; exhaustive checks.
    Full,
    /// Table-free checks on seeded samples and explicit small sets.
    Spot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Census,
    Triangle,
    Rc,
    Ft,
    Thin,
    Diagram,
    Correlations,
    Hypermap,
    Lemmas,
}

impl Suite {
    pub fn check_names(self) -> &'static [&'static str] {
        match self {
            Suite::All => &[
                "field",
                "group_order",
                "ovoid",
                "triality",
                "census",
                "triangle",
                "residual_connectedness",
                "ft_products",
                "geometry_chambers",
                "chamber_system",
                "geometry_thin",
                "diagram",
                "triality_correlation",
                "duality_search",
                "correlation_group",
                "hypermap",
                "hypermap_operations",
                "lemma_conjugacy",
                "lemma_triple_stabilizer",
                "lemma_normalizer",
            ],
            Suite::Census => &["census"],
            Suite::Triangle => &["triangle"],
            Suite::Rc => &["residual_connectedness"],
            Suite::Ft => &["ft_products", "geometry_chambers"],
            Suite::Thin => &["chamber_system", "geometry_thin"],
            Suite::Diagram => &["diagram"],
            Suite::Correlations => &["triality_correlation", "duality_search", "correlation_group"],
            Suite::Hypermap => &["hypermap", "hypermap_operations"],
            Suite::Lemmas => &["lemma_conjugacy", "lemma_triple_stabilizer", "lemma_normalizer"],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: Value,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub e: u32,
    pub q: u64,
    pub m: u64,
    pub point: u32,
    pub tier: Tier,
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// No check failed. Skipped checks do not count against a report.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// 64-bit FNV-1a.
pub fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name))
}

/// Samples for field laws on the spot tier.
const FIELD_SAMPLES: usize = 10_000;
/// Sampled chambers for the geometric adjacency check.
const ADJACENCY_SAMPLES: usize = 1000;
const RANDOM_PRODUCTS: usize = 100;

struct Context<'a> {
    c: &'a Construction,
    tier: Tier,
    table: Option<EnumeratedGroup>,
    classes: OnceCell<ClassTable>,
    chambers: OnceCell<std::result::Result<ChamberSystem, String>>,
    geometry: OnceCell<std::result::Result<IncidenceGeometry, String>>,
    oracle: OnceCell<IncidenceOracle>,
    duality: OnceCell<DualitySearch>,
}

type Outcome = (Status, Value);

fn verdict(ok: bool, details: Value) -> Outcome {
    (if ok { Status::Pass } else { Status::Fail }, details)
}

fn skipped(reason: &str) -> Outcome {
    (Status::Skipped, json!({ "reason": reason }))
}

impl<'a> Context<'a> {
    fn full(&self) -> bool {
        self.tier == Tier::Full
    }

    fn table(&self) -> &EnumeratedGroup {
        self.table.as_ref().expect("full tier has a table")
    }

    fn classes(&self) -> &ClassTable {
        self.classes
            .get_or_init(|| ClassTable::build(&self.c.group, self.table()))
    }

    fn chambers(&self) -> std::result::Result<&ChamberSystem, String> {
        self.chambers
            .get_or_init(|| {
                ChamberSystem::build(&self.c.group, self.table(), &self.c.triangle).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn geometry(&self) -> std::result::Result<&IncidenceGeometry, String> {
        self.geometry
            .get_or_init(|| {
                IncidenceGeometry::build(&self.c.group, self.table(), &self.c.triangle).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn oracle(&self) -> &IncidenceOracle {
        self.oracle
            .get_or_init(|| IncidenceOracle::new(&self.c.group, &self.c.triangle))
    }

    fn duality(&self) -> &DualitySearch {
        self.duality
            .get_or_init(|| duality_search(&self.c.group, &self.c.triangle))
    }

    fn run(&self, name: &str, rng: &mut ChaCha8Rng) -> Outcome {
        match name {
            "field" => self.field(rng),
            "group_order" => self.group_order(rng),
            "ovoid" => self.ovoid(rng),
            "triality" => self.triality(rng),
            "census" => self.census(rng),
            "triangle" => self.triangle(),
            "residual_connectedness" => self.residual_connectedness(),
            "ft_products" => self.ft_products(),
            "geometry_chambers" => self.geometry_chambers(),
            "chamber_system" => self.chamber_system(rng),
            "geometry_thin" => self.geometry_thin(rng),
            "diagram" => self.diagram(rng),
            "triality_correlation" => self.triality_correlation(rng),
            "duality_search" => self.duality_table(),
            "correlation_group" => self.correlation_group(),
            "hypermap" => self.hypermap(rng),
            "hypermap_operations" => self.hypermap_operations(),
            "lemma_conjugacy" => self.lemma_conjugacy(rng),
            "lemma_triple_stabilizer" => self.lemma_triple_stabilizer(),
            "lemma_normalizer" => self.lemma_normalizer(),
            other => unreachable!("unknown check {other}"),
        }
    }

    fn field(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let f = self.c.group.field();
        let (q, n) = (f.q(), f.degree());
        let pairs: Vec<(FieldElement, FieldElement)> = if self.full() {
            f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).collect()
        } else {
            (0..FIELD_SAMPLES)
                .map(|_| (f.element(rng.gen_range(0..q)), f.element(rng.gen_range(0..q))))
                .collect()
        };
        let mut violations = 0usize;
        for &(a, b) in &pairs {
            let exponents: Vec<u32> = if self.full() {
                (1..n).collect()
            } else {
                vec![rng.gen_range(1..n)]
            };
            let mut ok = exponents.iter().all(|&s| {
                let sigma = |x| f.automorphism(x, s);
                sigma(f.add(a, b)) == f.add(sigma(a), sigma(b)) && sigma(f.mul(a, b)) == f.mul(sigma(a), sigma(b))
            }) && f.theta(f.theta(a)) == f.frobenius(a)
                && f.automorphism(a, n) == a
                && f.mul(a, f.add(b, FieldElement::ONE)) == f.add(f.mul(a, b), a);
            if !a.is_zero() {
                ok &= f.inv(a).map(|i| f.mul(a, i) == FieldElement::ONE).unwrap_or(false)
                    && f.pow(a, q - 1) == FieldElement::ONE;
            }
            violations += !ok as usize;
        }
        verdict(
            violations == 0,
            json!({ "q": q, "degree": n, "modulus": f.params().modulus, "pairs": pairs.len(), "violations": violations }),
        )
    }

    fn group_order(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let p = g.params();
        let order = p.order as u64;
        let formula = (p.q * p.q + 1) * p.q * p.q * (p.q - 1);
        if self.full() {
            let n = self.table().len() as u64;
            return verdict(
                n == order && order == formula,
                json!({ "enumerated": n, "formula": formula }),
            );
        }
        // element orders of random elements are 1, 2, 4 or odd orders of
        // cyclic subgroups
        let mut bad = 0;
        for _ in 0..RANDOM_PRODUCTS {
            let o = g.element_order(&g.random_element(rng));
            if !(o <= 2 || o == 4 || is_odd_element_order(p, o)) {
                bad += 1;
            }
        }
        verdict(
            order == formula && bad == 0,
            json!({ "formula": formula, "sampled_elements": RANDOM_PRODUCTS, "unexpected_orders": bad }),
        )
    }

    fn ovoid(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let o = g.ovoid();
        let n = o.len();
        let mut elements = g.standard_generators();
        for _ in 0..RANDOM_PRODUCTS {
            elements.push(g.random_element(rng));
        }
        let mut failures = 0;
        for x in &elements {
            let perm = g.materialize(x);
            let mut seen = vec![false; n as usize];
            let mut ok = true;
            for &i in &perm {
                ok &= !std::mem::replace(&mut seen[i as usize], true);
                ok &= o.projective_membership(o.to_projective(o.point(i))).unwrap_or(false);
            }
            failures += !ok as usize;
        }
        verdict(
            failures == 0 && n == g.params().q * g.params().q + 1,
            json!({ "points": n, "elements": elements.len(), "failures": failures }),
        )
    }

    fn triality(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let (g, tau) = (&self.c.group, &self.c.tau);
        let n = g.ovoid().len() as u32;
        let order_three = (0..n).all(|p| {
            let p1 = tau.apply_id(g, p);
            p1 == p || (tau.apply_id(g, tau.apply_id(g, p1)) == p)
        }) && (0..n).any(|p| tau.apply_id(g, p) != p);
        let fixed = tau.fixed_points(g).len() as u64;
        let mut hom_failures = 0;
        for _ in 0..RANDOM_PRODUCTS {
            let (x, y) = (g.random_element(rng), g.random_element(rng));
            let lhs = tau.conjugate(g, &g.mul(&x, &y));
            let rhs = g.mul(&tau.conjugate(g, &x), &tau.conjugate(g, &y));
            let x3 = (0..3).fold(x, |a, _| tau.conjugate(g, &a));
            hom_failures += (lhs != rhs || x3 != x) as usize;
        }
        let mut details = json!({
            "exponent": tau.exponent,
            "order_three_on_points": order_three,
            "fixed_points": fixed,
            "expected_fixed_points": tau.expected_fixed_point_count(),
            "homomorphism_failures": hom_failures,
        });
        let mut ok = order_three && fixed == tau.expected_fixed_point_count() && hom_failures == 0;
        if self.full() {
            let inner = inner_realizations(g, self.table(), tau).len();
            details["inner_realizations"] = json!(inner);
            ok &= inner == 0;
        }
        verdict(ok, details)
    }

    fn census(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let c = self.c;
        let g = &c.group;
        let census = &c.census;
        let orders = census.sorted_orders();
        let expected = expected_odd_order_class_multiset(g.params());
        let mut details = json!({
            "point": census.point,
            "involutions": census.entries.len(),
            "all_odd": census.all_odd(),
            "matches_expected": census.matches_expected(g),
            "candidates": c.candidates.len(),
            "rho0": c.triangle.rho[0].label(),
        });
        if orders.len() <= 32 {
            details["orders"] = json!(orders);
        }
        let mut ok = census.entries.len() as u64 == g.params().q - 1
            && census.all_odd()
            && orders == expected
            && !c.candidates.is_empty();
        if self.full() {
            let distinct = census.pairwise_non_conjugate(g, &c.tau, self.table(), self.classes());
            details["pairwise_non_conjugate"] = json!(distinct);
            ok &= distinct;
        } else {
            // same-order pairs are the only ones that could be conjugate
            let products: Vec<(u64, GroupElement)> = census
                .entries
                .iter()
                .map(|e| {
                    let r = &e.involution;
                    (e.product_order, g.mul(r, &c.tau.conjugate(g, r)))
                })
                .collect();
            let mut pairs = 0;
            let mut conjugate = 0;
            for _ in 0..8 {
                let i = rng.gen_range(0..products.len());
                let same: Vec<usize> = (0..products.len())
                    .filter(|&j| j != i && products[j].0 == products[i].0)
                    .collect();
                if same.is_empty() {
                    continue;
                }
                let j = same[rng.gen_range(0..same.len())];
                pairs += 1;
                conjugate += conjugate_by_sweep(g, &products[i].1, &products[j].1) as usize;
            }
            details["sampled_same_order_pairs"] = json!(pairs);
            details["conjugate_pairs"] = json!(conjugate);
            ok &= conjugate == 0;
        }
        verdict(ok, details)
    }

    fn triangle(&self) -> Outcome {
        let t = &self.c.triangle;
        let m = t.m as usize;
        let h_sizes: Vec<usize> = t.h.iter().map(Vec::len).collect();
        let o_sizes: Vec<usize> = t.sub_ovoids.iter().map(Vec::len).collect();
        let pairs: Vec<usize> = [(0, 1), (1, 2), (2, 0)]
            .iter()
            .map(|&(i, j)| t.pair_intersection(i, j).len())
            .collect();
        let triple = t.triple_intersection().len();
        let ok = h_sizes.iter().all(|&s| s == 2 * m)
            && o_sizes.iter().all(|&s| s == m)
            && (t.m != 5 || pairs.iter().all(|&s| s == 1))
            && t.is_proper()
            && !t.is_degenerate();
        verdict(
            ok,
            json!({
                "m": t.m,
                "vertices": t.vertices,
                "subgroup_orders": h_sizes,
                "sub_ovoid_sizes": o_sizes,
                "pair_intersections": pairs,
                "triple_intersection": triple,
                "proper": t.is_proper(),
                "degenerate": t.is_degenerate(),
                "subgroup_coincidences": t.subgroup_coincidences(),
                "m_mod_3": t.m % 3,
            }),
        )
    }

    fn residual_connectedness(&self) -> Outcome {
        let rc = check_residual_connectedness(&self.c.group, &self.c.triangle);
        verdict(
            rc.failures.is_empty() && rc.triples == 512,
            json!({ "triples": rc.triples, "failures": rc.failures, "claim": rc.claim }),
        )
    }

    fn ft_products(&self) -> Outcome {
        let ft = flag_transitivity_products(&self.c.group, &self.c.triangle);
        verdict(ft.iter().all(|r| r.holds), json!({ "rotations": ft }))
    }

    fn geometry_chambers(&self) -> Outcome {
        if !self.full() {
            return skipped("chamber count needs the materialized geometry");
        }
        match self.geometry() {
            Ok(geo) => {
                let ft = geo.flag_transitivity_check(self.table());
                let order = self.table().len();
                verdict(ft.chambers == order && ft.regular, json!(ft))
            }
            Err(e) => verdict(false, json!({ "error": e })),
        }
    }

    fn chamber_system(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let t = &self.c.triangle;
        let samples: Vec<GroupElement> = (0..ADJACENCY_SAMPLES).map(|_| g.random_element(rng)).collect();
        let adj = geometric_adjacency_check(g, t, &samples);
        let mut details = json!({ "adjacency": adj });
        let mut ok = adj.failures == 0 && adj.chambers >= ADJACENCY_SAMPLES;
        if self.full() {
            let cs = match self.chambers() {
                Ok(cs) => cs,
                Err(e) => return verdict(false, json!({ "error": e })),
            };
            let xs: Vec<GroupElement> = (0..3).map(|_| g.random_element(rng)).collect();
            let commute = cs.left_translations_commute(g, self.table(), &xs);
            let panels = [0, 1, 2].map(|i| {
                let s = cs.cells(&[i]).sizes;
                s.iter().all(|&x| x == 2)
            });
            details["chambers"] = json!(cs.len());
            details["thin"] = json!(cs.is_thin());
            details["panels_of_size_two"] = json!(panels);
            details["connected"] = json!(cs.is_connected());
            details["left_action_commutes"] = json!(commute);
            ok &= cs.len() == self.table().len()
                && cs.is_thin()
                && panels.iter().all(|&b| b)
                && cs.is_connected()
                && commute;
        } else {
            // panels {γ, γρ_i} have size two and the three neighbours differ
            let rho = &t.rho;
            let local = samples.iter().all(|x| {
                let n = rho.map(|r| g.mul(x, &r));
                n.iter().zip(rho).all(|(y, r)| y != x && g.mul(y, r) == *x)
                    && n[0] != n[1]
                    && n[1] != n[2]
                    && n[0] != n[2]
            });
            details["local_thinness"] = json!(local);
            ok &= local;
        }
        verdict(ok, details)
    }

    fn geometry_thin(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let t = &self.c.triangle;
        if self.full() {
            let geo = match self.geometry() {
                Ok(geo) => geo,
                Err(e) => return verdict(false, json!({ "error": e })),
            };
            let cs = match self.chambers() {
                Ok(cs) => cs,
                Err(e) => return verdict(false, json!({ "error": e })),
            };
            let ft = geo.flag_transitivity_check(self.table());
            let corr = geometry_from_chamber_system(g, self.table(), cs, geo);
            let agree = geo.oracle_agreement(g, self.table(), self.oracle(), rng, 1000);
            let ok = ft.thin
                && ft.extension_counts == [2]
                && corr.bijective
                && corr.incidence_matches
                && corr.cell_sizes_ok
                && agree.disagreements == 0;
            return verdict(
                ok,
                json!({
                    "elements": geo.len(),
                    "thin": ft.thin,
                    "extension_counts": ft.extension_counts,
                    "correspondence": corr,
                    "oracle_agreement": agree,
                }),
            );
        }
        let oracle = self.oracle();
        let mut counts = std::collections::BTreeSet::new();
        let pairs = 100;
        for _ in 0..pairs {
            let ty = rng.gen_range(0..3usize);
            let a = canonical_coset(g, t, ty, &g.random_element(rng));
            let other = (ty + 1 + rng.gen_range(0..2)) % 3;
            let nb = oracle.neighbors(g, t, &a, other);
            let b = nb[rng.gen_range(0..nb.len())];
            counts.insert(local_flag_extensions(g, t, oracle, &a, &b));
        }
        let counts: Vec<usize> = counts.into_iter().collect();
        verdict(
            counts == [2],
            json!({ "sampled_pairs": pairs, "extension_counts": counts }),
        )
    }

    fn diagram(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let m = self.c.triangle.m as usize;
        if self.full() {
            return match self.geometry() {
                Ok(geo) => {
                    let d = geo.diagram();
                    let ok = d.residues_connected && d.labels.iter().all(|l| *l == [m]);
                    verdict(
                        ok,
                        json!({ "residues": geo.len(), "labels": d.labels, "connected": d.residues_connected }),
                    )
                }
                Err(e) => verdict(false, json!({ "error": e })),
            };
        }
        let g = &self.c.group;
        let t = &self.c.triangle;
        let mut cosets: Vec<Coset> = (0..3).map(|ty| canonical_coset(g, t, ty, &g.identity())).collect();
        for _ in 0..30 {
            let ty = rng.gen_range(0..3usize);
            cosets.push(canonical_coset(g, t, ty, &g.random_element(rng)));
        }
        let mut labels: [Vec<usize>; 3] = Default::default();
        let mut connected = true;
        for c in &cosets {
            let r = local_residue(g, t, self.oracle(), c);
            connected &= r.connected;
            let l = &mut labels[c.ty as usize];
            let gon = r.gonality.unwrap_or(0);
            if !l.contains(&gon) {
                l.push(gon);
                l.sort_unstable();
            }
        }
        let ok = connected && labels.iter().all(|l| *l == [m]);
        verdict(
            ok,
            json!({ "residues": cosets.len(), "labels": labels, "connected": connected }),
        )
    }

    fn triality_correlation(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let c = self.c;
        let check = if self.full() {
            match self.geometry() {
                Ok(geo) => triality_correlation(&c.group, self.table(), &c.triangle, &c.tau, geo),
                Err(e) => return verdict(false, json!({ "error": e })),
            }
        } else {
            triality_correlation_sampled(&c.group, &c.triangle, &c.tau, self.oracle(), rng, 200)
        };
        let ok = check.well_defined && check.preserves_incidence && check.permutes_subgroups && check.order == 3;
        verdict(ok, json!(check))
    }

    fn duality_table(&self) -> Outcome {
        let s = self.duality();
        let rows: Vec<Value> = s
            .rows
            .iter()
            .map(|r| json!({ "t": r.t, "perm": r.perm, "searched": r.searched, "solutions": r.solutions.len() }))
            .collect();
        verdict(
            s.dualities() == 0,
            json!({
                "rows": rows,
                "dualities": s.dualities(),
                "type_preserving": s.type_preserving(),
                "total_solutions": s.total_solutions(),
                "solvable_cells": s.solvable_cells(),
            }),
        )
    }

    fn correlation_group(&self) -> Outcome {
        let s = self.duality();
        let order = self.c.group.order();
        let (aut, cor) = s.correlation_orders(order);
        let ok = s.type_preserving() == 1 && cor == 3 * order && s.dualities() == 0;
        verdict(
            ok,
            json!({
                "group_order": order as u64,
                "type_preserving_automorphisms": aut as u64,
                "correlations": cor as u64,
                "index": (cor / aut.max(1)) as u64,
            }),
        )
    }

    fn hypermap(&self, _rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let t = &self.c.triangle;
        let m = t.m;
        let order = g.order() as u64;
        if self.full() {
            let h = match Hypermap::build(g, self.table(), t) {
                Ok(h) => h,
                Err(e) => return verdict(false, json!({ "error": e.to_string() })),
            };
            let ty = h.type_triple();
            let counts = h.counts();
            let expected = (order / (2 * m)) as usize;
            let ok = ty == [m; 3]
                && counts == [expected; 3]
                && h.flag_count() as u64 == order
                && h.is_involutory()
                && h.is_connected();
            return verdict(
                ok,
                json!({
                    "flags": h.flag_count(),
                    "geometry_chambers": order,
                    "type": ty,
                    "counts": counts,
                    "involutory": h.is_involutory(),
                    "connected": h.is_connected(),
                }),
            );
        }
        // the orbits of <r_a, r_b> are left cosets of a dihedral group of
        // order 2|ρ_a ρ_b|, on which the right action is regular
        let ty = crate::hypermap::ORBIT_COLORS.map(|[a, b]| g.element_order(&g.mul(&t.rho[a], &t.rho[b])));
        let counts = ty.map(|k| order / (2 * k));
        let dihedral = t.h.iter().all(|h| h.len() as u64 == 2 * m);
        verdict(
            ty == [m; 3] && dihedral,
            json!({ "flags": order, "geometry_chambers": order, "type": ty, "counts": counts }),
        )
    }

    fn hypermap_operations(&self) -> Outcome {
        let c = self.c;
        let g = &c.group;
        let s = self.duality();
        if self.full() {
            let h = match Hypermap::build(g, self.table(), &c.triangle) {
                Ok(h) => h,
                Err(e) => return verdict(false, json!({ "error": e.to_string() })),
            };
            let ops = hypermap_operation_search(g, self.table(), &c.tau, &h, s);
            return verdict(
                ops.cyclic_operation && ops.cube_identity && ops.dualities == 0,
                json!(ops),
            );
        }
        let cyclic = (0..3).all(|i| c.tau.conjugate(g, &c.triangle.rho[i]) == c.triangle.rho[(i + 1) % 3]);
        verdict(
            cyclic && s.dualities() == 0,
            json!({ "cyclic_operation": cyclic, "dualities": s.dualities() }),
        )
    }

    fn lemma_conjugacy(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let g = &self.c.group;
        let o = g.ovoid();
        let count = if self.full() {
            let v = self.c.triangle.vertices;
            lemma_conjugacy_full(g, self.table(), self.classes(), o.point(v[0]), o.point(v[1]))
        } else {
            lemma_conjugacy_sampled(g, rng, 4)
        };
        verdict(count.violations == 0 && count.checked > 0, json!(count))
    }

    fn lemma_triple_stabilizer(&self) -> Outcome {
        let g = &self.c.group;
        let o = g.ovoid();
        let pts = self.c.triangle.vertices.map(|v| o.point(v));
        let stab = triple_set_stabilizer(g, pts);
        let set: HashSet<GroupElement> = stab.iter().copied().collect();
        let closed = stab.iter().all(|x| stab.iter().all(|y| set.contains(&g.mul(x, y))));
        let preserves = stab.iter().all(|x| pts.iter().all(|p| pts.contains(&g.apply(x, *p))));
        let mut details = json!({ "order": stab.len(), "closed": closed, "preserves": preserves });
        let mut ok = closed && preserves && 6 % stab.len() == 0;
        if self.full() {
            let sweep = triple_set_stabilizer_sweep(g, self.table(), pts);
            let mut sweep_sorted = sweep.clone();
            sweep_sorted.sort();
            details["sweep_agrees"] = json!(sweep_sorted == stab);
            ok &= sweep_sorted == stab;
        }
        verdict(ok, details)
    }

    fn lemma_normalizer(&self) -> Outcome {
        if !self.full() {
            return skipped("normalizer sweep needs the element table");
        }
        let n = normalizer_lemma(&self.c.group, self.table(), &self.c.triangle);
        verdict(n.violations == 0 && n.containing_subgroup_normalizes, json!(n))
    }
}

/// Whether a structural check is backed by a theorem for this `m`. Flag
/// transitivity is only proved for m = 5; the other structural results need
/// `m` prime.
fn claim_for(name: &str, m: u64) -> Option<Claim> {
    let proved = match name {
        "ft_products" | "geometry_chambers" => m == 5,
        "residual_connectedness"
        | "chamber_system"
        | "geometry_thin"
        | "diagram"
        | "triality_correlation"
        | "duality_search"
        | "correlation_group"
        | "hypermap"
        | "hypermap_operations" => is_prime(m),
        _ => return None,
    };
    Some(if proved { Claim::Theorem } else { Claim::EmpiricalOnly })
}

/// Run `suite` on `construction`. The full tier enumerates the group and
/// fails with `TierExceeded` when that is not allowed.
pub fn verify(construction: &Construction, suite: Suite, tier: Tier, seed: u64) -> Result<VerificationReport> {
    let g = &construction.group;
    let table = match tier {
        Tier::Full => Some(g.enumerate()?),
        Tier::Spot => None,
    };
    let ctx = Context {
        c: construction,
        tier,
        table,
        classes: OnceCell::new(),
        chambers: OnceCell::new(),
        geometry: OnceCell::new(),
        oracle: OnceCell::new(),
        duality: OnceCell::new(),
    };
    let checks = suite
        .check_names()
        .iter()
        .map(|&name| {
            let start = Instant::now();
            let mut rng = check_rng(seed, name);
            let (status, mut details) = ctx.run(name, &mut rng);
            if let (Some(claim), Some(obj)) = (claim_for(name, construction.m()), details.as_object_mut()) {
                if status != Status::Skipped {
                    obj.entry("claim").or_insert(json!(claim));
                }
            }
            Check {
                name: name.to_string(),
                status,
                details,
                wall_time: start.elapsed(),
            }
        })
        .collect();
    Ok(VerificationReport {
        schema: SCHEMA.to_string(),
        e: g.field().params().e,
        q: g.params().q,
        m: construction.m(),
        point: construction.point,
        tier,
        suite,
        seed,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn full_report_sz8() {
        let c = Construction::new(1, 5, None).unwrap();
        let r = verify(&c, Suite::All, Tier::Full, 0).unwrap();
        for check in &r.checks {
            assert_eq!(check.status, Status::Pass, "{} {}", check.name, check.details);
        }
        assert_eq!(r.checks.len(), Suite::All.check_names().len());
        let json = r.to_json().unwrap();
        assert_eq!(VerificationReport::from_json(&json).unwrap().to_json().unwrap(), json);
        assert!(!json.contains("wall"));
    }

    #[test]
    fn claims_follow_m() {
        let claim = |r: &VerificationReport, name: &str| r.check(name).unwrap().details["claim"].clone();
        let c5 = Construction::new(1, 5, None).unwrap();
        let r5 = verify(&c5, Suite::Ft, Tier::Full, 0).unwrap();
        assert_eq!(claim(&r5, "ft_products"), "theorem");
        assert_eq!(claim(&r5, "geometry_chambers"), "theorem");
        let c13 = Construction::new(1, 13, None).unwrap();
        let r13 = verify(&c13, Suite::All, Tier::Full, 0).unwrap();
        assert_eq!(claim(&r13, "ft_products"), "empirical_only");
        assert_eq!(claim(&r13, "diagram"), "theorem");
        assert_eq!(claim(&r13, "residual_connectedness"), "theorem");
        assert!(r13.check("field").unwrap().details.get("claim").is_none());
        assert_eq!(claim_for("hypermap", 9), Some(Claim::EmpiricalOnly));
    }

    #[test]
    fn suites_list_each_check_once() {
        let all: HashSet<&str> = Suite::All.check_names().iter().copied().collect();
        assert_eq!(all.len(), Suite::All.check_names().len());
        let mut union = HashSet::new();
        for s in [
            Suite::Census,
            Suite::Triangle,
            Suite::Rc,
            Suite::Ft,
            Suite::Thin,
            Suite::Diagram,
            Suite::Correlations,
            Suite::Hypermap,
            Suite::Lemmas,
        ] {
            for n in s.check_names() {
                assert!(union.insert(*n));
            }
        }
        assert!(union.is_subset(&all));
    }

    #[test]
    fn spot_report_sz8_agrees() {
        let c = Construction::new(1, 5, None).unwrap();
        let r = verify(&c, Suite::All, Tier::Spot, 7).unwrap();
        for check in &r.checks {
            assert_ne!(check.status, Status::Fail, "{} {}", check.name, check.details);
        }
        assert_eq!(r.check("lemma_normalizer").unwrap().status, Status::Skipped);
    }
}
