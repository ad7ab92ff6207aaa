//! The Suzuki-Tits ovoid for q = 8 and the generators of Sz(8) acting on it.
use ovgeo::group::Generator;
use ovgeo::{FieldElement, OvoidPoint, Suzuki};

fn main() -> ovgeo::Result<()> {
    let g = Suzuki::with_e(1)?;
    let o = g.ovoid();
    println!("|O| = {}, |Sz(8)| = {}", o.len(), g.order());
    let p = OvoidPoint::Affine(FieldElement::new(3), FieldElement::new(5));
    println!("{p:?} -> projective {:?}", o.to_projective(p));

    let t = g.make_generator(Generator::Translation(FieldElement::ONE, FieldElement::ZERO))?;
    let w = g.w();
    for (name, x) in [("T(1,0)", t), ("W", w)] {
        println!("{name}: order {}, fixes {:?}", g.element_order(&x), g.fixed_points(&x));
    }
    let tw = g.mul(&t, &w);
    println!(
        "T(1,0) W has order {} and fingerprint {}",
        g.element_order(&tw),
        tw.label()
    );

    let table = g.enumerate()?;
    println!("enumerated {} elements", table.len());
    Ok(())
}
