//! Arithmetic in GF(8) and GF(512), including the Suzuki twist θ.
use ovgeo::{Field, FieldElement};

fn main() -> ovgeo::Result<()> {
    for e in [1, 4] {
        let f = Field::with_e(e)?;
        let p = f.params();
        println!("GF({}): modulus {:#b}, θ = x^{}", p.q, p.modulus, p.r);
        let a = f.primitive_element().expect("nonzero field");
        let b = f.add(a, FieldElement::ONE);
        println!(
            "  a = {a}, b = a + 1 = {b}, ab = {}, a/b = {}",
            f.mul(a, b),
            f.div(a, b)?
        );
        println!(
            "  θ(a) = {}, θ(θ(a)) = {} = a^2 = {}",
            f.theta(a),
            f.theta(f.theta(a)),
            f.square(a)
        );
        println!("  order of a: {}", f.multiplicative_order(a)?);
    }
    Ok(())
}
