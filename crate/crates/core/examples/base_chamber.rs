//! The product-order census at the base point and the triangle it yields.
use ovgeo::chamber::Construction;

fn main() -> ovgeo::Result<()> {
    let m: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let c = Construction::new(1, m, None)?;
    println!("base point {}", c.point);
    for entry in &c.census.entries {
        println!(
            "  ρ = {:<10} |ρ τ(ρ)| = {}",
            entry.involution.label(),
            entry.product_order
        );
    }
    let t = &c.triangle;
    println!("m = {m}: vertices {:?}", t.vertices);
    for i in 0..3 {
        println!("  O_{i} = {:?}", t.sub_ovoids[i]);
    }
    println!("proper: {}, degenerate: {}", t.is_proper(), t.is_degenerate());
    Ok(())
}
