//! The thin chamber system on Sz(8), its residual connectedness and the
//! flag-transitivity products.
use ovgeo::chamber::{check_residual_connectedness, flag_transitivity_products, ChamberSystem, Construction};

fn main() -> ovgeo::Result<()> {
    let c = Construction::new(1, 5, None)?;
    let table = c.group.enumerate()?;
    let cs = ChamberSystem::build(&c.group, &table, &c.triangle)?;
    println!(
        "{} chambers, thin: {}, connected: {}",
        cs.len(),
        cs.is_thin(),
        cs.is_connected()
    );
    for colors in [[1, 2], [2, 0], [0, 1]] {
        let cells = cs.cells(&colors);
        println!("  {colors:?}-cells: {} of size {}", cells.sizes.len(), cells.sizes[0]);
    }
    let rc = check_residual_connectedness(&c.group, &c.triangle);
    println!(
        "residual connectedness: {} triples, {} failures ({:?})",
        rc.triples,
        rc.failures.len(),
        rc.claim
    );
    for r in flag_transitivity_products(&c.group, &c.triangle) {
        println!(
            "  rotation {}: |H H| = {}, intersection {}",
            r.rotation, r.product_size, r.intersection_size
        );
    }
    Ok(())
}
