//! The triality x -> x^(2^k) of Sz(q) for q = 8 and q = 512.
use ovgeo::triality::{inner_realizations, TrialityMap};
use ovgeo::Suzuki;

fn main() -> ovgeo::Result<()> {
    for e in [1, 4] {
        let g = Suzuki::with_e(e)?;
        let tau = TrialityMap::new(g.field().params())?;
        println!(
            "q = {}: exponent {}, {} fixed ovoid points, default base point {}",
            g.params().q,
            tau.exponent,
            tau.fixed_points(&g).len(),
            tau.default_base_point(&g)
        );
    }
    let g = Suzuki::with_e(1)?;
    let tau = TrialityMap::new(g.field().params())?;
    let table = g.enumerate()?;
    println!(
        "inner elements realizing τ on Sz(8): {}",
        inner_realizations(&g, &table, &tau).len()
    );
    match Suzuki::with_e(2).and_then(|g| TrialityMap::new(g.field().params())) {
        Err(err) => println!("q = 32: {err}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
