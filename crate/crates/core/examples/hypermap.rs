//! The regular hypermap of type (5,5,5) on Sz(8) and its operations.
use ovgeo::chamber::Construction;
use ovgeo::geometry::duality_search;
use ovgeo::hypermap::{alpha_beta, hypermap_operation_search, Hypermap};

fn main() -> ovgeo::Result<()> {
    let c = Construction::new(1, 5, None)?;
    let table = c.group.enumerate()?;
    let map = Hypermap::build(&c.group, &table, &c.triangle)?;
    let [v, e, f] = map.counts();
    println!(
        "{} flags, type {:?}, V = {v}, E = {e}, F = {f}",
        map.flag_count(),
        map.type_triple()
    );
    let ops = hypermap_operation_search(&c.group, &table, &c.tau, &map, &duality_search(&c.group, &c.triangle));
    println!("{ops:?}");
    for e in 1..=5 {
        let p = ovgeo::FieldParams::for_e(e)?;
        let ab = alpha_beta(&p);
        println!(
            "q = {}: α = {}, β = {}, the one ≡ 2 mod 3 is {}",
            p.q, ab.alpha, ab.beta, ab.selected
        );
    }
    Ok(())
}
