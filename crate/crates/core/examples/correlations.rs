//! The triality correlation and the search for dualities.
use ovgeo::chamber::Construction;
use ovgeo::geometry::{duality_search, triality_correlation, IncidenceGeometry};

fn main() -> ovgeo::Result<()> {
    let c = Construction::new(1, 5, None)?;
    let table = c.group.enumerate()?;
    let geo = IncidenceGeometry::build(&c.group, &table, &c.triangle)?;
    let corr = triality_correlation(&c.group, &table, &c.triangle, &c.tau, &geo);
    println!(
        "triality: order {}, preserves incidence: {}",
        corr.order, corr.preserves_incidence
    );

    let search = duality_search(&c.group, &c.triangle);
    for row in search.rows.iter().filter(|r| !r.solutions.is_empty()) {
        println!(
            "  Φ^{} with type map {:?}: {} solution(s)",
            row.t,
            row.perm,
            row.solutions.len()
        );
    }
    let (aut, cor) = search.correlation_orders(c.group.order());
    println!("dualities: {}, |Aut| = {aut}, |Cor| = {cor}", search.dualities());
    Ok(())
}
