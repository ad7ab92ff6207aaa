//! The rank-three coset geometry of Sz(8): sizes, residues and diagram.
use ovgeo::chamber::Construction;
use ovgeo::geometry::IncidenceGeometry;

fn main() -> ovgeo::Result<()> {
    let c = Construction::new(1, 5, None)?;
    let table = c.group.enumerate()?;
    let geo = IncidenceGeometry::build(&c.group, &table, &c.triangle)?;
    println!(
        "{} elements, {} per type, {} incident pairs",
        geo.len(),
        geo.per_type(),
        geo.incident_pairs().len()
    );
    let r = geo.rank2_residue(0)?;
    println!(
        "residue of element 0: sizes {:?}, {} edges, gonality {:?}",
        r.sizes, r.edges, r.gonality
    );
    let d = geo.diagram();
    println!(
        "diagram labels {:?}, residues connected: {}",
        d.labels, d.residues_connected
    );
    let ft = geo.flag_transitivity_check(&table);
    println!("{} chambers, regular: {}, thin: {}", ft.chambers, ft.regular, ft.thin);
    Ok(())
}
