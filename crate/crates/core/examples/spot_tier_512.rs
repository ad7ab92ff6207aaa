//! Table-free checks on Sz(512), whose order is about 3.5·10^13.
use ovgeo::chamber::Construction;
use ovgeo::report::{verify, Suite, Tier};

fn main() -> ovgeo::Result<()> {
    let c = Construction::new(4, 5, None)?;
    println!("|Sz(512)| = {}", c.group.order());
    println!(
        "census at point {}: {} involutions, {} with m = 5",
        c.point,
        c.census.entries.len(),
        c.candidates.len()
    );
    let report = verify(&c, Suite::All, Tier::Spot, 0)?;
    for check in &report.checks {
        println!("{:?}  {}", check.status, check.name);
    }
    Ok(())
}
