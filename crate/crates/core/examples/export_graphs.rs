//! Write the incidence graph, chamber graph and flag graph of the q = 8
//! construction to a directory (default: the system temp dir).
use std::path::PathBuf;

use ovgeo::chamber::Construction;
use ovgeo::export::{export_graph, write_atomic, Format, GraphKind};

fn main() -> ovgeo::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let c = Construction::new(1, 5, None)?;
    for (what, name) in [
        (GraphKind::Incidence, "incidence"),
        (GraphKind::ChamberGraph, "chambers"),
        (GraphKind::Hypermap, "flags"),
    ] {
        let g = export_graph(&c, what)?;
        for (format, ext) in [(Format::Dot, "dot"), (Format::Json, "json")] {
            let path = dir.join(format!("sz8_{name}.{ext}"));
            write_atomic(&path, &g.render(format)?)?;
            println!("{} ({} nodes, {} edges)", path.display(), g.nodes.len(), g.edges.len());
        }
    }
    Ok(())
}
