//! Graph exports: the incidence graph of the coset geometry, the coloured
//! chamber graph and the flag graph of the hypermap, as DOT or JSON.
//!
//! Node ids are canonical labels built from fingerprints, and nodes and
//! edges are listed in a canonical order, so an export is reproducible and
//! survives a JSON round trip unchanged.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chamber::{ChamberSystem, Construction};
use crate::error::Result;
use crate::geometry::IncidenceGeometry;
use crate::group::EnumeratedGroup;
use crate::hypermap::Hypermap;
use crate::report::SCHEMA;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Incidence,
    ChamberGraph,
    Hypermap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub ty: Option<u8>,
    /// Hypervertex, hyperedge and hyperface containing a flag.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbits: Option<[u32; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub schema: String,
    pub q: u64,
    pub m: u64,
    pub what: GraphKind,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

impl GraphExport {
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_dot(&self) -> String {
        let name = match self.what {
            GraphKind::Incidence => "incidence",
            GraphKind::ChamberGraph => "chambers",
            GraphKind::Hypermap => "flags",
        };
        let mut out = format!("graph {name}_q{}_m{} {{\n", self.q, self.m);
        for n in &self.nodes {
            out.push_str("  ");
            out.push_str(&n.id);
            let mut attrs = Vec::new();
            if let Some(t) = n.ty {
                attrs.push(format!("type={t}"));
            }
            if let Some([v, e, f]) = n.orbits {
                attrs.push(format!("vertex={v}, edge={e}, face={f}"));
            }
            if !attrs.is_empty() {
                out.push_str(&format!(" [{}]", attrs.join(", ")));
            }
            out.push_str(";\n");
        }
        for e in &self.edges {
            out.push_str(&format!("  {} -- {}", e.source, e.target));
            if let Some(c) = e.color {
                out.push_str(&format!(" [color={c}]"));
            }
            out.push_str(";\n");
        }
        out.push_str("}\n");
        out
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Dot => Ok(self.to_dot()),
            Format::Json => self.to_json(),
        }
    }

    /// Degree of every node, in node order.
    pub fn degrees(&self) -> Vec<usize> {
        let index: std::collections::HashMap<&str, usize> =
            self.nodes.iter().enumerate().map(|(i, n)| (n.id.as_str(), i)).collect();
        let mut deg = vec![0; self.nodes.len()];
        for e in &self.edges {
            deg[index[e.source.as_str()]] += 1;
            deg[index[e.target.as_str()]] += 1;
        }
        deg
    }
}

/// Table indices sorted by fingerprint.
fn canonical_order(table: &EnumeratedGroup) -> (Vec<u32>, Vec<u32>) {
    let mut order: Vec<u32> = (0..table.len() as u32).collect();
    order.sort_by_key(|&i| table.element(i).fingerprint());
    let mut rank = vec![0u32; order.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i as usize] = r as u32;
    }
    (order, rank)
}

fn header(c: &Construction, what: GraphKind, nodes: Vec<Node>, edges: Vec<Edge>) -> GraphExport {
    GraphExport {
        schema: SCHEMA.to_string(),
        q: c.group.params().q,
        m: c.m(),
        what,
        nodes,
        edges,
    }
}

/// Nodes `t<type>_<fingerprint>` for every coset, one edge per incident pair.
pub fn incidence_graph(c: &Construction, table: &EnumeratedGroup, geo: &IncidenceGeometry) -> GraphExport {
    let mut ids: Vec<(u8, _, u32)> = (0..geo.len() as u32)
        .map(|x| {
            let coset = geo.coset(table, x);
            (coset.ty, coset.rep.fingerprint(), x)
        })
        .collect();
    ids.sort();
    let mut rank = vec![0u32; geo.len()];
    let mut labels = vec![String::new(); geo.len()];
    let nodes = ids
        .iter()
        .enumerate()
        .map(|(r, &(ty, _, x))| {
            rank[x as usize] = r as u32;
            labels[x as usize] = geo.coset(table, x).label();
            Node {
                id: labels[x as usize].clone(),
                ty: Some(ty),
                orbits: None,
            }
        })
        .collect();
    let mut pairs: Vec<(u32, u32)> = geo
        .incident_pairs()
        .into_iter()
        .map(|(x, y)| {
            let (a, b) = (rank[x as usize], rank[y as usize]);
            if a < b {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    pairs.sort_by_key(|&(x, y)| (rank[x as usize], rank[y as usize]));
    let edges = pairs
        .into_iter()
        .map(|(x, y)| Edge {
            source: labels[x as usize].clone(),
            target: labels[y as usize].clone(),
            color: None,
        })
        .collect();
    header(c, GraphKind::Incidence, nodes, edges)
}

fn coloured_graph(
    table: &EnumeratedGroup,
    edges: Vec<(u32, u32, u8)>,
    prefix: &str,
    orbits: Option<[&[u32]; 3]>,
) -> (Vec<Node>, Vec<Edge>) {
    let (order, rank) = canonical_order(table);
    let label = |i: u32| format!("{prefix}_{}", table.element(i).label());
    let nodes = order
        .iter()
        .map(|&i| Node {
            id: label(i),
            ty: None,
            orbits: orbits.map(|o| o.map(|cells| cells[i as usize])),
        })
        .collect();
    let mut edges: Vec<(u32, u32, u8)> = edges
        .into_iter()
        .map(|(a, b, c)| {
            if rank[a as usize] < rank[b as usize] {
                (a, b, c)
            } else {
                (b, a, c)
            }
        })
        .collect();
    edges.sort_by_key(|&(a, b, c)| (rank[a as usize], rank[b as usize], c));
    let edges = edges
        .into_iter()
        .map(|(a, b, c)| Edge {
            source: label(a),
            target: label(b),
            color: Some(c),
        })
        .collect();
    (nodes, edges)
}

/// Nodes `c_<fingerprint>`, edges coloured by adjacency type.
pub fn chamber_graph(c: &Construction, table: &EnumeratedGroup, cs: &ChamberSystem) -> GraphExport {
    let (nodes, edges) = coloured_graph(table, cs.edges(), "c", None);
    header(c, GraphKind::ChamberGraph, nodes, edges)
}

/// Flag graph: nodes `f_<fingerprint>` annotated with their hypervertex,
/// hyperedge and hyperface, edges coloured by `r_i`.
pub fn hypermap_graph(c: &Construction, table: &EnumeratedGroup, map: &Hypermap) -> GraphExport {
    let orbits = [0, 1, 2].map(|k| map.orbits(k).cell_of);
    let (nodes, edges) = coloured_graph(
        table,
        map.edges(),
        "f",
        Some([&orbits[0][..], &orbits[1][..], &orbits[2][..]]),
    );
    header(c, GraphKind::Hypermap, nodes, edges)
}

/// Build the requested graph. Needs the full tier.
pub fn export_graph(c: &Construction, what: GraphKind) -> Result<GraphExport> {
    let table = c.group.enumerate()?;
    Ok(match what {
        GraphKind::Incidence => {
            let geo = IncidenceGeometry::build(&c.group, &table, &c.triangle)?;
            incidence_graph(c, &table, &geo)
        }
        GraphKind::ChamberGraph => {
            let cs = ChamberSystem::build(&c.group, &table, &c.triangle)?;
            chamber_graph(c, &table, &cs)
        }
        GraphKind::Hypermap => {
            let map = Hypermap::build(&c.group, &table, &c.triangle)?;
            hypermap_graph(c, &table, &map)
        }
    })
}

/// Write through a temporary file in the same directory and rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(contents.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}
