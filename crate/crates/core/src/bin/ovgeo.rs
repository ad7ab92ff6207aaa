use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use ovgeo::chamber::Construction;
use ovgeo::export::{export_graph, write_atomic, Format, GraphKind};
use ovgeo::report::{verify, Status, Suite, Tier};
use ovgeo::{Error, Field, PointId, Suzuki};

#[derive(Parser)]
#[command(
    name = "ovgeo",
    version,
    about = "Suzuki groups, their trialities and the geometries they act on"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy)]
enum PointArg {
    Auto,
    Index(PointId),
}

fn parse_point(s: &str) -> Result<PointArg, String> {
    if s == "auto" {
        return Ok(PointArg::Auto);
    }
    s.parse()
        .map(PointArg::Index)
        .map_err(|_| format!("expected a point index or `auto`, got `{s}`"))
}

impl PointArg {
    fn get(self) -> Option<PointId> {
        match self {
            PointArg::Auto => None,
            PointArg::Index(i) => Some(i),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parameters of GF(2^(2e+1)).
    Field {
        #[arg(long)]
        e: u32,
    },
    /// Order and arithmetic of Sz(q); optionally enumerate it.
    Group {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        enumerate: bool,
    },
    /// Census at the base point and the resulting triangle.
    Chamber {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        m: u64,
        #[arg(long, value_parser = parse_point, default_value = "auto")]
        point: PointArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "full")]
        tier: Tier,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_parser = parse_point, default_value = "auto")]
        point: PointArg,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Export a materialized graph.
    Export {
        #[arg(long, value_enum)]
        what: GraphKind,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value_t = 5)]
        m: u64,
        #[arg(long, value_parser = parse_point, default_value = "auto")]
        point: PointArg,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::TierExceeded { .. } => 3,
        Error::Io(_) | Error::Json(_) | Error::DegenerateTriangle => 1,
        _ => 2,
    }
}

fn print(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn run(cli: Cli) -> ovgeo::Result<bool> {
    match cli.command {
        Command::Field { e } => {
            let f = Field::with_e(e)?;
            print(json!({
                "params": f.params(),
                "primitive_element": f.primitive_element(),
            }));
        }
        Command::Group { e, enumerate } => {
            let g = Suzuki::with_e(e)?;
            let mut out = json!({ "params": g.params(), "ovoid_points": g.ovoid().len() });
            if enumerate {
                let table = g.enumerate()?;
                out["enumerated"] = json!(table.len());
                if table.len() as u128 != g.order() {
                    print(out);
                    return Ok(false);
                }
            }
            print(out);
        }
        Command::Chamber { e, m, point } => {
            let c = Construction::new(e, m, point.get())?;
            let t = &c.triangle;
            let orders = c.census.sorted_orders();
            print(json!({
                "q": c.group.params().q,
                "point": c.point,
                "involutions": c.census.entries.len(),
                "product_orders": orders,
                "candidates": c.candidates.iter().map(|g| g.label()).collect::<Vec<_>>(),
                "rho": t.rho.iter().map(|g| g.label()).collect::<Vec<_>>(),
                "vertices": t.vertices,
                "sub_ovoids": t.sub_ovoids,
                "proper": t.is_proper(),
                "degenerate": t.is_degenerate(),
            }));
        }
        Command::Verify {
            e,
            m,
            suite,
            tier,
            seed,
            point,
            json,
        } => {
            let c = Construction::new(e, m, point.get())?;
            let report = verify(&c, suite, tier, seed)?;
            for check in &report.checks {
                let status = match check.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Skipped => "skip",
                };
                println!("{status:4}  {}", check.name);
                eprintln!("{:>10.3}s  {}", check.wall_time.as_secs_f64(), check.name);
            }
            if let Some(path) = json {
                write_atomic(&path, &report.to_json()?)?;
            }
            return Ok(report.passed());
        }
        Command::Export {
            what,
            format,
            out,
            e,
            m,
            point,
        } => {
            let c = Construction::new(e, m, point.get())?;
            let graph = export_graph(&c, what)?;
            write_atomic(&out, &graph.render(format)?)?;
            eprintln!(
                "{} nodes, {} edges -> {}",
                graph.nodes.len(),
                graph.edges.len(),
                out.display()
            );
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
