//! Builds IASSL and IASSI witnesses for a ground set and prints the traces.
//!
//! cargo run --example construct -- 0,1,2

use iassl::construct::{construct, Cover, Mode};
use iassl::GroundSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0,1,2".into());
    let x = GroundSet::parse(&arg)?;
    for mode in [Mode::Iassl, Mode::Iassi] {
        let t = construct(&x, mode)?;
        let s = t.minimality_stats();
        println!(
            "{:?}: {} vertices, {} edges, rho {}, rho' {}, {} pendants, {} isolated",
            mode, s.n_vertices, s.n_edges, s.rho, s.rho_prime, s.pendant_count, s.isolated_count
        );
        for entry in &t.coverage {
            let how = match &entry.cover {
                Cover::Vertex { vertex } => format!("vertex {vertex}"),
                Cover::Edge { edge, summands } => format!("edge {}-{} as {}+{}", edge.0, edge.1, summands.0, summands.1),
                Cover::Pendant { vertex, hub } => format!("pendant {vertex} on {hub}"),
                Cover::Isolated { vertex } => format!("isolated {vertex}"),
            };
            println!("  {:<10} {how}", entry.set.to_string());
        }
    }
    Ok(())
}
