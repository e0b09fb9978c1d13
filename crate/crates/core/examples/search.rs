//! Enumerates every IASSL of P_3 over {0,1}, then finds the smallest ground
//! set for a few small graphs.

use iassl::families::{cycle, edge_plus_isolated, path, star};
use iassl::search::{find_labelings, min_ground_set, GroundBounds, SearchOptions};
use iassl::{GroundSet, Predicate};

fn main() -> iassl::Result<()> {
    let p3 = path(3);
    let x = GroundSet::parse("0,1")?;
    let r = find_labelings(&p3.graph, &x, &SearchOptions::new(Predicate::Iassl).all())?;
    println!("{} over {x}: {} solutions, {} nodes", p3.name, r.solutions.len(), r.nodes_expanded);
    for sol in &r.solutions {
        let shown: Vec<String> = sol.iter().map(ToString::to_string).collect();
        println!("  {}", shown.join(" "));
    }

    let bounds = GroundBounds {
        max_size: 3,
        max_value: 4,
    };
    for (g, p) in [
        (path(3), Predicate::Iassl),
        (star(3), Predicate::Iassl),
        (cycle(4), Predicate::Iassl),
        (edge_plus_isolated(6), Predicate::Iassi),
    ] {
        let found = min_ground_set(&g.graph, bounds, &SearchOptions::new(p))?;
        println!("{:<8} {p}: {}", g.name, found.map_or("none".into(), |x| x.to_string()));
    }
    Ok(())
}
