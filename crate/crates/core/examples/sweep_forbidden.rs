//! Sweeps cycles, complete graphs and K_2,2 against every ground set with
//! |X| <= 3 and max(X) <= 4, looking for IASSLs.

use iassl::families::{complete_bipartite, Family};
use iassl::search::{find_labelings, ground_sets, sweep_graphs, GroundBounds, SearchOptions};
use iassl::Predicate;

fn main() -> iassl::Result<()> {
    let bounds = GroundBounds {
        max_size: 3,
        max_value: 4,
    };
    let opts = SearchOptions {
        parallel: true,
        ..SearchOptions::new(Predicate::Iassl)
    };
    let mut rows = sweep_graphs(Family::Cycles, 3..=5, bounds, &opts)?;
    rows.extend(sweep_graphs(Family::Complete, 3..=4, bounds, &opts)?);
    for r in &rows {
        if r.decision {
            println!("{} over {} has an IASSL", r.graph, r.ground);
        }
    }
    println!("{} cells, {} with an IASSL", rows.len(), rows.iter().filter(|r| r.decision).count());

    let k22 = complete_bipartite(2, 2);
    let hits = ground_sets(3, 4)
        .iter()
        .filter(|x| find_labelings(&k22.graph, x, &opts).is_ok_and(|r| r.found()))
        .count();
    println!("{}: {hits} ground sets with an IASSL", k22.name);
    Ok(())
}
