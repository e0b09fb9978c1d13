//! Writes the IASSL construction over {0,1,2} as Graphviz DOT to stdout.
//!
//! cargo run --example export_dot | dot -Tsvg > g.svg

use iassl::construct::construct_iassl_graph;
use iassl::io::export_dot;
use iassl::GroundSet;

fn main() -> iassl::Result<()> {
    let t = construct_iassl_graph(&GroundSet::parse("0,1,2")?)?;
    print!("{}", export_dot(&t.graph)?);
    Ok(())
}
