//! Checks the predicate hierarchy on the three-vertex path over {0,1}.

use iassl::verify::verify;
use iassl::{Graph, GroundSet, LabeledGraph};

fn main() -> iassl::Result<()> {
    let x = GroundSet::parse("0,1")?;
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)])?;
    let labels = vec![x.label(&[1])?, x.label(&[0])?, x.label(&[0, 1])?];
    let g = LabeledGraph::with_labels(g, x, labels)?;

    let report = verify(&g)?;
    println!("IASL {}  IASI {}  IASGL {}", report.is_iasl, report.is_iasi, report.is_iasgl);
    println!("IASSL {}  IASSI {}  kappa {}", report.is_iassl, report.is_iassi, report.kappa);
    for f in &report.findings {
        println!("  {:<44} {:?} {}", f.name, f.outcome, f.detail);
    }
    Ok(())
}
