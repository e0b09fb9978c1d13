//! Runs the claim audit and prints one verdict line per claim.
//!
//! cargo run --release --example audit -- [xmax] [xsize] [nmax]

use iassl::audit::{run_full_audit, AuditBounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let d = AuditBounds::default();
    let bounds = AuditBounds {
        xmax: args.first().map_or(d.xmax, |&v| v as u32),
        xsize: args.get(1).copied().unwrap_or(d.xsize),
        nmax: args.get(2).copied().unwrap_or(d.nmax),
    };
    let report = run_full_audit(bounds)?;
    println!(
        "{} instances, {} cells, {} IASGLs",
        report.corpus.instances, report.corpus.cells, report.corpus.iasgl_instances
    );
    for c in &report.claims {
        println!("{:<42} {:<10} {:>6}/{:<6} {:?}", c.id, format!("{:?}", c.form), c.passes, c.instances_tested, c.verdict);
        if let Some(w) = c.witnesses.first() {
            println!("    e.g. {}: {}", w.source, w.detail);
        }
    }
    Ok(())
}
