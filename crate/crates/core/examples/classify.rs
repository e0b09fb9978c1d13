//! Sum sets and non-sum-sets of a ground set.
//!
//! cargo run --example classify -- 0,1,2

use iassl::{classify_powerset, GroundSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0,1,2".into());
    let x = GroundSet::parse(&arg)?;
    let class = classify_powerset(&x)?;

    let show = |sets: &[iassl::LabelSet]| sets.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("X = {x}, {} non-empty subsets", x.powerset_size());
    println!("non-sum-sets (rho = {}): {}", class.rho(), show(class.non_sumsets()));
    println!("B-family (rho' = {}): {}", class.rho_prime(), show(class.b_family()));
    println!("sum sets:");
    for (s, decomps) in class.decompositions() {
        let parts: Vec<String> = decomps.iter().map(|(b, c)| format!("{b}+{c}")).collect();
        println!("  {s} = {}", parts.join(" = "));
    }
    Ok(())
}
