//! Brute-force enumeration of admissible partitions.
//!
//! cargo run --example enumerate

use cmpp::diagram::{enumerate_admissible, for_each_admissible, DiagramConfig, Variant};

fn main() -> cmpp::Result<()> {
    let config = DiagramConfig::single(2, 1, Variant::Standard)?;
    let counts = enumerate_admissible(&config, 15, None);
    println!("l = 2, k_1 = 1, totals by weight: {:?}", counts.totals());

    println!("partitions of weight 8:");
    for_each_admissible(&config, 8, None, |parts| {
        if parts.iter().map(|p| p.magnitude).sum::<usize>() == 8 {
            let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            println!("  {}", s.join(" + "));
        }
    });

    let general = DiagramConfig::new(1, vec![1, 2], Variant::Standard)?;
    println!("l = 1, k = (1, 2): {:?}", enumerate_admissible(&general, 10, None).totals());
    Ok(())
}
