//! Decomposition into base partition and vector partition, and back.
//!
//! cargo run --example decompose

use cmpp::bijection::{advance, retreat};
use cmpp::diagram::{admissible_partitions, CmppPartition, DiagramConfig, Part, Variant};

fn main() -> cmpp::Result<()> {
    let config = DiagramConfig::single(3, 2, Variant::Standard)?;
    let parts = [(3, 0), (7, 1), (14, 2), (23, 2), (26, 2), (34, 1)]
        .into_iter()
        .map(|(m, a)| Part::new(m, a))
        .collect();
    let partition = CmppPartition::new(config, parts)?;
    let d = retreat(&partition)?;
    println!("{partition} (weight {})", partition.weight());
    println!("  profile {}", d.profile);
    println!("  base    {} (weight {})", d.base, d.base.weight());
    println!("  vector  {}", d.vector);
    assert_eq!(advance(&d.base, &d.vector)?, partition);

    let star = DiagramConfig::single(3, 1, Variant::Star)?;
    let all = admissible_partitions(&star, 14);
    for p in &all {
        let d = retreat(p)?;
        assert_eq!(&advance(&d.base, &d.vector)?, p);
    }
    println!("star, l = 3, i = 1: {} partitions of weight <= 14 round-trip", all.len());
    Ok(())
}
