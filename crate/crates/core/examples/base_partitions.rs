//! Base partitions and their weights for every profile with at most two parts.
//!
//! cargo run --example base_partitions

use cmpp::bijection::{base_partition, base_weight, family_of};
use cmpp::diagram::{DiagramConfig, Variant};
use cmpp::qseries::HeightProfile;

fn main() -> cmpp::Result<()> {
    let ell = 3;
    for variant in [Variant::Standard, Variant::Star, Variant::StarStar] {
        for i in 0..=ell {
            let config = DiagramConfig::single(ell, i, variant)?;
            for profile in HeightProfile::all_up_to(ell, 2) {
                let base = base_partition(&config, &profile)?;
                let w = base_weight(family_of(variant), ell, i, &profile)?;
                println!("{variant:>9} i={i} {profile}: {base} weight {w}");
            }
        }
    }
    Ok(())
}
