//! Partitions under frequency conditions against the multi-sum series.
//!
//! cargo run --example frequency_conditions

use cmpp::diagram::{enumerate_admissible, frequency_condition_counts, DiagramConfig, FrequencyCondition, Variant};
use cmpp::verify::{verify, VerifyFamily, VerifyRequest};

fn main() -> cmpp::Result<()> {
    for (k0, k1) in [(0, 1), (1, 0), (1, 1), (2, 1)] {
        let config = DiagramConfig::new(1, vec![k0, k1], Variant::Standard)?;
        let cmpp = enumerate_admissible(&config, 20, None);
        let rrg = frequency_condition_counts(FrequencyCondition::Rrg, k0 + k1, k1 + 1, 20)?;
        println!("k = ({k0}, {k1}): diagram and frequency counts agree: {}", cmpp == rrg);
    }
    for ell in 2..=3 {
        for a in 1..=ell + 1 {
            let r = verify(&VerifyRequest::new(VerifyFamily::Bressoud, ell, a, 20))?;
            println!("bressoud l={ell} a={a}: {}", if r.pass { "match" } else { "MISMATCH" });
        }
    }
    Ok(())
}
