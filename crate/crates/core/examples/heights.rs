//! Relative heights with the fold trace.
//!
//! cargo run --example heights

use cmpp::diagram::{CmppPartition, DiagramConfig, Part, Variant};
use cmpp::heights::{height_profile, relative_heights_traced};

fn main() -> cmpp::Result<()> {
    let config = DiagramConfig::single(3, 2, Variant::Standard)?;
    let parts = [(3, 0), (7, 1), (14, 2), (23, 2), (26, 2), (34, 1)]
        .into_iter()
        .map(|(m, a)| Part::new(m, a))
        .collect();
    let partition = CmppPartition::new(config, parts)?;
    let (heights, trace) = relative_heights_traced(&partition)?;

    for (p, h) in partition.parts().iter().zip(heights.heights()) {
        println!("{:>3} (absolute {}) -> relative {h}", p.magnitude, p.absolute_height);
    }
    for f in &trace.folds {
        println!("round {}: fold at {} (virtual {}), shift {}", f.round, f.magnitude, f.virtual_magnitude, f.shift);
    }
    println!("profile {}", height_profile(&heights));
    Ok(())
}
