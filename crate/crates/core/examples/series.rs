//! Truncated generating functions: the Rogers-Ramanujan case and a variant series.
//!
//! cargo run --example series

use cmpp::qseries::{gaussian_binomial, series_for_family, SeriesFamily};

fn main() -> cmpp::Result<()> {
    let rr = series_for_family(SeriesFamily::Main, 1, 1, 20, 20)?;
    println!("l = 1, i = 1 at z = 1: {}", rr.at_z_one());

    let s = series_for_family(SeriesFamily::Star, 3, 2, 25, 6)?;
    for j in 0..=4 {
        println!("star l = 3, i = 2, [z^{j}]: {}", s.z_coefficient(j).expect("within truncation"));
    }

    println!("[6 over 3] = {}", gaussian_binomial(6, 3, 12)?);
    Ok(())
}
